#include "cohit/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cohit/errors.hpp"

namespace cohit {

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (Exponent a : exps_) d += a;
    return d;
}

bool Monomial::all_positive() const {
    for (Exponent a : exps_)
        if (a == 0) return false;
    return !exps_.empty();
}

std::string Monomial::text() const {
    std::string out;
    for (int i = 0; i < arity(); ++i) {
        Exponent a = exps_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (a > 1) {
            out += '^';
            out += std::to_string(a);
        }
    }
    return out.empty() ? "1" : out;
}

Monomial Monomial::parse(std::string_view text, int arity) {
    if (arity < 1) throw std::invalid_argument("monomial arity must be >= 1");
    std::vector<Exponent> exps(static_cast<std::size_t>(arity), 0);
    // strip spaces
    std::string trimmed;
    trimmed.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') trimmed += c;
    if (trimmed.empty()) throw std::invalid_argument("empty monomial text");
    if (trimmed == "1") return Monomial(std::move(exps));

    std::size_t pos = 0;
    while (pos < trimmed.size()) {
        if (trimmed[pos] != 'x')
            throw std::invalid_argument("bad monomial factor in '" + std::string(text) + "'");
        ++pos;
        std::size_t idx_end = pos;
        while (idx_end < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[idx_end])))
            ++idx_end;
        if (idx_end == pos) throw std::invalid_argument("missing variable index in '" + std::string(text) + "'");
        unsigned long var = std::stoul(trimmed.substr(pos, idx_end - pos));
        if (var < 1 || var > static_cast<unsigned long>(arity))
            throw std::invalid_argument("variable index out of range in '" + std::string(text) + "'");
        pos = idx_end;
        std::uint64_t e = 1;
        if (pos < trimmed.size() && trimmed[pos] == '^') {
            ++pos;
            std::size_t exp_end = pos;
            while (exp_end < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[exp_end])))
                ++exp_end;
            if (exp_end == pos) throw std::invalid_argument("missing exponent in '" + std::string(text) + "'");
            e = std::stoull(trimmed.substr(pos, exp_end - pos));
            pos = exp_end;
        }
        if (e > kMaxExponent) throw resource_limit_error("exponent exceeds configured bound");
        if (exps[var - 1] != 0)
            throw std::invalid_argument("repeated variable in '" + std::string(text) + "'");
        exps[var - 1] = static_cast<Exponent>(e);
        if (pos < trimmed.size()) {
            if (trimmed[pos] != '*')
                throw std::invalid_argument("expected '*' in '" + std::string(text) + "'");
            ++pos;
        }
    }
    return Monomial(std::move(exps));
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (Exponent a : m.exponents()) {
        h ^= a;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

WeightVector::WeightVector(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

WeightVector WeightVector::parse(std::string_view text) {
    std::string t(text);
    std::erase(t, ' ');
    if (!t.empty() && t.front() == '(') t.erase(t.begin());
    if (!t.empty() && t.back() == ')') t.pop_back();
    std::vector<std::uint32_t> entries;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("bad weight vector text");
        entries.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return WeightVector(std::move(entries));
}

std::uint64_t WeightVector::degree() const {
    std::uint64_t d = 0;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        d += (1ull << k) * entries_[k];
    return d;
}

std::string WeightVector::text() const {
    std::string out = "(";
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(entries_[k]);
    }
    out += ')';
    return out;
}

WeightVector weight_vector(const Monomial& m) {
    std::vector<std::uint32_t> w;
    Exponent mx = 0;
    for (Exponent a : m.exponents()) mx = std::max(mx, a);
    for (int j = 0; (1u << j) <= mx && j < 32; ++j) {
        std::uint32_t c = 0;
        for (Exponent a : m.exponents())
            c += (a >> j) & 1u;
        w.push_back(c);
    }
    return WeightVector(std::move(w));
}

std::strong_ordering compare_weights(const WeightVector& a, const WeightVector& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t n = std::max(ea.size(), eb.size());
    for (std::size_t k = 0; k < n; ++k) {
        std::uint32_t xa = k < ea.size() ? ea[k] : 0;
        std::uint32_t xb = k < eb.size() ? eb[k] : 0;
        if (xa != xb) return xa <=> xb;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare(const Monomial& u, const Monomial& v) {
    if (u.arity() != v.arity())
        throw std::invalid_argument("compare: arity mismatch");
    if (u.degree() != v.degree())
        throw std::invalid_argument("compare: degree mismatch");
    auto wc = compare_weights(weight_vector(u), weight_vector(v));
    if (wc != std::strong_ordering::equal) return wc;
    return std::lexicographical_compare_three_way(
        u.exponents().begin(), u.exponents().end(),
        v.exponents().begin(), v.exponents().end());
}

int alpha(std::uint64_t n) {
    return std::popcount(n);
}

int mu(std::uint64_t n) {
    if (n == 0) return 0;
    // mu(n) is the least r with alpha(n + r) <= r: n + r must split into r
    // powers of two, each >= 2, which the minimal r always admits.
    int r = 1;
    while (alpha(n + static_cast<std::uint64_t>(r)) > r) ++r;
    return r;
}

namespace {

// exponent -> d with exponent == 2^d - 1, or -1
int spike_height(std::uint64_t e) {
    if ((e & (e + 1)) != 0) return -1;
    return std::popcount(e);
}

}  // namespace

bool is_spike(const Monomial& m) {
    for (Exponent a : m.exponents())
        if (spike_height(a) < 0) return false;
    return true;
}

bool is_minimal_spike(const Monomial& m) {
    std::vector<int> d;
    bool seen_zero = false;
    for (Exponent a : m.exponents()) {
        int h = spike_height(a);
        if (h < 0) return false;
        if (h == 0) {
            seen_zero = true;
        } else {
            if (seen_zero) return false;  // nonzero exponents must form a prefix
            d.push_back(h);
        }
    }
    std::size_t r = d.size();
    for (std::size_t i = 0; i + 2 < r; ++i)
        if (d[i] <= d[i + 1]) return false;
    if (r >= 2 && d[r - 2] < d[r - 1]) return false;
    return true;
}

std::optional<Monomial> minimal_spike(int s, std::uint64_t n) {
    if (s < 1) throw std::invalid_argument("minimal_spike: s must be >= 1");
    int r = mu(n);
    if (r > s) return std::nullopt;
    if (n == 0) return Monomial(std::vector<Exponent>(static_cast<std::size_t>(s), 0));

    // Search for d_1 > ... > d_{r-1} >= d_r >= 1 with sum(2^d_i - 1) = n.
    std::vector<int> d;
    std::function<bool(std::uint64_t)> rec = [&](std::uint64_t rem) -> bool {
        int slot = static_cast<int>(d.size());
        if (slot == r) return rem == 0;
        int remaining = r - slot;
        int hi = d.empty() ? 63 : (slot == r - 1 ? d.back() : d.back() - 1);
        for (int h = hi; h >= 1; --h) {
            std::uint64_t v = (1ull << h) - 1;
            if (v > rem) continue;
            // smallest completion: remaining-1 further slots each >= 1
            if (rem - v < static_cast<std::uint64_t>(remaining - 1)) continue;
            d.push_back(h);
            if (rec(rem - v)) return true;
            d.pop_back();
        }
        return false;
    };
    if (!rec(n)) return std::nullopt;  // unreachable for mu(n) <= s

    std::vector<Exponent> exps(static_cast<std::size_t>(s), 0);
    for (std::size_t i = 0; i < d.size(); ++i)
        exps[i] = static_cast<Exponent>((1ull << d[i]) - 1);
    return Monomial(std::move(exps));
}

std::uint64_t monomial_count(int s, std::uint64_t n) {
    // C(n+s-1, s-1) with overflow detection
    std::uint64_t result = 1;
    for (int k = 1; k <= s - 1; ++k) {
        // result *= (n + k); result /= k  -- keep exact by dividing gcd first
        std::uint64_t num = n + static_cast<std::uint64_t>(k);
        std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(k));
        std::uint64_t r2 = result / g;
        std::uint64_t den = static_cast<std::uint64_t>(k) / g;
        std::uint64_t num2 = num / den;  // exact: k! divides any k consecutive product
        if (num % den != 0) {
            // fall back: multiply first, then divide (still exact stepwise)
            num2 = num;
            if (r2 > UINT64_MAX / num2) throw resource_limit_error("monomial count overflows 64 bits");
            result = r2 * num2;
            if (result % den != 0) throw std::logic_error("binomial arithmetic error");
            result /= den;
            continue;
        }
        if (r2 != 0 && num2 > UINT64_MAX / r2)
            throw resource_limit_error("monomial count overflows 64 bits");
        result = r2 * num2;
    }
    return result;
}

std::vector<Monomial> enumerate_monomials(int s, std::uint64_t n, std::uint64_t max_count) {
    if (s < 1) throw std::invalid_argument("enumerate_monomials: s must be >= 1");
    if (n > kMaxExponent) throw resource_limit_error("degree exceeds exponent bound");
    std::uint64_t count = monomial_count(s, n);
    if (count > max_count)
        throw resource_limit_error("monomial count " + std::to_string(count) +
                                   " exceeds ceiling " + std::to_string(max_count));
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<Exponent> exps(static_cast<std::size_t>(s), 0);
    std::function<void(int, std::uint64_t)> rec = [&](int i, std::uint64_t rem) {
        if (i == s - 1) {
            exps[static_cast<std::size_t>(i)] = static_cast<Exponent>(rem);
            out.emplace_back(exps);
            return;
        }
        for (std::uint64_t a = 0; a <= rem; ++a) {
            exps[static_cast<std::size_t>(i)] = static_cast<Exponent>(a);
            rec(i + 1, rem - a);
        }
    };
    rec(0, n);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

std::vector<Monomial> enumerate_by_weight(int s, const WeightVector& w) {
    for (std::uint32_t e : w.entries())
        if (e > static_cast<std::uint32_t>(s))
            throw std::invalid_argument("weight entry exceeds arity");
    // choose, per bit level k, which w_k of the s variables carry bit k
    std::vector<Monomial> out;
    std::vector<Exponent> exps(static_cast<std::size_t>(s), 0);
    const auto& entries = w.entries();
    std::function<void(std::size_t)> level = [&](std::size_t k) {
        if (k == entries.size()) {
            out.emplace_back(exps);
            return;
        }
        std::uint32_t need = entries[k];
        std::vector<int> pick;
        std::function<void(int, std::uint32_t)> choose = [&](int start, std::uint32_t left) {
            if (left == 0) {
                level(k + 1);
                return;
            }
            for (int i = start; i <= s - static_cast<int>(left); ++i) {
                exps[static_cast<std::size_t>(i)] |= (1u << k);
                choose(i + 1, left - 1);
                exps[static_cast<std::size_t>(i)] &= ~(1u << k);
            }
        };
        choose(0, need);
    };
    level(0);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

DegreeProfile degree_profile(int s, std::uint64_t n) {
    DegreeProfile p;
    p.s = s;
    p.n = n;
    p.mu = mu(n);
    p.alpha_n = alpha(n);
    p.alpha_n_plus_mu = alpha(n + static_cast<std::uint64_t>(p.mu));
    p.minimal_spike = minimal_spike(s, n);
    return p;
}

}  // namespace cohit
