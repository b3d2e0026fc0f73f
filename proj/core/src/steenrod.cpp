#include "cohit/steenrod.hpp"

#include <algorithm>
#include <stdexcept>

#include "cohit/errors.hpp"

namespace cohit {

namespace {

// exponent-lex order; total on equal-arity monomials of any degree
bool exp_lex_less(const Monomial& a, const Monomial& b) {
    return a.exponents() < b.exponents();
}

}  // namespace

Poly Poly::from_monomial(const Monomial& m) {
    Poly p(m.arity());
    p.terms_.push_back(m);
    return p;
}

void Poly::add_monomial(const Monomial& m) {
    if (m.arity() != arity_) throw std::invalid_argument("Poly: arity mismatch");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, exp_lex_less);
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.arity_ != arity_) throw std::invalid_argument("Poly: arity mismatch");
    if (other.terms_.empty()) return *this;
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = other.terms_.begin(), be = other.terms_.end();
    while (a != ae && b != be) {
        if (*a == *b) {
            ++a;
            ++b;  // cancel
        } else if (exp_lex_less(*a, *b)) {
            merged.push_back(*a++);
        } else {
            merged.push_back(*b++);
        }
    }
    merged.insert(merged.end(), a, ae);
    merged.insert(merged.end(), b, be);
    terms_ = std::move(merged);
    return *this;
}

Poly Poly::operator*(const Poly& other) const {
    if (other.arity_ != arity_) throw std::invalid_argument("Poly: arity mismatch");
    Poly out(arity_);
    for (const Monomial& u : terms_) {
        for (const Monomial& v : other.terms_) {
            std::vector<Exponent> e(static_cast<std::size_t>(arity_));
            for (int i = 0; i < arity_; ++i) {
                std::uint64_t sum = static_cast<std::uint64_t>(u.exponent(i)) + v.exponent(i);
                if (sum > kMaxExponent)
                    throw resource_limit_error("product exponent exceeds configured bound");
                e[static_cast<std::size_t>(i)] = static_cast<Exponent>(sum);
            }
            out.add_monomial(Monomial(std::move(e)));
        }
    }
    return out;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_.front().degree();
    for (const Monomial& m : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::uint64_t Poly::degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    std::uint64_t d = terms_.front().degree();
    for (const Monomial& m : terms_)
        if (m.degree() != d) throw std::logic_error("degree of inhomogeneous polynomial");
    return d;
}

std::string Poly::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Monomial& m : terms_) {
        if (!out.empty()) out += " + ";
        out += m.text();
    }
    return out;
}

void sq_expand(std::uint64_t i, std::span<const Exponent> exponents,
               const std::function<void(std::span<const Exponent>)>& fn) {
    const std::size_t s = exponents.size();
    std::vector<Exponent> term(exponents.begin(), exponents.end());
    // distribute i over the variables; C(a, k) is odd iff adding k to a-k
    // carries nowhere, i.e. (k & (a-k)) == 0
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t var, std::uint64_t rem) {
        if (var + 1 == s) {
            std::uint64_t a = exponents[var];
            if (rem <= a && (rem & (a - rem)) == 0) {
                std::uint64_t na = a + rem;
                if (na > kMaxExponent) throw resource_limit_error("Sq exponent exceeds bound");
                term[var] = static_cast<Exponent>(na);
                fn(term);
                term[var] = exponents[var];
            }
            return;
        }
        std::uint64_t a = exponents[var];
        for (std::uint64_t k = 0; k <= std::min<std::uint64_t>(rem, a); ++k) {
            if ((k & (a - k)) != 0) continue;
            std::uint64_t na = a + k;
            if (na > kMaxExponent) throw resource_limit_error("Sq exponent exceeds bound");
            term[var] = static_cast<Exponent>(na);
            rec(var + 1, rem - k);
        }
        term[var] = exponents[var];
    };
    if (s == 0) {
        if (i == 0) fn(term);
        return;
    }
    rec(0, i);
}

Poly sq_monomial(std::uint64_t i, const Monomial& m) {
    Poly out(m.arity());
    if (i == 0) {
        out.add_monomial(m);
        return out;
    }
    if (i > m.degree()) return out;  // unstable condition
    sq_expand(i, m.exponents(), [&](std::span<const Exponent> term) {
        out.add_monomial(Monomial(std::vector<Exponent>(term.begin(), term.end())));
    });
    return out;
}

Poly sq_poly(std::uint64_t i, const Poly& f) {
    Poly out(f.arity());
    for (const Monomial& m : f.terms())
        out += sq_monomial(i, m);
    return out;
}

SqGeneratorSet SqGeneratorSet::default_for(std::uint64_t n) {
    SqGeneratorSet g;
    for (std::uint64_t p = 1; p <= n && p != 0; p <<= 1)
        g.exponents.push_back(p);
    return g;
}

SqGeneratorSet SqGeneratorSet::parse(std::string_view text, std::uint64_t n) {
    SqGeneratorSet g;
    std::string item;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == ',') {
            if (!item.empty()) {
                g.exponents.push_back(std::stoull(item));
                item.clear();
            }
        } else if (text[pos] != ' ') {
            item += text[pos];
        }
    }
    std::sort(g.exponents.begin(), g.exponents.end());
    g.exponents.erase(std::unique(g.exponents.begin(), g.exponents.end()), g.exponents.end());
    g.validate(n);
    return g;
}

void SqGeneratorSet::validate(std::uint64_t n) const {
    for (std::uint64_t e : exponents) {
        if (e < 1 || e > n)
            throw std::invalid_argument("generator exponent " + std::to_string(e) +
                                        " outside [1, " + std::to_string(n) + "]");
        if ((e & (e - 1)) != 0)
            throw std::invalid_argument("generator exponent " + std::to_string(e) +
                                        " is not a power of two");
    }
}

std::string SqGeneratorSet::text() const {
    std::string out;
    for (std::uint64_t e : exponents) {
        if (!out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

std::uint64_t hit_row_count(int s, std::uint64_t n, const SqGeneratorSet& gens) {
    std::uint64_t total = 0;
    for (std::uint64_t g : gens.exponents)
        total += monomial_count(s, n - g);
    return total;
}

void for_each_hit_row(int s, std::uint64_t n, const SqGeneratorSet& gens,
                      const std::function<void(std::uint64_t, const Poly&)>& fn,
                      std::uint64_t max_source_count) {
    gens.validate(n);
    for (std::uint64_t g : gens.exponents) {
        for (const Monomial& m : enumerate_monomials(s, n - g, max_source_count)) {
            fn(g, sq_monomial(g, m));
        }
    }
}

}  // namespace cohit
