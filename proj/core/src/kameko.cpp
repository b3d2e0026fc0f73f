#include "cohit/kameko.hpp"

#include <algorithm>
#include <stdexcept>

#include "cohit/errors.hpp"

namespace cohit {

std::optional<Monomial> kameko_image(const Monomial& m) {
    std::vector<Exponent> out(m.exponents().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Exponent a = m.exponents()[i];
        if ((a & 1) == 0) return std::nullopt;
        out[i] = (a - 1) / 2;
    }
    return Monomial(std::move(out));
}

KamekoReport kameko_report(int s, std::uint64_t n, const RunConfig& cfg,
                           std::optional<std::uint64_t> known_source_dim,
                           std::optional<std::uint64_t> known_target_dim) {
    KamekoReport r;
    r.s = s;
    r.n = n;
    r.source_degree = 2 * n + static_cast<std::uint64_t>(s);
    r.mu_source = mu(r.source_degree);
    r.mu_target = mu(n);

    if (known_target_dim) {
        r.target_dim = *known_target_dim;
        r.target_from = "provided";
    } else {
        r.target_dim = dim_cohit(s, n, cfg).dimension;
        r.target_from = "computed";
    }
    if (known_source_dim) {
        r.source_dim = *known_source_dim;
        r.source_from = "provided";
    } else {
        r.source_dim = dim_cohit(s, r.source_degree, cfg).dimension;
        r.source_from = "computed";
    }
    if (r.source_dim < r.target_dim)
        throw std::logic_error("kameko_report: source dimension below target dimension");
    r.kernel_dim = r.source_dim - r.target_dim;
    r.is_iso = r.mu_source == s;
    if (r.is_iso && r.kernel_dim != 0)
        throw std::logic_error("kameko_report: mu criterion asserts an isomorphism but the "
                               "kernel is nonzero");
    return r;
}

std::optional<std::uint64_t> kernel_dim_from_weights(const CohitContext& source_ctx) {
    if (source_ctx.n() % 2 == 0) return std::nullopt;
    std::uint64_t total = 0;
    for (const auto& [w, d] : source_ctx.by_weight().blocks) {
        if (!w.entries().empty() &&
            w.entries()[0] < static_cast<std::uint32_t>(source_ctx.s()))
            total += d;
    }
    return total;
}

void EmbeddingSpec::validate(int s) const {
    if (l < 1 || l > s) throw std::invalid_argument("embedding slot out of range");
    int prev = l;
    if (static_cast<int>(tail.size()) > s - 1)
        throw std::invalid_argument("embedding tail too long");
    for (int t : tail) {
        if (t <= prev || t > s) throw std::invalid_argument("embedding tail must increase from the slot");
        prev = t;
    }
}

Monomial insertion_embedding(int l, int s, const Monomial& m) {
    if (m.arity() != s - 1)
        throw std::invalid_argument("insertion_embedding: arity must be s-1");
    if (l < 1 || l > s) throw std::invalid_argument("insertion_embedding: slot out of range");
    std::vector<Exponent> out(static_cast<std::size_t>(s), 0);
    for (int j = 0; j < s - 1; ++j) {
        int target = (j + 1) < l ? j : j + 1;  // variables at or past the slot shift up
        out[static_cast<std::size_t>(target)] = m.exponent(j);
    }
    return Monomial(std::move(out));
}

std::optional<Monomial> psi_embedding(const EmbeddingSpec& spec, int s, const Monomial& m,
                                      bool extend_u_to_r) {
    spec.validate(s);
    if (m.arity() != s - 1)
        throw std::invalid_argument("psi_embedding: arity must be s-1");
    const int r = static_cast<int>(spec.tail.size());
    if (r == 0) return insertion_embedding(spec.l, s, m);

    // a_{l_j - 1} in 1-based paper indexing = exponent(l_j - 2) here
    auto a_at = [&](int lj) -> std::uint64_t { return m.exponent(lj - 2); };
    auto digit = [](std::uint64_t v, int bit) -> int {
        return static_cast<int>((v >> bit) & 1);
    };
    const std::uint64_t two_r = 1ull << r;

    int found_u = 0;
    const int u_max = extend_u_to_r ? r : r - 1;
    for (int u = 1; u <= u_max; ++u) {
        bool ok = true;
        for (int j = 1; j < u && ok; ++j)
            ok = a_at(spec.tail[static_cast<std::size_t>(j - 1)]) + 1 == two_r;
        if (ok) ok = a_at(spec.tail[static_cast<std::size_t>(u - 1)]) + 1 > two_r;
        for (int d = 1; d <= u && ok; ++d)
            ok = digit(a_at(spec.tail[static_cast<std::size_t>(u - 1)]), r - d) == 1;
        for (int d = u + 1; d <= r && ok; ++d)
            ok = digit(a_at(spec.tail[static_cast<std::size_t>(d - 1)]), r - d) == 1;
        if (ok) {
            found_u = u;
            break;
        }
    }
    if (found_u == 0) return std::nullopt;

    Monomial q = insertion_embedding(spec.l, s, m);
    std::vector<Exponent> out = q.exponents();
    out[static_cast<std::size_t>(spec.l - 1)] = static_cast<Exponent>(two_r - 1);
    // divide by x_{(L,u)}
    auto subtract = [&](int var, std::uint64_t e) {
        std::size_t i = static_cast<std::size_t>(var - 1);
        if (out[i] < e) throw std::logic_error("psi_embedding: division fails");
        out[i] -= static_cast<Exponent>(e);
    };
    subtract(spec.tail[static_cast<std::size_t>(found_u - 1)],
             two_r - (1ull << (r - found_u)));  // 2^{r-1} + ... + 2^{r-u}
    for (int d = found_u + 1; d <= r; ++d)
        subtract(spec.tail[static_cast<std::size_t>(d - 1)], 1ull << (r - d));
    return Monomial(std::move(out));
}

std::vector<Monomial> spike_extension_candidates(
    int s, std::uint64_t n,
    const std::map<std::uint64_t, const CohitBasis*>& lower_arity_bases) {
    std::vector<Monomial> out;
    for (int d = 2; d <= s; ++d) {
        if (d == 3) continue;
        std::uint64_t spike_exp = (1ull << d) - 1;
        if (spike_exp > n) continue;
        std::uint64_t lower_degree = n + 1 - (1ull << d);
        auto it = lower_arity_bases.find(lower_degree);
        if (it == lower_arity_bases.end() || it->second == nullptr)
            throw std::invalid_argument("spike_extension_candidates: missing arity-" +
                                        std::to_string(s - 1) + " basis at degree " +
                                        std::to_string(lower_degree));
        const CohitBasis& basis = *it->second;
        if (basis.s != s - 1 || basis.n != lower_degree)
            throw std::invalid_argument("spike_extension_candidates: basis mismatch");
        for (int l = 1; l <= s; ++l) {
            for (const Monomial& x : basis.monomials) {
                Monomial q = insertion_embedding(l, s, x);
                std::vector<Exponent> e = q.exponents();
                e[static_cast<std::size_t>(l - 1)] = static_cast<Exponent>(spike_exp);
                out.emplace_back(std::move(e));
            }
        }
    }
    std::sort(out.begin(), out.end(), MonomialLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cohit
