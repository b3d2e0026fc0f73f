#include "cohit/invariant.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "cohit/errors.hpp"

namespace cohit {

Monomial rho_swap(int j, const Monomial& m) {
    std::vector<Exponent> e = m.exponents();
    std::swap(e[static_cast<std::size_t>(j - 1)], e[static_cast<std::size_t>(j)]);
    return Monomial(std::move(e));
}

Poly rho_apply(int j, const Poly& f) {
    const int s = f.arity();
    if (j < 1 || j > s) throw std::invalid_argument("rho_apply: generator index out of range");
    Poly out(s);
    if (j < s) {
        for (const Monomial& m : f.terms())
            out.add_monomial(rho_swap(j, m));
        return out;
    }
    // j == s: substitute x1 -> x1 + x2, binomial expansion over GF(2)
    for (const Monomial& m : f.terms()) {
        std::uint64_t a1 = m.exponent(0);
        for (std::uint64_t t = 0; t <= a1; ++t) {
            if ((t & (a1 - t)) != 0) continue;  // C(a1, t) even
            std::vector<Exponent> e = m.exponents();
            std::uint64_t x2 = static_cast<std::uint64_t>(e[1]) + (a1 - t);
            if (x2 > kMaxExponent) throw resource_limit_error("rho expansion exceeds exponent bound");
            e[0] = static_cast<Exponent>(t);
            e[1] = static_cast<Exponent>(x2);
            out.add_monomial(Monomial(std::move(e)));
        }
    }
    return out;
}

bool GeneratorAction::squares_to_identity() const {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        // row i of M^2 = sum of rows k with M[i][k] = 1
        BitRow acc(n);
        for (std::size_t k = 0; k < n; ++k)
            if (rows[i].test(k)) acc.xor_with(rows[k]);
        for (std::size_t k = 0; k < n; ++k)
            if (acc.test(k) != (k == i)) return false;
    }
    return true;
}

GeneratorAction generator_action(int j, const CohitBasis& basis, const CohitContext& ctx) {
    if (basis.s != ctx.s() || basis.n != ctx.n())
        throw std::invalid_argument("generator_action: basis does not match context");
    if (basis.part != BasisPart::full)
        throw std::invalid_argument("generator_action: the action needs a full-part basis");

    std::unordered_map<Monomial, std::uint32_t, MonomialHash> position;
    position.reserve(basis.monomials.size() * 2);
    for (std::uint32_t i = 0; i < basis.monomials.size(); ++i)
        position.emplace(basis.monomials[i], i);

    GeneratorAction act;
    act.j = j;
    act.rows.reserve(basis.monomials.size());
    for (const Monomial& b : basis.monomials) {
        Poly image = rho_apply(j, Poly::from_monomial(b));
        BitRow coords(basis.monomials.size());
        for (const Monomial& m : ctx.reduce_to_admissible(image)) {
            auto it = position.find(m);
            if (it != position.end()) {
                coords.flip(it->second);
            } else if (!basis.weight_filter) {
                throw std::logic_error("generator_action: residue leaves an unfiltered basis");
            }
            // weight-filtered: residue terms of other weights project to zero
        }
        act.rows.push_back(std::move(coords));
    }
    return act;
}

InvariantReport invariant_space(const CohitBasis& basis, InvariantGroup group,
                                const CohitContext& ctx) {
    const int s = ctx.s();
    const std::size_t nb = basis.monomials.size();
    InvariantReport rep;
    rep.s = s;
    rep.n = ctx.n();
    rep.omega = basis.weight_filter;
    rep.group = group;

    const int jmax = group == InvariantGroup::gl ? s : s - 1;
    EchelonAccumulator acc(nb);
    for (int j = 1; j <= jmax; ++j) {
        GeneratorAction act = generator_action(j, basis, ctx);
        // fixed classes satisfy gamma^T (M + I) = 0, i.e. (M^T + I) gamma = 0
        std::vector<BitRow> transposed(nb, BitRow(nb));
        for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t i = 0; i < nb; ++i)
                if (act.rows[k].test(i)) transposed[i].set(k);
        for (std::size_t i = 0; i < nb; ++i) {
            transposed[i].flip(i);
            acc.insert(transposed[i]);
        }
    }
    acc.compact();

    std::vector<std::uint64_t> free_cols = acc.non_pivot_columns();
    rep.dimension = free_cols.size();
    for (std::uint64_t c : free_cols) {
        // kernel vector: free coordinate c = 1, pivot p = bit c of its row
        std::vector<Monomial> cls;
        for (std::size_t i = 0; i < nb; ++i) {
            bool bit;
            if (i == c) {
                bit = true;
            } else if (acc.is_pivot(i)) {
                bit = acc.row_for_pivot(i).test(c);
            } else {
                bit = false;
            }
            if (bit) cls.push_back(basis.monomials[i]);
        }
        rep.generators.push_back(std::move(cls));
    }
    return rep;
}

}  // namespace cohit
