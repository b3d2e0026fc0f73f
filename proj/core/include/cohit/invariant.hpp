#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohit/cohit.hpp"
#include "cohit/steenrod.hpp"

namespace cohit {

// The group generators acting on P_s: for j < s, rho_j swaps variables j
// and j+1; rho_s substitutes x1 -> x1 + x2. Degree-preserving, GF(2)-linear
// and multiplicative.
Poly rho_apply(int j, const Poly& f);
Monomial rho_swap(int j, const Monomial& m);  // j < arity

// Matrix of rho_j on a cohit basis: row i holds the coordinates of
// [rho_j(basis[i])], reduced to admissible coordinates and projected to the
// basis's weight block when the basis is weight-filtered.
struct GeneratorAction {
    int j = 0;
    std::vector<BitRow> rows;  // square, width = basis size

    // rho_j is an involution on classes, so the matrix squares to identity
    bool squares_to_identity() const;
};

GeneratorAction generator_action(int j, const CohitBasis& basis, const CohitContext& ctx);

enum class InvariantGroup { sigma, gl };

struct InvariantReport {
    int s = 0;
    std::uint64_t n = 0;
    std::optional<WeightVector> omega;
    InvariantGroup group = InvariantGroup::sigma;
    std::uint64_t dimension = 0;
    // each spanning class as the set of basis monomials with coefficient 1
    std::vector<std::vector<Monomial>> generators;
};

// Fixed points of the generator actions on the given basis: nullspace of
// the stacked (action^T + identity) over GF(2), for j = 1..s-1 (sigma) or
// j = 1..s (gl).
InvariantReport invariant_space(const CohitBasis& basis, InvariantGroup group,
                                const CohitContext& ctx);

}  // namespace cohit
