#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohit/cohit.hpp"
#include "cohit/monomial.hpp"

namespace cohit {

// The squaring operation between cohit spaces: [x1...xs * y^2] -> [y],
// zero on classes of monomials with an even exponent.
std::optional<Monomial> kameko_image(const Monomial& m);

struct KamekoReport {
    int s = 0;
    std::uint64_t n = 0;  // target degree
    std::uint64_t source_degree = 0;  // 2n + s
    std::uint64_t source_dim = 0;
    std::uint64_t target_dim = 0;
    std::uint64_t kernel_dim = 0;
    bool is_iso = false;
    int mu_source = 0;
    int mu_target = 0;
    std::string source_from;  // "computed" | "provided"
    std::string target_from;
};

// Kernel dimension is source_dim - target_dim (the squaring operation is
// onto). Dims are computed live unless provided by the caller (registry or
// cache value for the expensive side).
KamekoReport kameko_report(int s, std::uint64_t n, const RunConfig& cfg = {},
                           std::optional<std::uint64_t> known_source_dim = std::nullopt,
                           std::optional<std::uint64_t> known_target_dim = std::nullopt);

// For an odd source degree, the kernel is carried by the weight blocks with
// first entry < s; returns that block sum for cross-checking kernel_dim.
std::optional<std::uint64_t> kernel_dim_from_weights(const CohitContext& source_ctx);

// Insertion slot l plus a strictly increasing tail L = (l_1 < ... < l_r)
// with l < l_1, 0 <= r <= s-1.
struct EmbeddingSpec {
    int l = 1;
    std::vector<int> tail;  // may be empty

    void validate(int s) const;
};

// Variable-insertion embedding q_{(l,s)}: arity s-1 -> s, x_j fixed below
// slot l, shifted up from slot l on; slot l gets exponent 0.
Monomial insertion_embedding(int l, int s, const Monomial& m);

// The psi_{(l,L)} map: x_l^(2^r - 1) * q_{(l,s)}(m) / x_{(L,u)} when some u
// satisfies the digit conditions, zero otherwise. extend_u_to_r also admits
// u = r (empty trailing product in x_{(L,u)}).
std::optional<Monomial> psi_embedding(const EmbeddingSpec& spec, int s, const Monomial& m,
                                      bool extend_u_to_r = true);

// Spike-extension candidates: x_l^(2^d - 1) * q_{(l,s)}(x) over valid d
// (1 < d <= s, d != 3) and slots l, with x running over the provided
// positive-part admissible bases of arity s-1 at degree N+1-2^d.
// Deduplicated, ascending under compare.
std::vector<Monomial> spike_extension_candidates(
    int s, std::uint64_t n,
    const std::map<std::uint64_t, const CohitBasis*>& lower_arity_bases);

}  // namespace cohit
