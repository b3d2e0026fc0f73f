#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cohit/f2row.hpp"
#include "cohit/monomial.hpp"
#include "cohit/runconfig.hpp"
#include "cohit/steenrod.hpp"

namespace cohit {

// The fixed column universe at (s, N): all degree-N monomials ascending
// under compare. Matrix column indices always refer to this order, so
// pivot/non-pivot extraction lines up with admissibility.
class ColumnIndex {
public:
    ColumnIndex(int s, std::uint64_t n, std::uint64_t max_columns);

    int s() const { return s_; }
    std::uint64_t n() const { return n_; }
    std::uint64_t size() const { return columns_.size(); }
    const Monomial& monomial(std::uint64_t col) const { return columns_[col]; }
    const std::vector<Monomial>& columns() const { return columns_; }
    std::uint32_t index_of(const Monomial& m) const;  // throws if absent

    // contiguous [first, last) column range of a weight block, empty if the
    // weight is not realized at this degree
    std::pair<std::uint32_t, std::uint32_t> block_range(const WeightVector& w) const;
    // realized weights in block order with their ranges
    const std::vector<std::pair<WeightVector, std::pair<std::uint32_t, std::uint32_t>>>&
    blocks() const { return blocks_; }

    // tag for cache keys; bump if the column order ever changes
    static constexpr const char* order_version = "w1";

private:
    int s_;
    std::uint64_t n_;
    std::vector<Monomial> columns_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
    std::vector<std::pair<WeightVector, std::pair<std::uint32_t, std::uint32_t>>> blocks_;
};

struct SaturationEntry {
    std::uint64_t gen = 0;
    std::uint64_t family_rank = 0;      // incremental rank contributed by this family
    std::uint64_t cumulative_rank = 0;  // rank once this family is absorbed
};

struct DimResult {
    int s = 0;
    std::uint64_t n = 0;
    std::uint64_t column_count = 0;
    std::uint64_t hit_rank = 0;
    std::uint64_t dimension = 0;
    bool wood_fast_path = false;
    std::vector<std::uint64_t> generator_set;
    std::vector<SaturationEntry> saturation;
};

enum class BasisPart { full, zero_part, positive_part };

std::string part_name(BasisPart part);

struct CohitBasis {
    int s = 0;
    std::uint64_t n = 0;
    std::optional<WeightVector> weight_filter;
    BasisPart part = BasisPart::full;
    std::vector<Monomial> monomials;  // ascending under compare
    std::vector<std::uint64_t> generator_set;
    std::vector<SaturationEntry> saturation;
};

struct WeightDecomposition {
    int s = 0;
    std::uint64_t n = 0;
    // realized weights with nonzero cohit dimension, in block order
    std::vector<std::pair<WeightVector, std::uint64_t>> blocks;
    std::uint64_t total() const;
};

// One finished elimination at (s, N): column universe plus the echelon
// accumulator of the hit rows. Everything downstream (bases, weight blocks,
// admissibility and residue queries, group actions) reads from this.
class CohitContext {
public:
    static CohitContext build(int s, std::uint64_t n, const RunConfig& cfg = {},
                              std::optional<SqGeneratorSet> gens = std::nullopt);

    // Restore the accumulator from a cache blob and adopt it, verifying
    // width against the column universe.
    static CohitContext adopt(int s, std::uint64_t n, const RunConfig& cfg,
                              SqGeneratorSet gens, EchelonAccumulator acc,
                              std::vector<SaturationEntry> saturation = {});

    int s() const { return s_; }
    std::uint64_t n() const { return n_; }
    const ColumnIndex& columns() const { return *columns_; }
    const SqGeneratorSet& generators() const { return gens_; }
    const EchelonAccumulator& accumulator() const { return *acc_; }
    EchelonAccumulator& accumulator() { return *acc_; }

    DimResult dim() const;
    CohitBasis basis(BasisPart part = BasisPart::full,
                     std::optional<WeightVector> weight_filter = std::nullopt) const;
    WeightDecomposition by_weight() const;
    std::uint64_t block_dimension(const WeightVector& w) const;

    // true iff m's column is a non-pivot column
    bool is_admissible(const Monomial& m) const;

    // coordinates of [f] on the admissible basis: the admissible monomials
    // appearing with coefficient 1; empty iff f is hit
    std::vector<Monomial> reduce_to_admissible(const Poly& f) const;
    // raw canonical residue as a bit row over the column universe
    BitRow reduce_row(const Poly& f) const;

private:
    CohitContext() = default;
    int s_ = 0;
    std::uint64_t n_ = 0;
    SqGeneratorSet gens_;
    std::shared_ptr<ColumnIndex> columns_;
    std::shared_ptr<EchelonAccumulator> acc_;
    std::vector<SaturationEntry> saturation_;
};

// Dimension of the cohit space at (s, N). Takes the Wood fast path when
// mu(N) > s unless cfg.force_full_run is set.
DimResult dim_cohit(int s, std::uint64_t n, const RunConfig& cfg = {},
                    std::optional<SqGeneratorSet> gens = std::nullopt);

// Partition of a basis by "some exponent zero" / "all exponents positive".
std::pair<CohitBasis, CohitBasis> split_zero_positive(const CohitBasis& basis);

// Zero-part dimension from positive-part dimensions of fewer variables:
// sum over mu(deg w) <= k <= s-1 of C(s,k) * positive_dims[k].
std::uint64_t zero_part_dim_formula(int s, const WeightVector& w,
                                    const std::map<int, std::uint64_t>& positive_dims);

// (2^(s+1) - 1) * dim_s; arithmetic only, hypotheses are the caller's.
std::uint64_t stability_dim(int s, std::uint64_t dim_s);

}  // namespace cohit
