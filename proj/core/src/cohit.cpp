#include "cohit/cohit.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "cohit/errors.hpp"

namespace cohit {

std::string RunConfig::resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("HIT_CACHE_DIR"); env && *env) return env;
    return "./.hitcache";
}

ColumnIndex::ColumnIndex(int s, std::uint64_t n, std::uint64_t max_columns)
    : s_(s), n_(n), columns_(enumerate_monomials(s, n, max_columns)) {
    index_.reserve(columns_.size() * 2);
    for (std::uint32_t i = 0; i < columns_.size(); ++i)
        index_.emplace(columns_[i], i);
    // columns are weight-major, so each weight block is one contiguous run
    std::uint32_t start = 0;
    for (std::uint32_t i = 1; i <= columns_.size(); ++i) {
        if (i == columns_.size() ||
            weight_vector(columns_[i]) != weight_vector(columns_[start])) {
            blocks_.emplace_back(weight_vector(columns_[start]), std::make_pair(start, i));
            start = i;
        }
    }
}

std::uint32_t ColumnIndex::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
        throw std::invalid_argument("monomial " + m.text() + " is not a degree-" +
                                    std::to_string(n_) + " column");
    return it->second;
}

std::pair<std::uint32_t, std::uint32_t> ColumnIndex::block_range(const WeightVector& w) const {
    for (const auto& [bw, range] : blocks_)
        if (bw == w) return range;
    return {0, 0};
}

std::string part_name(BasisPart part) {
    switch (part) {
        case BasisPart::full: return "full";
        case BasisPart::zero_part: return "zero";
        case BasisPart::positive_part: return "positive";
    }
    return "?";
}

std::uint64_t WeightDecomposition::total() const {
    std::uint64_t t = 0;
    for (const auto& [w, d] : blocks) t += d;
    return t;
}

CohitContext CohitContext::build(int s, std::uint64_t n, const RunConfig& cfg,
                                 std::optional<SqGeneratorSet> gens) {
    CohitContext ctx;
    ctx.s_ = s;
    ctx.n_ = n;
    ctx.gens_ = gens ? std::move(*gens) : SqGeneratorSet::default_for(n);
    if (cfg.generator_override && !gens) {
        ctx.gens_.exponents = *cfg.generator_override;
        std::sort(ctx.gens_.exponents.begin(), ctx.gens_.exponents.end());
        ctx.gens_.validate(n);
    }
    ctx.columns_ = std::make_shared<ColumnIndex>(s, n, cfg.max_columns);
    ctx.acc_ = std::make_shared<EchelonAccumulator>(ctx.columns_->size(), cfg.max_row_bytes);

    const ColumnIndex& cols = *ctx.columns_;
    EchelonAccumulator& acc = *ctx.acc_;
    std::vector<std::uint32_t> row_cols;
    std::uint64_t prev_rank = 0;
    for (std::uint64_t g : ctx.gens_.exponents) {
        for (const Monomial& m : enumerate_monomials(s, n - g, cfg.max_columns)) {
            row_cols.clear();
            sq_expand(g, m.exponents(), [&](std::span<const Exponent> term) {
                row_cols.push_back(cols.index_of(
                    Monomial(std::vector<Exponent>(term.begin(), term.end()))));
            });
            acc.insert(row_cols);
        }
        ctx.saturation_.push_back({g, acc.rank() - prev_rank, acc.rank()});
        prev_rank = acc.rank();
    }
    acc.compact();
    return ctx;
}

CohitContext CohitContext::adopt(int s, std::uint64_t n, const RunConfig& cfg,
                                 SqGeneratorSet gens, EchelonAccumulator acc,
                                 std::vector<SaturationEntry> saturation) {
    CohitContext ctx;
    ctx.s_ = s;
    ctx.n_ = n;
    ctx.gens_ = std::move(gens);
    ctx.columns_ = std::make_shared<ColumnIndex>(s, n, cfg.max_columns);
    if (acc.width() != ctx.columns_->size())
        throw cache_corruption_error("accumulator width does not match the column universe");
    ctx.acc_ = std::make_shared<EchelonAccumulator>(std::move(acc));
    ctx.saturation_ = std::move(saturation);
    return ctx;
}

DimResult CohitContext::dim() const {
    DimResult r;
    r.s = s_;
    r.n = n_;
    r.column_count = columns_->size();
    r.hit_rank = acc_->rank();
    r.dimension = r.column_count - r.hit_rank;
    r.generator_set = gens_.exponents;
    r.saturation = saturation_;
    return r;
}

CohitBasis CohitContext::basis(BasisPart part, std::optional<WeightVector> weight_filter) const {
    CohitBasis b;
    b.s = s_;
    b.n = n_;
    b.part = part;
    b.weight_filter = weight_filter;
    b.generator_set = gens_.exponents;
    b.saturation = saturation_;
    std::uint32_t lo = 0, hi = static_cast<std::uint32_t>(columns_->size());
    if (weight_filter) {
        auto range = columns_->block_range(*weight_filter);
        lo = range.first;
        hi = range.second;
    }
    for (std::uint32_t c = lo; c < hi; ++c) {
        if (acc_->is_pivot(c)) continue;
        const Monomial& m = columns_->monomial(c);
        if (part == BasisPart::zero_part && m.all_positive()) continue;
        if (part == BasisPart::positive_part && !m.all_positive()) continue;
        b.monomials.push_back(m);
    }
    return b;
}

WeightDecomposition CohitContext::by_weight() const {
    WeightDecomposition d;
    d.s = s_;
    d.n = n_;
    for (const auto& [w, range] : columns_->blocks()) {
        std::uint64_t dim = 0;
        for (std::uint32_t c = range.first; c < range.second; ++c)
            if (!acc_->is_pivot(c)) ++dim;
        if (dim > 0) d.blocks.emplace_back(w, dim);
    }
    return d;
}

std::uint64_t CohitContext::block_dimension(const WeightVector& w) const {
    auto range = columns_->block_range(w);
    std::uint64_t dim = 0;
    for (std::uint32_t c = range.first; c < range.second; ++c)
        if (!acc_->is_pivot(c)) ++dim;
    return dim;
}

bool CohitContext::is_admissible(const Monomial& m) const {
    if (m.arity() != s_ || m.degree() != n_)
        throw std::invalid_argument("is_admissible: monomial does not match context degree");
    return !acc_->is_pivot(columns_->index_of(m));
}

BitRow CohitContext::reduce_row(const Poly& f) const {
    if (f.arity() != s_)
        throw std::invalid_argument("reduce: arity mismatch");
    BitRow row(columns_->size());
    for (const Monomial& m : f.terms()) {
        if (m.degree() != n_)
            throw std::invalid_argument("reduce: polynomial is not homogeneous of context degree");
        row.flip(columns_->index_of(m));
    }
    return acc_->reduce(row);
}

std::vector<Monomial> CohitContext::reduce_to_admissible(const Poly& f) const {
    BitRow residue = reduce_row(f);
    std::vector<Monomial> out;
    for (std::uint32_t c : residue.support())
        out.push_back(columns_->monomial(c));
    return out;
}

DimResult dim_cohit(int s, std::uint64_t n, const RunConfig& cfg,
                    std::optional<SqGeneratorSet> gens) {
    if (s < 1) throw std::invalid_argument("dim_cohit: s must be >= 1");
    if (mu(n) > s && !cfg.force_full_run) {
        // trivial by the mu criterion: every class is hit
        DimResult r;
        r.s = s;
        r.n = n;
        r.column_count = monomial_count(s, n);
        r.hit_rank = r.column_count;
        r.dimension = 0;
        r.wood_fast_path = true;
        r.generator_set = (gens ? *gens : SqGeneratorSet::default_for(n)).exponents;
        return r;
    }
    return CohitContext::build(s, n, cfg, std::move(gens)).dim();
}

std::pair<CohitBasis, CohitBasis> split_zero_positive(const CohitBasis& basis) {
    CohitBasis zero = basis, positive = basis;
    zero.part = BasisPart::zero_part;
    positive.part = BasisPart::positive_part;
    zero.monomials.clear();
    positive.monomials.clear();
    for (const Monomial& m : basis.monomials)
        (m.all_positive() ? positive : zero).monomials.push_back(m);
    return {std::move(zero), std::move(positive)};
}

std::uint64_t zero_part_dim_formula(int s, const WeightVector& w,
                                    const std::map<int, std::uint64_t>& positive_dims) {
    int lo = mu(w.degree());
    std::uint64_t total = 0;
    for (int k = lo; k <= s - 1; ++k) {
        auto it = positive_dims.find(k);
        if (it == positive_dims.end())
            throw std::invalid_argument("zero_part_dim_formula: missing positive dimension for k=" +
                                        std::to_string(k));
        // C(s, k)
        std::uint64_t binom = 1;
        for (int j = 1; j <= k; ++j)
            binom = binom * static_cast<std::uint64_t>(s - k + j) / static_cast<std::uint64_t>(j);
        total += binom * it->second;
    }
    return total;
}

std::uint64_t stability_dim(int s, std::uint64_t dim_s) {
    return ((1ull << (s + 1)) - 1) * dim_s;
}

}  // namespace cohit
