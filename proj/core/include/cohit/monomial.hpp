#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cohit {

using Exponent = std::uint32_t;

// Configured exponent ceiling; operations that would produce a larger
// exponent fail loudly instead of wrapping.
inline constexpr std::uint64_t kMaxExponent = 0xFFFFFFFFull;

// A monomial x1^a1 * ... * xs^as in s variables, s fixed by the length of
// the exponent sequence.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

    // Text form: "x1^a1*x2^a2*..." with "^1" omitted and zero-exponent
    // factors dropped; the empty product prints as "1".
    static Monomial parse(std::string_view text, int arity);

    int arity() const { return static_cast<int>(exps_.size()); }
    Exponent exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    std::uint64_t degree() const;
    bool all_positive() const;
    std::string text() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

// Weight vector (w1, w2, ...): entry j counts the exponents with bit j-1
// set. Stored with trailing zeros trimmed; comparisons pad implicitly.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<std::uint32_t> entries);

    // Accepts "(3,3,2,2,1)" or "3,3,2,2,1".
    static WeightVector parse(std::string_view text);

    const std::vector<std::uint32_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    // deg w = sum over k of 2^(k-1) * w_k.
    std::uint64_t degree() const;
    std::string text() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<std::uint32_t> entries_;
};

WeightVector weight_vector(const Monomial& m);

// Left-lexicographic comparison of weight vectors, padding with zeros.
std::strong_ordering compare_weights(const WeightVector& a, const WeightVector& b);

// The total order on equal-degree, equal-arity monomials: weight vectors
// first (left-lex), exponent sequences lexicographically on ties.
// Throws std::invalid_argument on arity or degree mismatch.
std::strong_ordering compare(const Monomial& u, const Monomial& v);

struct MonomialLess {
    bool operator()(const Monomial& u, const Monomial& v) const {
        return compare(u, v) == std::strong_ordering::less;
    }
};

// Number of ones in the binary expansion of n.
int alpha(std::uint64_t n);

// Smallest number of integers of the form 2^j - 1 (repetitions allowed)
// summing to n; 0 for n = 0.
int mu(std::uint64_t n);

// Spike: every exponent is of the form 2^d - 1. Minimal spike: the nonzero
// exponents 2^{d_1}-1, ..., 2^{d_r}-1 occupy the first r slots with
// d_1 > d_2 > ... > d_{r-1} >= d_r > 0.
bool is_spike(const Monomial& m);
bool is_minimal_spike(const Monomial& m);

// The unique minimal spike of degree n in s variables, if mu(n) <= s.
std::optional<Monomial> minimal_spike(int s, std::uint64_t n);

// C(n+s-1, s-1); throws resource_limit_error on overflow past 2^63.
std::uint64_t monomial_count(int s, std::uint64_t n);

// All monomials of degree n in s variables, ascending under compare.
// Refuses (resource_limit_error) when the count exceeds max_count.
std::vector<Monomial> enumerate_monomials(int s, std::uint64_t n,
                                          std::uint64_t max_count = 4'000'000);

// All monomials u with weight vector exactly w, ascending under compare.
std::vector<Monomial> enumerate_by_weight(int s, const WeightVector& w);

struct DegreeProfile {
    int s = 0;
    std::uint64_t n = 0;
    int mu = 0;
    int alpha_n = 0;
    int alpha_n_plus_mu = 0;
    std::optional<Monomial> minimal_spike;
};

DegreeProfile degree_profile(int s, std::uint64_t n);

}  // namespace cohit
