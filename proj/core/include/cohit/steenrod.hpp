#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cohit/monomial.hpp"

namespace cohit {

// GF(2) sum of monomials of a common arity; presence of a term means
// coefficient 1, addition cancels pairs.
class Poly {
public:
    explicit Poly(int arity) : arity_(arity) {}
    static Poly from_monomial(const Monomial& m);

    int arity() const { return arity_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    // toggles the term (GF(2) addition of a single monomial)
    void add_monomial(const Monomial& m);
    Poly& operator+=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) {
        a += b;
        return a;
    }
    Poly operator*(const Poly& other) const;

    bool is_homogeneous() const;
    // degree of a homogeneous nonzero polynomial; throws otherwise
    std::uint64_t degree() const;

    std::string text() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    int arity_;
    std::vector<Monomial> terms_;  // exponent-lex sorted, duplicates cancelled
};

// Sq^i on a monomial: binomial-parity rule on one variable (C(a,i) odd iff
// the bits of i sit inside a, by Lucas), extended by the Cartan formula.
Poly sq_monomial(std::uint64_t i, const Monomial& m);

// GF(2)-linear extension to sums.
Poly sq_poly(std::uint64_t i, const Poly& f);

// Low-level Cartan expansion: invokes fn once per surviving term of
// Sq^i(m), passing the term's exponent vector. Used by the row stream to
// avoid per-term allocation.
void sq_expand(std::uint64_t i, std::span<const Exponent> exponents,
               const std::function<void(std::span<const Exponent>)>& fn);

// The powers 2^0, 2^1, ..., 2^K used as hit-generators at target degree N.
struct SqGeneratorSet {
    std::vector<std::uint64_t> exponents;  // ascending

    // every 2^k <= n
    static SqGeneratorSet default_for(std::uint64_t n);
    static SqGeneratorSet parse(std::string_view text, std::uint64_t n);
    void validate(std::uint64_t n) const;
    std::string text() const;

    friend bool operator==(const SqGeneratorSet&, const SqGeneratorSet&) = default;
};

// Total number of rows the hit stream yields: per generator g, one row per
// monomial of degree N-g.
std::uint64_t hit_row_count(int s, std::uint64_t n, const SqGeneratorSet& gens);

// Streams Sq^g(m) for every generator g (ascending) and every source
// monomial m of degree N-g in enumeration order. Rows are emitted as
// polynomials of degree N; zero rows are emitted too (they count).
void for_each_hit_row(int s, std::uint64_t n, const SqGeneratorSet& gens,
                      const std::function<void(std::uint64_t gen, const Poly& row)>& fn,
                      std::uint64_t max_source_count = 4'000'000);

}  // namespace cohit
