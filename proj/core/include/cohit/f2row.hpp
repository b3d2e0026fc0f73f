#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cohit {

// Packed GF(2) row: column c lives at word c/64, bit c%64, words in
// little-endian order. Bits at positions >= width stay zero.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::uint64_t width)
        : width_(width), words_((width + 63) / 64, 0) {}

    std::uint64_t width() const { return width_; }
    std::size_t word_count() const { return words_.size(); }
    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    bool test(std::uint64_t c) const { return (words_[c >> 6] >> (c & 63)) & 1; }
    void set(std::uint64_t c) { words_[c >> 6] |= 1ull << (c & 63); }
    void flip(std::uint64_t c) { words_[c >> 6] ^= 1ull << (c & 63); }
    void clear();

    void xor_with(const BitRow& other);
    bool any() const;
    std::uint64_t popcount() const;
    // index of the highest set bit, or -1 when zero
    std::int64_t max_set_bit() const;
    // ascending list of set columns
    std::vector<std::uint32_t> support() const;

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::uint64_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class InsertOutcome { reduced_to_zero, new_pivot };

struct InsertResult {
    InsertOutcome outcome;
    std::uint64_t pivot = 0;  // valid when outcome == new_pivot
};

// Streaming row-reduced basis over GF(2). The pivot of a stored row is its
// greatest set column; every stored row's pivot column is unset in every
// other stored row once the accumulator is compacted (back-substitution is
// performed lazily, on use, so that streaming inserts stay cheap).
//
// Exclusive-writer contract: no concurrent insertions; concurrent reduce()
// calls are safe between insertions once compact() has run.
class EchelonAccumulator {
public:
    explicit EchelonAccumulator(std::uint64_t width,
                                std::uint64_t max_stored_bytes = UINT64_MAX);

    std::uint64_t width() const { return width_; }
    std::uint64_t rank() const { return static_cast<std::uint64_t>(rows_.size()); }
    std::uint64_t rows_seen() const { return rows_seen_; }
    std::uint64_t stored_bytes() const { return stored_bytes_; }

    InsertResult insert(const BitRow& row);
    // columns need not be sorted; duplicates cancel in pairs
    InsertResult insert(std::span<const std::uint32_t> columns);

    // Canonical residue of r modulo the accumulated row space: zero iff r
    // is in the span; supported only on non-pivot columns; GF(2)-linear.
    BitRow reduce(const BitRow& r) const;

    bool is_pivot(std::uint64_t col) const;
    std::vector<std::uint64_t> pivot_columns() const;      // ascending
    std::vector<std::uint64_t> non_pivot_columns() const;  // ascending

    // Finish all pending back-substitution so every stored row is fully
    // reduced. Idempotent.
    void compact();

    // Fully reduced stored row for a pivot column (compacts first).
    BitRow row_for_pivot(std::uint64_t pivot_col);

    // Cache blob, bit-exact: magic "HITECH1\0", u32 LE version (=1), u64 LE
    // width, u64 LE rank, rank records of (u64 LE pivot, ceil(width/64)
    // u64 LE payload words), u64 LE XOR-fold checksum of all payload words.
    void save(std::ostream& out);
    void save_file(const std::string& path);  // write temp + atomic rename
    static EchelonAccumulator restore(std::istream& in);
    static EchelonAccumulator restore_file(const std::string& path);

private:
    struct StoredRow {
        // hybrid representation: whichever of sparse/dense is smaller
        bool dense = false;
        std::vector<std::uint32_t> cols;   // sparse: sorted ascending
        std::vector<std::uint64_t> words;  // dense
        std::uint64_t pivot = 0;
        std::uint64_t max_col = 0;   // upper bound on the highest set column
        std::uint64_t clean_epoch = 0;
        std::size_t bytes() const;
    };

    InsertResult insert_from_scratch();
    void xor_row_into_scratch(const StoredRow& row, std::vector<std::uint64_t>& scratch) const;
    void clean_row(std::size_t idx);
    void store_residue(std::vector<std::uint64_t>& scratch, std::uint64_t pivot);
    void repack_row(StoredRow& row, const std::vector<std::uint64_t>& scratch_words,
                    std::uint64_t popcnt);

    std::uint64_t width_ = 0;
    std::size_t words_ = 0;
    std::uint64_t max_stored_bytes_ = UINT64_MAX;
    std::vector<StoredRow> rows_;
    std::vector<std::int64_t> pivot_of_col_;   // column -> row index or -1
    std::vector<std::uint64_t> pivot_mask_;    // dense bitset of pivot columns
    std::uint64_t rows_seen_ = 0;
    std::uint64_t stored_bytes_ = 0;
    std::uint64_t pivot_epoch_ = 0;
    std::vector<std::uint64_t> insert_scratch_;
    std::vector<std::uint64_t> clean_scratch_;
    std::vector<std::uint32_t> merge_tmp_;
};

}  // namespace cohit
