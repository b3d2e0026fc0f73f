#include "cohit/f2row.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "cohit/errors.hpp"

namespace cohit {

void BitRow::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

void BitRow::xor_with(const BitRow& other) {
    if (other.width_ != width_) throw std::invalid_argument("BitRow width mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] ^= other.words_[k];
}

bool BitRow::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

std::uint64_t BitRow::popcount() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

std::int64_t BitRow::max_set_bit() const {
    for (std::size_t k = words_.size(); k-- > 0;)
        if (words_[k])
            return static_cast<std::int64_t>(k * 64 + (63 - std::countl_zero(words_[k])));
    return -1;
}

std::vector<std::uint32_t> BitRow::support() const {
    std::vector<std::uint32_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(b)));
            w &= w - 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr char kMagic[8] = {'H', 'I', 'T', 'E', 'C', 'H', '1', '\0'};
constexpr std::uint32_t kVersion = 1;

void store_le64(std::ostream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

void store_le32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 4);
}

bool load_le64(std::istream& in, std::uint64_t& v) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8)) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return true;
}

bool load_le32(std::istream& in, std::uint32_t& v) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
    v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return true;
}

}  // namespace

std::size_t EchelonAccumulator::StoredRow::bytes() const {
    return sizeof(StoredRow) + cols.size() * sizeof(std::uint32_t) +
           words.size() * sizeof(std::uint64_t);
}

EchelonAccumulator::EchelonAccumulator(std::uint64_t width, std::uint64_t max_stored_bytes)
    : width_(width),
      words_((width + 63) / 64),
      max_stored_bytes_(max_stored_bytes),
      pivot_of_col_(width, -1),
      pivot_mask_(words_, 0),
      insert_scratch_(words_, 0),
      clean_scratch_(words_, 0) {}

void EchelonAccumulator::xor_row_into_scratch(const StoredRow& row,
                                              std::vector<std::uint64_t>& scratch) const {
    if (row.dense) {
        const std::uint64_t* w = row.words.data();
        std::uint64_t* s = scratch.data();
        for (std::size_t k = 0; k < words_; ++k) s[k] ^= w[k];
    } else {
        for (std::uint32_t c : row.cols)
            scratch[c >> 6] ^= 1ull << (c & 63);
    }
}

void EchelonAccumulator::repack_row(StoredRow& row, const std::vector<std::uint64_t>& w,
                                    std::uint64_t popcnt) {
    bool use_dense = popcnt * sizeof(std::uint32_t) >= words_ * sizeof(std::uint64_t);
    row.dense = use_dense;
    row.cols.clear();
    row.cols.shrink_to_fit();
    row.words.clear();
    row.words.shrink_to_fit();
    std::uint64_t mx = row.pivot;
    if (use_dense) {
        row.words.assign(w.begin(), w.end());
        for (std::size_t k = words_; k-- > 0;)
            if (w[k]) {
                mx = k * 64 + (63 - static_cast<std::size_t>(std::countl_zero(w[k])));
                break;
            }
    } else {
        row.cols.reserve(popcnt);
        for (std::size_t k = 0; k < words_; ++k) {
            std::uint64_t x = w[k];
            while (x) {
                row.cols.push_back(static_cast<std::uint32_t>(k * 64 +
                                   static_cast<std::size_t>(std::countr_zero(x))));
                x &= x - 1;
            }
        }
        if (!row.cols.empty()) mx = row.cols.back();
    }
    row.max_col = mx;
}

void EchelonAccumulator::clean_row(std::size_t idx) {
    StoredRow& row = rows_[idx];
    if (row.clean_epoch == pivot_epoch_) return;

    // quick scan: does the row carry a bit on a foreign pivot column?
    bool stale = false;
    if (row.dense) {
        std::size_t pw = static_cast<std::size_t>(row.pivot >> 6);
        for (std::size_t k = 0; k < words_ && !stale; ++k) {
            std::uint64_t t = row.words[k] & pivot_mask_[k];
            if (k == pw) t &= ~(1ull << (row.pivot & 63));
            stale = t != 0;
        }
    } else {
        for (std::uint32_t c : row.cols) {
            if (c != row.pivot && pivot_of_col_[c] >= 0) {
                stale = true;
                break;
            }
        }
    }
    if (!stale) {
        row.clean_epoch = pivot_epoch_;
        return;
    }

    std::fill(clean_scratch_.begin(), clean_scratch_.end(), 0);
    xor_row_into_scratch(row, clean_scratch_);
    const std::size_t pivot_word = static_cast<std::size_t>(row.pivot >> 6);
    const std::uint64_t pivot_bit = 1ull << (row.pivot & 63);
    // Eliminate foreign pivot bits; donors may themselves be stale — each
    // elimination only introduces later-registered pivots, so this ends.
    for (;;) {
        std::int64_t found = -1;
        for (std::size_t k = words_; k-- > 0;) {
            std::uint64_t t = clean_scratch_[k] & pivot_mask_[k];
            if (k == pivot_word) t &= ~pivot_bit;
            if (t) {
                found = static_cast<std::int64_t>(k * 64 +
                        (63 - static_cast<std::size_t>(std::countl_zero(t))));
                break;
            }
        }
        if (found < 0) break;
        xor_row_into_scratch(rows_[static_cast<std::size_t>(pivot_of_col_[found])],
                             clean_scratch_);
    }

    std::uint64_t pop = 0;
    for (std::uint64_t w : clean_scratch_) pop += static_cast<std::uint64_t>(std::popcount(w));
    std::uint64_t before = row.bytes();
    repack_row(row, clean_scratch_, pop);
    row.clean_epoch = pivot_epoch_;
    stored_bytes_ += row.bytes();
    stored_bytes_ -= before;
    if (stored_bytes_ > max_stored_bytes_)
        throw resource_limit_error("resident row bytes exceed ceiling after back-substitution (" +
                                   std::to_string(stored_bytes_) + " > " +
                                   std::to_string(max_stored_bytes_) + ")");
}

InsertResult EchelonAccumulator::insert(const BitRow& row) {
    if (row.width() != width_) throw std::invalid_argument("insert: width mismatch");
    std::copy(row.words().begin(), row.words().end(), insert_scratch_.begin());
    return insert_from_scratch();
}

InsertResult EchelonAccumulator::insert(std::span<const std::uint32_t> columns) {
    std::fill(insert_scratch_.begin(), insert_scratch_.end(), 0);
    for (std::uint32_t c : columns) {
        if (c >= width_) throw std::invalid_argument("insert: column out of range");
        insert_scratch_[c >> 6] ^= 1ull << (c & 63);
    }
    return insert_from_scratch();
}

InsertResult EchelonAccumulator::insert_from_scratch() {
    // reduce against pivots top-down; cleaned donors only introduce
    // non-pivot bits, so one downward pass suffices
    for (std::size_t k = words_; k-- > 0;) {
        for (;;) {
            std::uint64_t t = insert_scratch_[k] & pivot_mask_[k];
            if (!t) break;
            std::uint64_t c = k * 64 + (63 - static_cast<std::uint64_t>(std::countl_zero(t)));
            std::size_t idx = static_cast<std::size_t>(pivot_of_col_[c]);
            clean_row(idx);
            xor_row_into_scratch(rows_[idx], insert_scratch_);
        }
    }
    std::uint64_t pivot = 0;
    bool nonzero = false;
    for (std::size_t k = words_; k-- > 0;) {
        if (insert_scratch_[k]) {
            pivot = k * 64 + (63 - static_cast<std::uint64_t>(std::countl_zero(insert_scratch_[k])));
            nonzero = true;
            break;
        }
    }
    if (!nonzero) {
        ++rows_seen_;
        return {InsertOutcome::reduced_to_zero, 0};
    }
    store_residue(insert_scratch_, pivot);
    ++rows_seen_;
    return {InsertOutcome::new_pivot, pivot};
}

void EchelonAccumulator::store_residue(std::vector<std::uint64_t>& scratch, std::uint64_t pivot) {
    std::uint64_t pop = 0;
    for (std::uint64_t w : scratch) pop += static_cast<std::uint64_t>(std::popcount(w));

    StoredRow row;
    row.pivot = pivot;
    std::uint64_t projected = stored_bytes_ + sizeof(StoredRow) +
        std::min<std::uint64_t>(pop * sizeof(std::uint32_t), words_ * sizeof(std::uint64_t));
    if (projected > max_stored_bytes_)
        throw resource_limit_error("resident row bytes would exceed ceiling (" +
                                   std::to_string(projected) + " > " +
                                   std::to_string(max_stored_bytes_) + ")");
    repack_row(row, scratch, pop);
    ++pivot_epoch_;
    row.clean_epoch = pivot_epoch_;
    pivot_of_col_[pivot] = static_cast<std::int64_t>(rows_.size());
    pivot_mask_[pivot >> 6] |= 1ull << (pivot & 63);
    stored_bytes_ += row.bytes();
    rows_.push_back(std::move(row));
}

BitRow EchelonAccumulator::reduce(const BitRow& r) const {
    if (r.width() != width_) throw std::invalid_argument("reduce: width mismatch");
    BitRow out = r;
    std::span<std::uint64_t> scratch = out.words();
    // donors may be stale here (reduce is const); a stale donor can set bits
    // above the cursor, bounded by its max_col, so rescan from there
    std::size_t k = words_;
    while (k-- > 0) {
        for (;;) {
            std::uint64_t t = scratch[k] & pivot_mask_[k];
            if (!t) break;
            std::uint64_t c = k * 64 + (63 - static_cast<std::uint64_t>(std::countl_zero(t)));
            const StoredRow& donor = rows_[static_cast<std::size_t>(pivot_of_col_[c])];
            if (donor.dense) {
                for (std::size_t j = 0; j < words_; ++j) scratch[j] ^= donor.words[j];
            } else {
                for (std::uint32_t dc : donor.cols) scratch[dc >> 6] ^= 1ull << (dc & 63);
            }
            std::size_t donor_top = static_cast<std::size_t>(donor.max_col >> 6);
            if (donor_top > k) k = donor_top;
        }
    }
    return out;
}

bool EchelonAccumulator::is_pivot(std::uint64_t col) const {
    if (col >= width_) throw std::invalid_argument("is_pivot: column out of range");
    return pivot_of_col_[col] >= 0;
}

std::vector<std::uint64_t> EchelonAccumulator::pivot_columns() const {
    std::vector<std::uint64_t> out;
    out.reserve(rows_.size());
    for (std::uint64_t c = 0; c < width_; ++c)
        if (pivot_of_col_[c] >= 0) out.push_back(c);
    return out;
}

std::vector<std::uint64_t> EchelonAccumulator::non_pivot_columns() const {
    std::vector<std::uint64_t> out;
    out.reserve(width_ - rows_.size());
    for (std::uint64_t c = 0; c < width_; ++c)
        if (pivot_of_col_[c] < 0) out.push_back(c);
    return out;
}

void EchelonAccumulator::compact() {
    for (std::size_t i = 0; i < rows_.size(); ++i) clean_row(i);
}

BitRow EchelonAccumulator::row_for_pivot(std::uint64_t pivot_col) {
    if (pivot_col >= width_ || pivot_of_col_[pivot_col] < 0)
        throw std::invalid_argument("row_for_pivot: not a pivot column");
    std::size_t idx = static_cast<std::size_t>(pivot_of_col_[pivot_col]);
    clean_row(idx);
    BitRow out(width_);
    const StoredRow& row = rows_[idx];
    if (row.dense) {
        std::copy(row.words.begin(), row.words.end(), out.words().begin());
    } else {
        for (std::uint32_t c : row.cols) out.set(c);
    }
    return out;
}

void EchelonAccumulator::save(std::ostream& out) {
    compact();
    out.write(kMagic, 8);
    store_le32(out, kVersion);
    store_le64(out, width_);
    store_le64(out, rank());

    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rows_[a].pivot < rows_[b].pivot;
    });

    std::uint64_t checksum = 0;
    for (std::size_t i : order) {
        store_le64(out, rows_[i].pivot);
        std::fill(clean_scratch_.begin(), clean_scratch_.end(), 0);
        xor_row_into_scratch(rows_[i], clean_scratch_);
        for (std::uint64_t w : clean_scratch_) {
            store_le64(out, w);
            checksum ^= w;
        }
    }
    store_le64(out, checksum);
    if (!out) throw std::runtime_error("cache blob write failed");
}

void EchelonAccumulator::save_file(const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open cache file for writing: " + tmp);
        save(f);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("atomic rename failed for cache file: " + path);
    }
}

EchelonAccumulator EchelonAccumulator::restore(std::istream& in) {
    char magic[8];
    if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0)
        throw cache_corruption_error("cache blob: bad magic");
    std::uint32_t version = 0;
    if (!load_le32(in, version) || version != kVersion)
        throw cache_corruption_error("cache blob: unsupported version");
    std::uint64_t width = 0, rank = 0;
    if (!load_le64(in, width) || !load_le64(in, rank))
        throw cache_corruption_error("cache blob: truncated header");
    if (rank > width)
        throw cache_corruption_error("cache blob: rank exceeds width");

    EchelonAccumulator acc(width);
    std::uint64_t checksum = 0;
    std::vector<std::uint64_t> payload(acc.words_);
    for (std::uint64_t i = 0; i < rank; ++i) {
        std::uint64_t pivot = 0;
        if (!load_le64(in, pivot)) throw cache_corruption_error("cache blob: truncated row");
        if (pivot >= width) throw cache_corruption_error("cache blob: pivot out of range");
        if (acc.pivot_of_col_[pivot] >= 0)
            throw cache_corruption_error("cache blob: duplicate pivot");
        std::uint64_t pop = 0;
        for (std::size_t k = 0; k < acc.words_; ++k) {
            if (!load_le64(in, payload[k])) throw cache_corruption_error("cache blob: truncated row");
            checksum ^= payload[k];
            pop += static_cast<std::uint64_t>(std::popcount(payload[k]));
        }
        if ((width % 64) != 0 && (payload[acc.words_ - 1] >> (width % 64)) != 0)
            throw cache_corruption_error("cache blob: padding bits set");
        if (!((payload[pivot >> 6] >> (pivot & 63)) & 1))
            throw cache_corruption_error("cache blob: pivot bit unset in payload");
        StoredRow row;
        row.pivot = pivot;
        acc.repack_row(row, payload, pop);
        row.clean_epoch = 0;
        acc.pivot_of_col_[pivot] = static_cast<std::int64_t>(acc.rows_.size());
        acc.pivot_mask_[pivot >> 6] |= 1ull << (pivot & 63);
        acc.stored_bytes_ += row.bytes();
        acc.rows_.push_back(std::move(row));
    }
    std::uint64_t expect = 0;
    if (!load_le64(in, expect)) throw cache_corruption_error("cache blob: missing checksum");
    if (expect != checksum) throw cache_corruption_error("cache blob: checksum mismatch");
    char extra;
    if (in.read(&extra, 1)) throw cache_corruption_error("cache blob: trailing bytes");
    acc.rows_seen_ = rank;
    return acc;
}

EchelonAccumulator EchelonAccumulator::restore_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open cache file: " + path);
    return restore(f);
}

}  // namespace cohit
