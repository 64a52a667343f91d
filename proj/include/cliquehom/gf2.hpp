// Bit-packed vectors and matrices over GF(2), plus rank machinery.
//
// Rows are packed 64 bits per word. Rank runs through Gf2Eliminator, which
// keeps a reduced basis keyed by pivot bit so that single rows can be
// inserted incrementally in O(rank * words) — is_independent and the
// incremental trace depend on that.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "cliquehom/errors.hpp"

namespace cliquehom {

using word_t = std::uint64_t;
inline constexpr int kWordBits = 64;

inline int words_for_bits(long long bits) { return static_cast<int>((bits + kWordBits - 1) / kWordBits); }

class Gf2Vector {
  public:
    Gf2Vector() = default;
    explicit Gf2Vector(int size) : size_(size), words_(words_for_bits(size), 0) {
        if (size < 0) fail(errc::invalid_params, "negative vector size");
    }
    Gf2Vector(int size, std::span<const word_t> words) : Gf2Vector(size) {
        if (words.size() != words_.size()) fail(errc::size_mismatch, "word count mismatch");
        std::copy(words.begin(), words.end(), words_.begin());
    }

    int size() const { return size_; }

    bool get(int i) const { return (words_[static_cast<std::size_t>(i) / kWordBits] >> (i % kWordBits)) & 1u; }

    void set(int i, bool v = true) {
        word_t mask = word_t{1} << (i % kWordBits);
        if (v)
            words_[static_cast<std::size_t>(i) / kWordBits] |= mask;
        else
            words_[static_cast<std::size_t>(i) / kWordBits] &= ~mask;
    }

    bool is_zero() const {
        for (word_t w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Index of the lowest set bit, or -1 for the zero vector.
    int lowest_set_bit() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
        return -1;
    }

    int popcount() const {
        int c = 0;
        for (word_t w : words_) c += std::popcount(w);
        return c;
    }

    void xor_with(const Gf2Vector& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    }

    std::span<const word_t> words() const { return words_; }

    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

  private:
    int size_ = 0;
    std::vector<word_t> words_;
};

class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_(words_for_bits(cols)),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(words_), 0) {
        if (rows < 0 || cols < 0) fail(errc::invalid_params, "negative matrix shape");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t byte_size() const { return data_.size() * sizeof(word_t); }

    bool get(int r, int c) const { return (word(r, c / kWordBits) >> (c % kWordBits)) & 1u; }

    void set(int r, int c, bool v = true) {
        word_t mask = word_t{1} << (c % kWordBits);
        if (v)
            word(r, c / kWordBits) |= mask;
        else
            word(r, c / kWordBits) &= ~mask;
    }

    std::span<const word_t> row_words(int r) const {
        return {data_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)};
    }

    Gf2Vector row(int r) const { return Gf2Vector(cols_, row_words(r)); }

    int row_popcount(int r) const {
        int c = 0;
        for (word_t w : row_words(r)) c += std::popcount(w);
        return c;
    }

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

  private:
    word_t& word(int r, int wi) { return data_[static_cast<std::size_t>(r) * words_ + wi]; }
    const word_t& word(int r, int wi) const { return data_[static_cast<std::size_t>(r) * words_ + wi]; }

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<word_t> data_;
};

/// Reduced row basis supporting incremental insertion.
class Gf2Eliminator {
  public:
    explicit Gf2Eliminator(int length) : length_(length), pivot_row_(length, -1) {}

    /// Reduces v against the basis; stores it if nonzero. Returns true iff
    /// the rank grew (v was independent of the rows inserted so far).
    bool insert(Gf2Vector v) {
        if (v.size() != length_) fail(errc::size_mismatch, "eliminator row length mismatch");
        while (true) {
            int p = v.lowest_set_bit();
            if (p < 0) return false;
            int idx = pivot_row_[p];
            if (idx < 0) {
                pivot_row_[p] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            v.xor_with(rows_[static_cast<std::size_t>(idx)]);
        }
    }

    /// Membership test: true iff v lies in the span of the inserted rows.
    bool in_span(Gf2Vector v) const {
        if (v.size() != length_) fail(errc::size_mismatch, "eliminator row length mismatch");
        while (true) {
            int p = v.lowest_set_bit();
            if (p < 0) return true;
            int idx = pivot_row_[p];
            if (idx < 0) return false;
            v.xor_with(rows_[static_cast<std::size_t>(idx)]);
        }
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int length() const { return length_; }

  private:
    int length_;
    std::vector<Gf2Vector> rows_;
    std::vector<int> pivot_row_;
};

/// Rank over GF(2); the input matrix is not modified.
inline int rank_gf2(const Gf2Matrix& m) {
    Gf2Eliminator elim(m.cols());
    int rank = 0;
    for (int r = 0; r < m.rows(); ++r)
        if (elim.insert(m.row(r))) ++rank;
    return rank;
}

/// a (r x k) times b (k x c) over GF(2).
inline Gf2Matrix gf2_multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows()) fail(errc::size_mismatch, "gf2_multiply shape mismatch");
    Gf2Matrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        Gf2Vector acc(b.cols());
        for (int k = 0; k < a.cols(); ++k)
            if (a.get(r, k)) acc.xor_with(b.row(k));
        for (int c = 0; c < b.cols(); ++c)
            if (acc.get(c)) out.set(r, c);
    }
    return out;
}

inline bool is_zero(const Gf2Matrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (word_t w : m.row_words(r))
            if (w != 0) return false;
    return true;
}

struct LeftNullspace {
    int nullity = 0;
    /// Row combinations x (length = rows of m) with x * m = 0.
    std::vector<Gf2Vector> combos;
};

/// Left null space of m via elimination with companion rows. This is the
/// second, batch-style elimination route; rank_gf2 goes through the
/// incremental eliminator, so the two can cross-check each other.
inline LeftNullspace left_nullspace_gf2(const Gf2Matrix& m) {
    int rows = m.rows();
    std::vector<Gf2Vector> work;
    std::vector<Gf2Vector> companion;
    work.reserve(static_cast<std::size_t>(rows));
    companion.reserve(static_cast<std::size_t>(rows));
    std::vector<int> pivot_of(static_cast<std::size_t>(m.cols()), -1);
    LeftNullspace out;
    for (int r = 0; r < rows; ++r) {
        Gf2Vector v = m.row(r);
        Gf2Vector c(rows);
        c.set(r);
        while (true) {
            int p = v.lowest_set_bit();
            if (p < 0) {
                ++out.nullity;
                out.combos.push_back(std::move(c));
                break;
            }
            int idx = pivot_of[static_cast<std::size_t>(p)];
            if (idx < 0) {
                pivot_of[static_cast<std::size_t>(p)] = static_cast<int>(work.size());
                work.push_back(std::move(v));
                companion.push_back(std::move(c));
                break;
            }
            v.xor_with(work[static_cast<std::size_t>(idx)]);
            c.xor_with(companion[static_cast<std::size_t>(idx)]);
        }
    }
    return out;
}

}  // namespace cliquehom
