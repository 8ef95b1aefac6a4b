#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace vdcat {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed vector over the two-element field.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    static BitVector unit(std::size_t size, std::size_t i);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool v = true);
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    BitVector& operator^=(const BitVector& other);
    bool any() const;
    std::size_t count() const;

    /// Lowest set index at or after `from`, or size() if none.
    std::size_t next_set(std::size_t from) const;

    /// Copy of the first `n` entries.
    BitVector prefix(std::size_t n) const;

    std::span<Word> words() { return words_; }
    std::span<const Word> words() const { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major packed matrix over the two-element field. Bits past `cols`
/// in each row's last word are always zero.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);

    static GF2Matrix identity(std::size_t n);
    /// Rows given as 0/1 lists; all rows must have the same length.
    static GF2Matrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t row_words() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool v = true);
    void flip(std::size_t r, std::size_t c) { bits_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    std::span<Word> row(std::size_t r) { return {bits_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {bits_.data() + r * stride_, stride_}; }

    BitVector row_vector(std::size_t r) const;
    BitVector column(std::size_t c) const;

    GF2Matrix transpose() const;
    BitVector apply(const BitVector& v) const;
    bool is_zero() const;

    friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> bits_;
};

/// A (row, col) position of a set bit.
struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
};

/// Column-compressed sparse matrix over the two-element field. Row indices in
/// each column are sorted and unique.
class SparseGF2 {
public:
    SparseGF2() = default;
    SparseGF2(std::size_t rows, std::size_t cols);

    /// Repeated positions cancel in pairs.
    static SparseGF2 from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
    static SparseGF2 from_dense(const GF2Matrix& m);
    static SparseGF2 identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return row_idx_.size(); }

    std::span<const std::uint32_t> column(std::size_t c) const {
        return {row_idx_.data() + col_ptr_[c], col_ptr_[c + 1] - col_ptr_[c]};
    }

    GF2Matrix to_dense() const;
    SparseGF2 transpose() const;
    BitVector apply(const BitVector& v) const;
    bool is_zero() const { return row_idx_.empty(); }

    friend SparseGF2 operator*(const SparseGF2& a, const SparseGF2& b);
    friend bool operator==(const SparseGF2&, const SparseGF2&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> col_ptr_{0};
    std::vector<std::uint32_t> row_idx_;
};

/// Rank by word-packed Gaussian elimination on a working copy.
std::size_t rank(const GF2Matrix& m);

/// Rank by sparse column reduction; suited to very sparse tall matrices.
std::size_t rank(const SparseGF2& m);

/// Reduced row echelon form. Pivot rows are chosen lowest index first;
/// `pivot_cols`, if given, receives the pivot column of each nonzero row.
GF2Matrix rref(const GF2Matrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

/// Basis of {v : m v = 0}, one vector per free column in ascending order.
std::vector<BitVector> nullspace_basis(const GF2Matrix& m);

/// Quotient span(cycles) / span(boundaries) with a pivot-based complement.
/// Representatives are the input cycles, in input order, that are independent
/// of the boundaries and of earlier representatives.
class QuotientBasis {
public:
    /// Throws PreconditionError if some boundary is outside span(cycles).
    QuotientBasis(std::span<const BitVector> cycles, std::span<const BitVector> boundaries);

    std::size_t dim() const { return representatives_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<BitVector>& representatives() const { return representatives_; }

    /// Coordinates of the class of `v`. Throws MembershipError if `v` is not in span(cycles).
    BitVector coordinates(const BitVector& v) const;

private:
    struct Row {
        BitVector vec;
        BitVector tag;
    };

    /// Reduces `v` in place; returns the accumulated tag.
    BitVector reduce(BitVector& v) const;
    void insert(BitVector vec, BitVector tag);

    std::size_t ambient_ = 0;
    std::size_t tag_bits_ = 0;
    std::vector<Row> rows_;
    std::vector<std::int64_t> pivot_row_;
    std::vector<BitVector> representatives_;
};

BitVector coset_coordinates(std::span<const BitVector> cycles, std::span<const BitVector> boundaries,
                            const BitVector& v);

}  // namespace vdcat
