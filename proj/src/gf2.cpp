#include "vdcat/gf2.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "vdcat/errors.hpp"

namespace vdcat {

namespace {

Word tail_mask(std::size_t bits) {
    const std::size_t r = bits % kWordBits;
    return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

void xor_words(std::span<Word> dst, std::span<const Word> src, std::size_t from_word = 0) {
    for (std::size_t w = from_word; w < dst.size(); ++w) dst[w] ^= src[w];
}

/// Forward (or full) elimination in place. Returns pivot columns.
std::vector<std::size_t> eliminate(GF2Matrix& m, bool full) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        const std::size_t w = c / kWordBits;
        const Word bit = Word{1} << (c % kWordBits);
        std::size_t p = next_row;
        while (p < m.rows() && !(m.row(p)[w] & bit)) ++p;
        if (p == m.rows()) continue;
        if (p != next_row) {
            auto a = m.row(p);
            auto b = m.row(next_row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const auto pivot = m.row(next_row);
        const std::size_t start = full ? 0 : next_row + 1;
        for (std::size_t r = start; r < m.rows(); ++r) {
            if (r == next_row) continue;
            auto row = m.row(r);
            if (row[w] & bit) xor_words(row, pivot, w);
        }
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

}  // namespace

BitVector BitVector::unit(std::size_t size, std::size_t i) {
    BitVector v(size);
    v.set(i);
    return v;
}

void BitVector::set(std::size_t i, bool v) {
    const Word bit = Word{1} << (i % kWordBits);
    if (v)
        words_[i / kWordBits] |= bit;
    else
        words_[i / kWordBits] &= ~bit;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) throw PreconditionError("bit vector sizes differ");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVector::next_set(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t w = from / kWordBits;
    Word cur = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
        if (cur != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
        if (++w == words_.size()) return size_;
        cur = words_[w];
    }
}

BitVector BitVector::prefix(std::size_t n) const {
    BitVector out(n);
    for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = words_[w];
    if (!out.words_.empty()) out.words_.back() &= tail_mask(n);
    return out;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * stride_, 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    GF2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw PreconditionError("ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] & 1) m.set(r, c);
    }
    return m;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool v) {
    const Word bit = Word{1} << (c % kWordBits);
    Word& w = bits_[r * stride_ + c / kWordBits];
    if (v)
        w |= bit;
    else
        w &= ~bit;
}

BitVector GF2Matrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    auto src = row(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

BitVector GF2Matrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r);
    return v;
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto src = row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            Word bits = src[w];
            while (bits) {
                const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitVector GF2Matrix::apply(const BitVector& v) const {
    if (v.size() != cols_) throw PreconditionError("vector length does not match matrix columns");
    BitVector out(rows_);
    auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rw = row(r);
        Word acc = 0;
        for (std::size_t w = 0; w < stride_; ++w) acc ^= rw[w] & vw[w];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

bool GF2Matrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw PreconditionError("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    GF2Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        auto dst = out.row(r);
        auto arow = a.row(r);
        for (std::size_t w = 0; w < a.stride_; ++w) {
            Word bits = arow[w];
            while (bits) {
                const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                xor_words(dst, b.row(k));
                bits &= bits - 1;
            }
        }
    }
    return out;
}

SparseGF2::SparseGF2(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_ptr_(cols + 1, 0) {}

SparseGF2 SparseGF2::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries) {
    if (rows > std::numeric_limits<std::uint32_t>::max() || cols > std::numeric_limits<std::uint32_t>::max()) {
        throw SizeError("sparse matrix dimensions exceed 32-bit indices");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Triplet& x, const Triplet& y) { return x.col != y.col ? x.col < y.col : x.row < y.row; });
    SparseGF2 m(rows, cols);
    m.row_idx_.reserve(entries.size());
    std::vector<std::uint64_t> counts(cols, 0);
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].row == entries[i].row && entries[j].col == entries[i].col) ++j;
        if (entries[i].row >= rows || entries[i].col >= cols) throw PreconditionError("triplet out of range");
        if ((j - i) % 2 == 1) {
            m.row_idx_.push_back(entries[i].row);
            ++counts[entries[i].col];
        }
        i = j;
    }
    for (std::size_t c = 0; c < cols; ++c) m.col_ptr_[c + 1] = m.col_ptr_[c] + counts[c];
    return m;
}

SparseGF2 SparseGF2::from_dense(const GF2Matrix& d) {
    std::vector<Triplet> entries;
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (d.get(r, c)) entries.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)});
    return from_triplets(d.rows(), d.cols(), std::move(entries));
}

SparseGF2 SparseGF2::identity(std::size_t n) {
    SparseGF2 m(n, n);
    m.row_idx_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.row_idx_[i] = static_cast<std::uint32_t>(i);
        m.col_ptr_[i + 1] = i + 1;
    }
    return m;
}

GF2Matrix SparseGF2::to_dense() const {
    GF2Matrix d(rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (auto r : column(c)) d.set(r, c);
    return d;
}

SparseGF2 SparseGF2::transpose() const {
    std::vector<Triplet> entries;
    entries.reserve(nnz());
    for (std::size_t c = 0; c < cols_; ++c)
        for (auto r : column(c)) entries.push_back({static_cast<std::uint32_t>(c), r});
    return from_triplets(cols_, rows_, std::move(entries));
}

BitVector SparseGF2::apply(const BitVector& v) const {
    if (v.size() != cols_) throw PreconditionError("vector length does not match matrix columns");
    BitVector out(rows_);
    for (std::size_t c = v.next_set(0); c < cols_; c = v.next_set(c + 1))
        for (auto r : column(c)) out.flip(r);
    return out;
}

SparseGF2 operator*(const SparseGF2& a, const SparseGF2& b) {
    if (a.cols_ != b.rows_) {
        throw PreconditionError("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    SparseGF2 out(a.rows_, b.cols_);
    std::vector<std::uint8_t> mark(a.rows_, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t c = 0; c < b.cols_; ++c) {
        touched.clear();
        for (auto k : b.column(c)) {
            for (auto r : a.column(k)) {
                if (mark[r] == 0) touched.push_back(r);
                mark[r] ^= 2;
                mark[r] |= 1;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (auto r : touched) {
            if (mark[r] & 2) out.row_idx_.push_back(r);
            mark[r] = 0;
        }
        out.col_ptr_[c + 1] = out.row_idx_.size();
    }
    return out;
}

std::size_t rank(const GF2Matrix& m) {
    GF2Matrix work = m;
    return eliminate(work, false).size();
}

std::size_t rank(const SparseGF2& m) {
    // Column reduction keyed on the largest row index of each column.
    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> owner(m.rows(), kNone);
    std::vector<std::vector<std::uint32_t>> reduced;
    std::vector<std::uint32_t> cur;
    std::vector<std::uint32_t> merged;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto col = m.column(c);
        cur.assign(col.begin(), col.end());
        while (!cur.empty()) {
            const std::uint32_t low = cur.back();
            const std::uint32_t o = owner[low];
            if (o == kNone) break;
            const auto& other = reduced[o];
            merged.clear();
            std::set_symmetric_difference(cur.begin(), cur.end(), other.begin(), other.end(),
                                          std::back_inserter(merged));
            cur.swap(merged);
        }
        if (!cur.empty()) {
            owner[cur.back()] = static_cast<std::uint32_t>(reduced.size());
            reduced.push_back(cur);
            ++r;
        }
    }
    return r;
}

GF2Matrix rref(const GF2Matrix& m, std::vector<std::size_t>* pivot_cols) {
    GF2Matrix work = m;
    auto pivots = eliminate(work, true);
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return work;
}

std::vector<BitVector> nullspace_basis(const GF2Matrix& m) {
    std::vector<std::size_t> pivots;
    const GF2Matrix reduced = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<BitVector> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (reduced.get(r, f)) v.set(pivots[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

QuotientBasis::QuotientBasis(std::span<const BitVector> cycles, std::span<const BitVector> boundaries) {
    if (!cycles.empty())
        ambient_ = cycles.front().size();
    else if (!boundaries.empty())
        ambient_ = boundaries.front().size();
    for (const auto& v : cycles)
        if (v.size() != ambient_) throw PreconditionError("cycle vectors have inconsistent lengths");
    for (const auto& v : boundaries)
        if (v.size() != ambient_) throw PreconditionError("boundary vectors have inconsistent lengths");

    tag_bits_ = cycles.size();
    pivot_row_.assign(ambient_, -1);

    // span(boundaries) must lie inside span(cycles).
    if (!boundaries.empty()) {
        QuotientBasis cycle_span({}, {});
        cycle_span.ambient_ = ambient_;
        cycle_span.pivot_row_.assign(ambient_, -1);
        for (const auto& c : cycles) {
            BitVector v = c;
            cycle_span.reduce(v);
            if (v.any()) cycle_span.insert(std::move(v), BitVector());
        }
        for (const auto& b : boundaries) {
            BitVector v = b;
            cycle_span.reduce(v);
            if (v.any()) throw PreconditionError("a boundary vector lies outside the span of the cycles");
        }
    }

    for (const auto& b : boundaries) {
        BitVector v = b;
        BitVector tag = reduce(v);
        if (v.any()) insert(std::move(v), std::move(tag));
    }
    for (const auto& c : cycles) {
        BitVector v = c;
        BitVector tag = reduce(v);
        if (v.any()) {
            tag.flip(representatives_.size());
            representatives_.push_back(c);
            insert(std::move(v), std::move(tag));
        }
    }
}

BitVector QuotientBasis::reduce(BitVector& v) const {
    BitVector tag(tag_bits_);
    for (std::size_t p = v.next_set(0); p < v.size(); p = v.next_set(p + 1)) {
        const auto r = pivot_row_[p];
        if (r < 0) continue;
        const Row& row = rows_[static_cast<std::size_t>(r)];
        v ^= row.vec;
        if (row.tag.size() == tag.size()) tag ^= row.tag;
    }
    return tag;
}

void QuotientBasis::insert(BitVector vec, BitVector tag) {
    const std::size_t p = vec.next_set(0);
    pivot_row_[p] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back({std::move(vec), std::move(tag)});
}

BitVector QuotientBasis::coordinates(const BitVector& v) const {
    if (v.size() != ambient_) throw PreconditionError("vector length does not match the quotient's ambient space");
    BitVector work = v;
    BitVector tag = reduce(work);
    if (work.any()) throw MembershipError("vector is not in the span of the cycles");
    return tag.prefix(dim());
}

BitVector coset_coordinates(std::span<const BitVector> cycles, std::span<const BitVector> boundaries,
                            const BitVector& v) {
    return QuotientBasis(cycles, boundaries).coordinates(v);
}

}  // namespace vdcat
