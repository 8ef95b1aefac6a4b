// Independent reference implementations used only by the tests. They are
// deliberately naive: unpacked bits, exhaustive search, cofactor expansion.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "vdcat/bruhat.hpp"
#include "vdcat/common.hpp"
#include "vdcat/gf2.hpp"
#include "vdcat/linkdiag.hpp"

namespace oracle {

using vdcat::BigInt;
using Dense = std::vector<std::vector<std::uint8_t>>;

inline Dense zeros(std::size_t rows, std::size_t cols) { return Dense(rows, std::vector<std::uint8_t>(cols, 0)); }

inline Dense from(const vdcat::GF2Matrix& m) {
    Dense d = zeros(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c);
    return d;
}

inline Dense from(const vdcat::SparseGF2& m) {
    Dense d = zeros(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (auto r : m.column(c)) d[r][c] ^= 1;
    return d;
}

inline Dense multiply(const Dense& a, const Dense& b, std::size_t inner) {
    const std::size_t rows = a.size(), cols = b.empty() ? 0 : b[0].size();
    Dense out = zeros(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < cols; ++j) out[i][j] ^= b[k][j];
    return out;
}

/// Plain Gaussian elimination over byte entries.
inline std::size_t rank(Dense m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && !m[p][c]) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

inline Dense random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    Dense d = zeros(rows, cols);
    for (auto& row : d)
        for (auto& v : row) v = bit(rng);
    return d;
}

inline vdcat::GF2Matrix to_matrix(const Dense& d, std::size_t cols) {
    vdcat::GF2Matrix m(d.size(), cols);
    for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (d[r][c]) m.set(r, c);
    return m;
}

/// Laplace expansion along the first row.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigInt> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        const BigInt term = m[0][j] * cofactor_det(minor);
        if (j % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

/// x_1 ... x_n prod_{i<j} (x_j - x_i).
inline BigInt vandermonde_product(const std::vector<std::uint32_t>& x) {
    BigInt v = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        v *= x[i];
        for (std::size_t j = i + 1; j < x.size(); ++j) v *= BigInt(x[j]) - BigInt(x[i]);
    }
    return v;
}

inline int count_inversions(const std::vector<int>& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
    return c;
}

/// sigma = p (i j) with inv(sigma) = inv(p) + 1, by trying every transposition.
inline std::vector<std::vector<int>> brute_covers(const std::vector<int>& p) {
    std::vector<std::vector<int>> out;
    const int base = count_inversions(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            auto q = p;
            std::swap(q[i], q[j]);
            if (count_inversions(q) == base + 1) out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Counts closed walks: every arc end has degree two in the multigraph whose
/// edges are the selected pairings, so components are circles.
inline int walk_circles(const vdcat::LinkDiagram& d, const vdcat::Smoothing& s) {
    std::map<int, std::vector<int>> adj;
    for (std::size_t k = 0; k < d.crossings().size(); ++k) {
        const auto& pairs = s[k] ? d.crossings()[k].one : d.crossings()[k].zero;
        for (const auto& [a, b] : pairs) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    std::map<int, bool> seen;
    int circles = 0;
    for (const auto& [start, _] : adj) {
        if (seen[start]) continue;
        ++circles;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return circles + d.free_loops();
}

/// A random closed diagram with n crossings: 2n arcs, each crossing takes four
/// arc ends from a shuffled list in which every arc appears twice.
inline vdcat::LinkDiagram random_diagram(std::mt19937_64& rng, int n) {
    while (true) {
        std::vector<int> ends;
        for (int a = 1; a <= 2 * n; ++a) ends.insert(ends.end(), {a, a});
        std::shuffle(ends.begin(), ends.end(), rng);
        std::vector<vdcat::Crossing> crossings;
        for (int k = 0; k < n; ++k) {
            const int bl = ends[4 * k], br = ends[4 * k + 1], tl = ends[4 * k + 2], tr = ends[4 * k + 3];
            crossings.push_back({{{{bl, tl}, {br, tr}}}, {{{bl, br}, {tl, tr}}}});
        }
        try {
            return vdcat::LinkDiagram(std::move(crossings));
        } catch (const std::exception&) {
            // Degenerate draw (identical pairings); try again.
        }
    }
}

/// Cochain complex of a diagram built by explicit basis enumeration. Each
/// basis element is (permutation id, one digit per circle). In the standard
/// order the digits are compared lexicographically; the scrambled order
/// reverses both the permutation order within a level and the digit order.
struct NaiveComplex {
    std::vector<std::size_t> dims;
    std::vector<Dense> d;  ///< d[k] is dims[k+1] x dims[k]
};

inline NaiveComplex naive_complex(const vdcat::BruhatPoset& poset, const std::vector<std::uint32_t>& x,
                                  const std::vector<int>& s, bool scrambled = false) {
    using Key = std::pair<std::size_t, std::vector<std::uint32_t>>;
    const int n = poset.n();
    const int top = poset.max_rank();
    std::vector<std::vector<Key>> basis(static_cast<std::size_t>(top + 1));
    std::vector<std::map<Key, std::size_t>> index(static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top; ++k) {
        std::vector<std::size_t> ids(poset.level(k).begin(), poset.level(k).end());
        if (scrambled) std::reverse(ids.begin(), ids.end());
        for (std::size_t e : ids) {
            std::vector<std::uint32_t> radix;
            for (int i = 1; i <= n; ++i)
                for (int c = 0; c < s[static_cast<std::size_t>(poset.element(e).at(i) - 1)]; ++c)
                    radix.push_back(x[static_cast<std::size_t>(i - 1)]);
            std::vector<std::vector<std::uint32_t>> tuples{{}};
            for (auto r : radix) {
                std::vector<std::vector<std::uint32_t>> next;
                for (const auto& t : tuples)
                    for (std::uint32_t a = 0; a < r; ++a) {
                        next.push_back(t);
                        next.back().push_back(a);
                    }
                tuples = std::move(next);
            }
            if (scrambled) std::reverse(tuples.begin(), tuples.end());
            for (auto& t : tuples) {
                index[static_cast<std::size_t>(k)][{e, t}] = basis[static_cast<std::size_t>(k)].size();
                basis[static_cast<std::size_t>(k)].emplace_back(e, std::move(t));
            }
        }
    }
    NaiveComplex out;
    for (const auto& b : basis) out.dims.push_back(b.size());
    for (int k = 0; k < top; ++k) {
        Dense m = zeros(out.dims[static_cast<std::size_t>(k + 1)], out.dims[static_cast<std::size_t>(k)]);
        for (std::size_t col = 0; col < basis[static_cast<std::size_t>(k)].size(); ++col) {
            const auto& [e, digits] = basis[static_cast<std::size_t>(k)][col];
            const auto& p = poset.element(e);
            for (std::size_t t : poset.up(e)) {
                const auto& q = poset.element(t);
                std::vector<std::uint32_t> image;
                bool zero = false;
                std::size_t pos = 0;
                for (int i = 1; i <= n && !zero; ++i) {
                    const int count = s[static_cast<std::size_t>(p.at(i) - 1)];
                    std::vector<std::uint32_t> part(digits.begin() + static_cast<std::ptrdiff_t>(pos),
                                                    digits.begin() + static_cast<std::ptrdiff_t>(pos + count));
                    pos += static_cast<std::size_t>(count);
                    if (p.at(i) == q.at(i)) {
                        image.insert(image.end(), part.begin(), part.end());
                    } else if (std::all_of(part.begin(), part.end(), [&](auto v) { return v == part[0]; })) {
                        image.insert(image.end(), static_cast<std::size_t>(s[static_cast<std::size_t>(q.at(i) - 1)]),
                                     part[0]);
                    } else {
                        zero = true;
                    }
                }
                if (!zero) m[index[static_cast<std::size_t>(k + 1)].at({t, image})][col] ^= 1;
            }
        }
        out.d.push_back(std::move(m));
    }
    return out;
}

}  // namespace oracle
