#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vdcat {

/// A permutation of {1..n} in one-line notation. Ordered lexicographically.
class Permutation {
public:
    Permutation() = default;

    /// Throws ValidationError unless `entries` is a bijection of {1..n}.
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    /// Parses "213" (digits, n <= 9) or "2,1,3".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }

    /// One-based: at(1) is the first entry.
    int at(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

    std::span<const int> entries() const { return entries_; }

    /// Right multiplication by the transposition (i j): swaps positions i and j.
    Permutation swapped(int i, int j) const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

int inversions(const Permutation& p);

/// Sign (-1)^inv(p).
int sign(const Permutation& p);

/// Position of p among all permutations of its size in lexicographic order.
std::size_t lex_rank(const Permutation& p);

/// All sigma covering p in strong Bruhat order, lexicographically sorted.
/// Uses the one-line interchange criterion: swap p_i < p_j (i < j) when no
/// entry strictly between positions i and j has value in (p_i, p_j).
std::vector<Permutation> covers(const Permutation& p);

inline constexpr int kDefaultBruhatCap = 6;

/// Strong Bruhat order on S_n. Elements are stored in lexicographic order and
/// addressed by `lex_rank`.
class BruhatPoset {
public:
    struct Edge {
        std::size_t bottom;
        std::size_t top;
    };

    int n() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    int max_rank() const { return n_ * (n_ - 1) / 2; }

    const Permutation& element(std::size_t id) const { return elements_[id]; }
    std::size_t id_of(const Permutation& p) const;
    int rank_of(std::size_t id) const { return rank_[id]; }

    /// Element ids with inv = k, lexicographic.
    std::span<const std::size_t> level(int k) const { return levels_[static_cast<std::size_t>(k)]; }
    std::vector<std::size_t> level_sizes() const;

    /// Ids of the elements covering `id`, lexicographic.
    std::span<const std::size_t> up(std::size_t id) const { return up_[id]; }
    std::span<const std::size_t> down(std::size_t id) const { return down_[id]; }

    std::span<const Edge> cover_edges() const { return edges_; }

    /// Position of `id` inside its level listing.
    std::size_t index_in_level(std::size_t id) const { return index_in_level_[id]; }

private:
    friend BruhatPoset build_bruhat(int n, int cap);

    int n_ = 0;
    std::vector<Permutation> elements_;
    std::vector<int> rank_;
    std::vector<std::vector<std::size_t>> levels_;
    std::vector<std::size_t> index_in_level_;
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::size_t>> down_;
    std::vector<Edge> edges_;
};

/// Throws SizeError for n above `cap`, ValidationError for n < 1.
BruhatPoset build_bruhat(int n, int cap = kDefaultBruhatCap);

/// All m with bottom < m < top. Throws PreconditionError unless
/// [bottom, top] is an interval of length 2.
std::vector<Permutation> length2_middles(const BruhatPoset& poset, const Permutation& bottom,
                                         const Permutation& top);

/// Coefficients of prod_{k=1}^{n} (1 + q + ... + q^{k-1}).
std::vector<std::uint64_t> mahonian_numbers(int n);

}  // namespace vdcat
