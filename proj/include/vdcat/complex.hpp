#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vdcat/bruhat.hpp"
#include "vdcat/common.hpp"
#include "vdcat/gf2.hpp"
#include "vdcat/linkdiag.hpp"

namespace vdcat {

/// One tensor position of a block: A_radix^{(x) copies}.
struct Factor {
    std::uint32_t radix = 1;
    int copies = 0;
    std::uint64_t size = 1;  ///< radix^copies
};

/// What a cover edge does on the positions it changes.
enum class EdgeRule {
    merge_split,  ///< connected cobordism map: constant tensors to constant tensors
    unit_counit,  ///< eta o epsilon with eta(1) = e_1 and epsilon(e_a) = 1
};

/// A local linear map on one tensor position, as the list of its nonzero
/// (input, output) entries, placed into a block by the position's strides.
struct LocalMap {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
    std::uint64_t in_stride = 0;
    std::uint64_t out_stride = 0;
};

/// Calls fn(out, in) for every nonzero entry of the tensor product of `maps`.
/// Distinct entry combinations give distinct (out, in) pairs.
template <class Fn>
void for_each_tensor_entry(std::span<const LocalMap> maps, Fn&& fn) {
    for (const auto& m : maps)
        if (m.entries.empty()) return;
    std::vector<std::size_t> idx(maps.size(), 0);
    while (true) {
        std::uint64_t in = 0, out = 0;
        for (std::size_t p = 0; p < maps.size(); ++p) {
            const auto& e = maps[p].entries[idx[p]];
            in += e.first * maps[p].in_stride;
            out += e.second * maps[p].out_stride;
        }
        fn(out, in);
        std::size_t p = maps.size();
        while (p > 0) {
            --p;
            if (++idx[p] < maps[p].entries.size()) break;
            idx[p] = 0;
            if (p == 0) return;
        }
        if (maps.empty()) return;
    }
}

inline constexpr std::uint64_t kDefaultBasisBudget = 10'000'000;

/// Shared, cached Bruhat poset for S_n.
std::shared_ptr<const BruhatPoset> shared_bruhat(int n, int cap = kDefaultBruhatCap);

/// A cochain complex shaped like the Bruhat order: level k is the direct sum
/// over inv(pi) = k of a tensor product of factors, one per position.
///
/// Basis order: blocks by pi lexicographically within a level; inside a block,
/// mixed radix with position 1 most significant and, within a position, the
/// circles in their deterministic order.
class CochainComplex {
public:
    CochainComplex(std::shared_ptr<const BruhatPoset> poset, std::vector<std::vector<Factor>> factors, EdgeRule rule);

    int n() const { return poset_->n(); }
    int top_level() const { return poset_->max_rank(); }
    const BruhatPoset& poset() const { return *poset_; }
    std::shared_ptr<const BruhatPoset> shared_poset() const { return poset_; }
    EdgeRule rule() const { return rule_; }

    const std::vector<std::uint64_t>& level_dims() const { return level_dims_; }
    std::uint64_t total_dim() const;

    std::span<const Factor> factors(std::size_t element) const { return factors_[element]; }
    std::uint64_t block_offset(std::size_t element) const { return offset_[element]; }
    std::uint64_t block_size(std::size_t element) const { return block_size_[element]; }
    /// Stride of position i (one-based) inside its block.
    std::uint64_t stride(std::size_t element, int position) const {
        return strides_[element][static_cast<std::size_t>(position - 1)];
    }

    /// Element id owning the given basis index of level k.
    std::size_t element_at(int level, std::uint64_t index) const;

    /// Digits of a basis element: one entry per circle, positions in order.
    std::vector<std::uint32_t> digits(std::size_t element, std::uint64_t local) const;
    std::uint64_t local_index(std::size_t element, std::span<const std::uint32_t> digits) const;

    /// The local maps of the cover edge bottom -> top, one per position.
    std::vector<LocalMap> edge_maps(std::size_t bottom, std::size_t top) const;

    /// delta^k as a (dim C^{k+1}) x (dim C^k) matrix; 0 x dim or dim x 0 at the ends.
    SparseGF2 differential(int k) const;

    /// Rows of delta^k applied to basis column `col` of level k, appended to `out`.
    void apply_differential(int k, std::uint64_t col, std::vector<std::uint64_t>& out) const;

    /// Color vector and circle profile when built from a link diagram.
    const std::optional<ColorVector>& colors() const { return colors_; }
    const std::optional<SmoothingProfile>& profile() const { return profile_; }

private:
    friend CochainComplex build_complex(const LinkDiagram&, const ColorVector&, std::uint64_t, int);

    std::shared_ptr<const BruhatPoset> poset_;
    std::vector<std::vector<Factor>> factors_;
    std::vector<std::vector<std::uint64_t>> strides_;
    std::vector<std::uint64_t> block_size_;
    std::vector<std::uint64_t> offset_;
    std::vector<std::uint64_t> level_dims_;
    EdgeRule rule_;
    std::optional<ColorVector> colors_;
    std::optional<SmoothingProfile> profile_;
};

/// dim C^k = sum over inv(pi) = k of prod_i x_i^{s_{pi(i)}}, exactly.
std::vector<BigInt> predicted_level_dims(const BruhatPoset& poset, const ColorVector& x, const SmoothingProfile& s);

BigInt alternating_sum(std::span<const BigInt> dims);

/// Throws PreconditionError on a length mismatch and SizeError when the total
/// dimension exceeds `budget`.
CochainComplex build_complex(const LinkDiagram& d, const ColorVector& x, std::uint64_t budget = kDefaultBasisBudget,
                             int bruhat_cap = kDefaultBruhatCap);

/// Checks delta^{k+1} delta^k = 0 by applying the differential column by
/// column, without materializing matrices. `threads` = 0 or 1 runs serially.
bool d_squared_vanishes(const CochainComplex& c, unsigned threads = 1);

struct HomologyOptions {
    unsigned threads = 1;
    /// Dense elimination is used while rows * cols stays below this many bits.
    std::uint64_t dense_limit_bits = std::uint64_t{1} << 28;
};

struct HomologyReport {
    int n = 0;
    std::vector<std::uint32_t> x;
    std::vector<int> s;
    std::vector<std::uint64_t> cochain_dims;
    std::optional<std::vector<std::uint64_t>> homology_dims;
    BigInt euler_characteristic = 0;
    std::optional<BigInt> homology_euler_characteristic;
    std::optional<BigInt> determinant;
    std::optional<bool> agree;
    double elapsed_ms = 0;
};

/// Ranks of all differentials.
std::vector<std::uint64_t> differential_ranks(const CochainComplex& c, const HomologyOptions& options = {});

/// Cohomology dimensions and Euler characteristic. Throws ConsistencyError if
/// the differential does not square to zero.
HomologyReport homology(const CochainComplex& c, const HomologyOptions& options = {});

struct EulerOptions {
    std::uint64_t budget = kDefaultBasisBudget;
    bool skip_homology = false;
    HomologyOptions homology;
    int bruhat_cap = kDefaultBruhatCap;
};

/// Complete report: cochain and (unless skipped) cohomology dimensions, Euler
/// characteristic, det(x_i^{s_j}) and whether the two agree. With
/// skip_homology the complex is never built and no budget applies.
HomologyReport verify_euler(const LinkDiagram& d, const ColorVector& x, const EulerOptions& options = {});

struct OrderIndependence {
    bool identical = false;
    /// False when the diagram is not height-uniform; the comparison is still made.
    bool height_uniform = true;
};

/// Compares the complex of `d` with that of `d` reordered so crossing i of
/// the new diagram is crossing reordering(i) of the old one.
OrderIndependence order_independence_check(const LinkDiagram& d, const ColorVector& x, const Permutation& reordering,
                                           std::uint64_t budget = kDefaultBasisBudget);

}  // namespace vdcat
