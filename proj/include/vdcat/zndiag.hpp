#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vdcat/common.hpp"
#include "vdcat/complex.hpp"
#include "vdcat/gf2.hpp"
#include "vdcat/linkdiag.hpp"

namespace vdcat {

/// An arc-and-dot strip diagram from `source` to `target`, up to isotopy.
/// Arcs are one-based (i, j) pairs; dots are colors.
struct ZndiagMorphism {
    ColorVector source;
    ColorVector target;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::uint32_t> dots;

    static ZndiagMorphism identity(const ColorVector& x);

    friend bool operator==(const ZndiagMorphism&, const ZndiagMorphism&) = default;
};

/// Returns the canonical form (sorted arcs and dots). Throws ConstraintError
/// for an arc with i > j or x_i != y_j, MatchingError for a repeated endpoint,
/// and ValidationError for bad lengths or indices.
ZndiagMorphism validate_morphism(const ZndiagMorphism& m);

/// `a` followed by `b` (diagrammatic order). A middle point unmatched on both
/// sides leaves a closed component, recorded as a dot of its color.
/// Throws CompositionError when a.target != b.source.
ZndiagMorphism compose(const ZndiagMorphism& a, const ZndiagMorphism& b);

/// Per-level maps C^k(D, x) -> C^k(D, y), block diagonal over pi.
struct ChainMap {
    std::vector<SparseGF2> levels;

    friend bool operator==(const ChainMap&, const ChainMap&) = default;
};

/// Levelwise product: `second` after `first`.
ChainMap then(const ChainMap& first, const ChainMap& second);

/// cx and cy must be the complexes of one diagram colored by m.source and m.target.
ChainMap chain_map(const CochainComplex& cx, const CochainComplex& cy, const ZndiagMorphism& m);
ChainMap chain_map(const LinkDiagram& d, const ZndiagMorphism& m, std::uint64_t budget = kDefaultBasisBudget);

/// delta_y^k f^k = f^{k+1} delta_x^k at every level.
bool chain_map_commutes(const CochainComplex& cx, const CochainComplex& cy, const ChainMap& f);

/// Deterministic bases of H^k for every level of a complex.
class CohomologyBasis {
public:
    explicit CohomologyBasis(const CochainComplex& c);

    std::size_t levels() const { return quotients_.size(); }
    const QuotientBasis& level(int k) const { return quotients_[static_cast<std::size_t>(k)]; }
    std::vector<std::size_t> dims() const;

private:
    std::vector<QuotientBasis> quotients_;
};

/// Matrices of H^k(f) in the bases above (rows: target, columns: source).
/// Throws ConsistencyError if f sends a cycle outside the target cycle space.
std::vector<GF2Matrix> induced_cohomology_map(const ChainMap& f, const CohomologyBasis& source,
                                              const CohomologyBasis& target);
std::vector<GF2Matrix> induced_cohomology_map(const LinkDiagram& d, const ZndiagMorphism& m,
                                              std::uint64_t budget = kDefaultBasisBudget);

/// {"source": [...], "target": [...], "arcs": [[i, j], ...], "dots": [...]}.
/// Throws FormatError on malformed input; the result is validated.
ZndiagMorphism parse_morphism(std::string_view json_text);
std::string serialize_morphism(const ZndiagMorphism& m);

}  // namespace vdcat
