#pragma once

#include <cstdint>
#include <span>

#include "vdcat/gf2.hpp"

namespace vdcat {

/// The algebra A_dim = (Z/2)^dim with pointwise product and basis e_1..e_dim.
struct AlgebraSpec {
    std::uint32_t dim = 1;

    explicit AlgebraSpec(std::uint32_t d);
};

enum class CobordismKind { identity, connected, sphere };

/// A connected colored cobordism up to diffeomorphism, minus genus.
struct CobordismShape {
    std::uint32_t dim;
    int r;  ///< in-circles
    int l;  ///< out-circles
    CobordismKind kind;

    /// Throws ValidationError when the counts do not fit the kind.
    void validate() const;
};

/// Structure maps of the product algebra (Z/2)^n:
/// mult(e_a, e_b) = [a == b] e_a, unit = sum of e_a, comult(e_a) = e_a (x) e_a,
/// counit(e_a) = 1.
struct FrobeniusStructure {
    GF2Matrix mult;    ///< dim x dim^2
    GF2Matrix unit;    ///< dim x 1
    GF2Matrix comult;  ///< dim^2 x dim
    GF2Matrix counit;  ///< 1 x dim
};

FrobeniusStructure product_algebra(AlgebraSpec spec);

/// dim^count with overflow checking against `limit`; throws SizeError.
std::uint64_t checked_power(std::uint64_t base, int exponent, std::uint64_t limit);

/// Index of the constant tensor e_a (x) ... (x) e_a (`count` factors, a zero-based)
/// in mixed-radix order with the leftmost factor most significant.
std::uint64_t constant_tensor_index(std::uint32_t dim, int count, std::uint32_t a);

inline constexpr std::uint64_t kDefaultTensorBudgetBits = std::uint64_t{1} << 30;

/// The map of a connected cobordism with r in- and l out-circles: the constant
/// tensor on a goes to the constant tensor on a, every other basis tensor to 0.
/// Shape dim^l x dim^r. Throws PreconditionError for r = l = 0.
GF2Matrix connected_map(AlgebraSpec spec, int r, int l, std::uint64_t budget_bits = kDefaultTensorBudgetBits);

/// epsilon(eta(1)) = dim mod 2.
bool sphere_scalar(AlgebraSpec spec);

/// Matrix of any CobordismShape (the sphere gives a 1x1 scalar).
GF2Matrix cobordism_map(const CobordismShape& shape);

inline constexpr std::uint32_t kDefaultFrobeniusCap = 8;

/// Checks associativity, unit, coassociativity, counit, the Frobenius
/// relation, commutativity and mu o Delta = 1 as matrix identities.
bool frobenius_check(AlgebraSpec spec, std::uint32_t cap = kDefaultFrobeniusCap);

/// Kronecker product in list order; leftmost factor most significant.
/// An empty list gives the 1x1 identity.
GF2Matrix tensor_assemble(std::span<const GF2Matrix> factors, std::uint64_t budget_bits = kDefaultTensorBudgetBits);

}  // namespace vdcat
