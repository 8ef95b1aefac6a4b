#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "vdcat/common.hpp"
#include "vdcat/complex.hpp"
#include "vdcat/linkdiag.hpp"

namespace vdcat {

/// Square matrix with entries >= 1.
class PosIntMatrix {
public:
    /// Throws ValidationError unless `rows` is a nonempty square array of
    /// positive integers.
    explicit PosIntMatrix(std::vector<std::vector<BigInt>> rows);

    int n() const { return n_; }
    /// One-based.
    const BigInt& at(int i, int j) const {
        return entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
    }
    std::vector<std::vector<BigInt>> rows() const;

    friend bool operator==(const PosIntMatrix&, const PosIntMatrix&) = default;

private:
    int n_ = 0;
    std::vector<BigInt> entries_;
};

/// Fraction-free (Bareiss) elimination in arbitrary precision.
BigInt det_exact(const PosIntMatrix& m);

inline constexpr int kPermutationExpansionCap = 12;

/// Sum over S_n of sign(pi) prod m_{i,pi(i)}. Throws SizeError above the cap.
BigInt det_by_permutations(const PosIntMatrix& m, int cap = kPermutationExpansionCap);

/// Entry (i, j) = x_i^{s_j}.
PosIntMatrix vandermonde_matrix(const ColorVector& x, const SmoothingProfile& s);

/// Bruhat-shaped complex with A_pi = A_{m_{1,pi(1)}} (x) ... (x) A_{m_{n,pi(n)}}.
/// Covers act by the identity on unchanged positions and by eta o epsilon on
/// the two changed ones, with eta(1) = e_1 and epsilon(e_a) = 1.
CochainComplex build_matrix_complex(const PosIntMatrix& m, std::uint64_t budget = kDefaultBasisBudget,
                                    int bruhat_cap = kDefaultBruhatCap);

/// Reads {"matrix": [[...], ...]}. Throws FormatError on malformed input.
PosIntMatrix parse_matrix(std::string_view json_text);

}  // namespace vdcat
