#pragma once

#include <optional>
#include <vector>

#include "pmra/trigpoly.hpp"

namespace pmra {

/// Entry tolerance for accepting a supplied coefficient matrix as unitary.
inline constexpr double kOrthonormalTol = 1e-12;

/// One-dimensional low/high-pass family for an integer dilation factor d,
/// |d| > 1. Row l of `rows` holds the coefficients a_{l,j}; mu[l] is the
/// period-|d| profile sum_j a_{l,j} e(j t / d) and m[l](x) = mu[l](d x) the
/// period-1 mask. Row 0 is always the normalized averaging filter, so
/// m[0](0) = sqrt(|d|).
struct FilterBank {
    i64 d = 2;    // signed dilation factor
    i64 absd = 2; // |d|
    std::vector<std::vector<cplx>> rows;
    std::vector<TrigPoly> mu;
    std::vector<TrigPoly> m;
};

/// Builds the bank for factor d. With no completion the remaining rows come
/// from Gram-Schmidt applied to the averaging row followed by the standard
/// basis, which is deterministic and real. A supplied matrix must be
/// |d| x |d|, unitary to kOrthonormalTol, with averaging first row; anything
/// else throws NotOrthonormal.
FilterBank haar_filter_bank(i64 d,
                            const std::optional<std::vector<std::vector<cplx>>>& completion = std::nullopt);

struct FilterVerifyReport {
    double m0_zero_dev = 0.0;  // | m0(0) - sqrt(|d|) |
    double gram_max_dev = 0.0; // max over grid of | Gram - |d| * I |
    double cohen_min = 0.0;    // min |m0| over [-1/(2|d|), 1/(2|d|)]
    bool m0_ok = false;
    bool gram_ok = false;
    bool cohen_ok = false;
    bool pass = false;
};

/// Samples x = k/grid_n over one period and checks
///   sum_{i<|d|} conj(m_l) m_k (x - i/|d|) = |d| delta_{lk},
/// the normalization m0(0) = sqrt(|d|), and that |m0| stays above tol on the
/// low-frequency interval. pass requires deviations below tol and the
/// low-frequency margin above it.
FilterVerifyReport verify_filter_bank(const FilterBank& fb, int grid_n, double tol);

/// Separable mask prod_j m0^(j)(x_j) for a diagonal dilation, one factor per
/// axis.
TrigPoly tensor_filter(const std::vector<FilterBank>& banks);

} // namespace pmra
