#pragma once

#include <optional>

#include "pmra/intmat.hpp"

namespace pmra {

/// Validated integer dilation matrix. Either diagonal with |d_j| > 1, or a
/// unimodular conjugate A = S^-1 * diag * S of such a matrix.
struct DilationSpec {
    int n = 0;
    IMat entries;   // the dilation matrix A itself
    IMat diag;      // diagonal factor (equals `entries` in diagonal form)
    IMat conjugator; // S with entries = S^-1 * diag * S (identity in diagonal form)
    bool conjugated = false;
    i64 det_a = 0;  // det A (signed)
    i64 absdet = 0; // d = |det A| > 1

    bool is_diagonal_form() const { return !conjugated; }
    i64 diag_entry(int j) const { return diag(j, j); }
};

/// Validate a dilation matrix. A diagonal matrix is accepted directly; a
/// non-diagonal matrix needs `conjugator` = S with S*A*S^-1 diagonal.
DilationSpec validate_dilation(const IMat& matrix, const std::optional<IMat>& conjugator = std::nullopt);

/// Build the conjugated spec for M = S^-1 * A * S from a diagonal spec.
DilationSpec conjugate_spec(const IMat& s, const DilationSpec& diag_spec);

/// Exact solve of m*x = v given adj(m) and det(m): returns x when v lies in
/// m*Z^n, nullopt otherwise. Adjugate/determinant arithmetic only.
std::optional<IVec> solve_integer(const IMat& adj_m, i64 det_m, const IVec& v);

} // namespace pmra
