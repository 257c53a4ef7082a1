#pragma once

#include <vector>

#include "pmra/checked.hpp"

namespace pmra {

using IVec = std::vector<i64>;

/// Dense integer matrix with exact (overflow-checked) arithmetic.
struct IMat {
    int rows = 0;
    int cols = 0;
    std::vector<i64> a; // row-major

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    i64& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    i64 operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    static IMat identity(int n);
    static IMat diagonal(const IVec& d);
    static IMat from_rows(const std::vector<IVec>& rows);

    bool is_square() const { return rows == cols; }
    bool is_diagonal() const;
    IMat transposed() const;
};

IMat mul(const IMat& x, const IMat& y);
IVec mul(const IMat& m, const IVec& v);
IMat add(const IMat& x, const IMat& y);
IMat sub(const IMat& x, const IMat& y);

/// m^k for k >= 0 (m square).
IMat mat_pow(const IMat& m, int k);

/// Exact determinant (fraction-free Bareiss elimination).
i64 det(const IMat& m);

/// Adjugate: m * adjugate(m) = det(m) * I. Cofactor expansion; intended for
/// the small dimensions this library works in.
IMat adjugate(const IMat& m);

IVec add(const IVec& x, const IVec& y);
IVec sub(const IVec& x, const IVec& y);

/// True iff every component of v is divisible by m (m != 0).
bool divisible(const IVec& v, i64 m);

} // namespace pmra
