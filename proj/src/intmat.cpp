#include "pmra/intmat.hpp"

#include <stdexcept>

namespace pmra {

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IMat IMat::diagonal(const IVec& d) {
    IMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows; ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

IMat IMat::from_rows(const std::vector<IVec>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    IMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != m.cols)
            throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < m.cols; ++c) m(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
    return m;
}

bool IMat::is_diagonal() const {
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (r != c && (*this)(r, c) != 0) return false;
    return true;
}

IMat IMat::transposed() const {
    IMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IMat mul(const IMat& x, const IMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix size mismatch");
    IMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            i64 v = x(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) = add_i(r(i, j), mul_i(v, y(k, j)));
        }
    return r;
}

IVec mul(const IMat& m, const IVec& v) {
    if (m.cols != static_cast<int>(v.size())) throw std::invalid_argument("matrix/vector size mismatch");
    IVec r(static_cast<size_t>(m.rows), 0);
    for (int i = 0; i < m.rows; ++i) {
        i64 s = 0;
        for (int j = 0; j < m.cols; ++j) s = add_i(s, mul_i(m(i, j), v[static_cast<size_t>(j)]));
        r[static_cast<size_t>(i)] = s;
    }
    return r;
}

IMat add(const IMat& x, const IMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix size mismatch");
    IMat r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = add_i(x.a[i], y.a[i]);
    return r;
}

IMat sub(const IMat& x, const IMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix size mismatch");
    IMat r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = sub_i(x.a[i], y.a[i]);
    return r;
}

IMat mat_pow(const IMat& m, int k) {
    if (!m.is_square()) throw std::invalid_argument("mat_pow needs a square matrix");
    if (k < 0) throw std::invalid_argument("mat_pow needs k >= 0");
    IMat r = IMat::identity(m.rows);
    for (int j = 0; j < k; ++j) r = mul(r, m);
    return r;
}

i64 det(const IMat& m) {
    if (!m.is_square()) throw std::invalid_argument("det needs a square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    IMat w = m;
    i64 sign = 1;
    i64 prev = 1; // Bareiss pivot from the previous step; divisions are exact
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (w(r, k) != 0) { p = r; break; }
            if (p < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(w(k, c), w(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                i64 num = sub_i(mul_i(w(i, j), w(k, k)), mul_i(w(i, k), w(k, j)));
                w(i, j) = num / prev;
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return mul_i(sign, w(n - 1, n - 1));
}

namespace {

i64 minor_det(const IMat& m, int skip_row, int skip_col) {
    IMat s(m.rows - 1, m.cols - 1);
    int ri = 0;
    for (int r = 0; r < m.rows; ++r) {
        if (r == skip_row) continue;
        int ci = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (c == skip_col) continue;
            s(ri, ci) = m(r, c);
            ++ci;
        }
        ++ri;
    }
    return det(s);
}

} // namespace

IMat adjugate(const IMat& m) {
    if (!m.is_square()) throw std::invalid_argument("adjugate needs a square matrix");
    int n = m.rows;
    if (n == 0) return m;
    if (n == 1) {
        IMat r(1, 1);
        r(0, 0) = 1;
        return r;
    }
    IMat adj(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            i64 d = minor_det(m, c, r); // cofactor of (c,r), transposed placement
            adj(r, c) = ((r + c) % 2 == 0) ? d : neg_i(d);
        }
    return adj;
}

IVec add(const IVec& x, const IVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
    IVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = add_i(x[i], y[i]);
    return r;
}

IVec sub(const IVec& x, const IVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
    IVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = sub_i(x[i], y[i]);
    return r;
}

bool divisible(const IVec& v, i64 m) {
    if (m == 0) throw std::invalid_argument("divisible: zero modulus");
    for (i64 x : v)
        if (x % m != 0) return false;
    return true;
}

} // namespace pmra
