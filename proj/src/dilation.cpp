#include "pmra/dilation.hpp"

#include "pmra/errors.hpp"

namespace pmra {

namespace {

void check_square(const IMat& m) {
    if (!m.is_square() || m.rows == 0) throw std::invalid_argument("dilation matrix must be square and nonempty");
}

DilationSpec make_diagonal_spec(const IMat& m) {
    DilationSpec spec;
    spec.n = m.rows;
    spec.entries = m;
    spec.diag = m;
    spec.conjugator = IMat::identity(m.rows);
    spec.conjugated = false;
    spec.det_a = 1;
    for (int j = 0; j < m.rows; ++j) {
        if (abs_i(m(j, j)) <= 1) throw NotExpanding();
        spec.det_a = mul_i(spec.det_a, m(j, j));
    }
    spec.absdet = abs_i(spec.det_a);
    return spec;
}

} // namespace

DilationSpec validate_dilation(const IMat& matrix, const std::optional<IMat>& conjugator) {
    check_square(matrix);
    i64 d = det(matrix);
    if (d == 0) throw SingularMatrix();
    if (!conjugator) {
        if (!matrix.is_diagonal())
            throw UnsupportedForm("matrix is not diagonal; supply the conjugating matrix");
        return make_diagonal_spec(matrix);
    }
    const IMat& s = *conjugator;
    check_square(s);
    if (s.rows != matrix.rows) throw DimensionMismatch();
    i64 ds = det(s);
    if (ds != 1 && ds != -1) throw NotUnimodular();
    // S * A * S^-1 must be the diagonal factor; S^-1 = adj(S)/det(S) is integral.
    IMat s_inv = adjugate(s);
    if (ds == -1)
        for (auto& x : s_inv.a) x = neg_i(x);
    IMat diag = mul(mul(s, matrix), s_inv);
    if (!diag.is_diagonal()) throw UnsupportedForm("conjugator does not diagonalize the matrix");
    DilationSpec spec = make_diagonal_spec(diag);
    spec.entries = matrix;
    spec.conjugator = s;
    spec.conjugated = true;
    return spec;
}

DilationSpec conjugate_spec(const IMat& s, const DilationSpec& diag_spec) {
    check_square(s);
    if (!diag_spec.is_diagonal_form()) throw std::invalid_argument("conjugate_spec needs a diagonal spec");
    if (s.rows != diag_spec.n) throw DimensionMismatch();
    i64 ds = det(s);
    if (ds != 1 && ds != -1) throw NotUnimodular();
    IMat s_inv = adjugate(s);
    if (ds == -1)
        for (auto& x : s_inv.a) x = neg_i(x);
    IMat m = mul(mul(s_inv, diag_spec.diag), s); // integral by construction
    DilationSpec spec = diag_spec;
    spec.entries = m;
    spec.conjugator = s;
    spec.conjugated = !m.is_diagonal() || !(m == diag_spec.diag);
    if (!spec.conjugated) spec.conjugator = IMat::identity(spec.n);
    return spec;
}

std::optional<IVec> solve_integer(const IMat& adj_m, i64 det_m, const IVec& v) {
    IVec w = mul(adj_m, v);
    if (!divisible(w, det_m)) return std::nullopt;
    for (auto& x : w) x /= det_m;
    return w;
}

} // namespace pmra
