#include "pmra/filterbank.hpp"

#include <cmath>

namespace pmra {

namespace {

cplx dot_conj(const std::vector<cplx>& u, const std::vector<cplx>& v) {
    cplx s{0.0, 0.0};
    for (size_t j = 0; j < u.size(); ++j) s += std::conj(u[j]) * v[j];
    return s;
}

std::vector<std::vector<cplx>> default_completion(i64 absd) {
    const size_t dd = static_cast<size_t>(absd);
    const double inv = 1.0 / std::sqrt(static_cast<double>(absd));
    std::vector<std::vector<cplx>> rows;
    rows.reserve(dd);
    rows.emplace_back(dd, cplx{inv, 0.0});
    for (size_t cand = 0; cand < dd && rows.size() < dd; ++cand) {
        std::vector<cplx> v(dd, cplx{0.0, 0.0});
        v[cand] = {1.0, 0.0};
        for (const auto& r : rows) {
            const cplx p = dot_conj(r, v);
            for (size_t j = 0; j < dd; ++j) v[j] -= p * r[j];
        }
        double norm = 0.0;
        for (const auto& z : v) norm += std::norm(z);
        norm = std::sqrt(norm);
        if (norm < 1e-10) continue;
        for (auto& z : v) z /= norm;
        rows.push_back(std::move(v));
    }
    return rows;
}

void check_unitary(const std::vector<std::vector<cplx>>& rows, i64 absd) {
    const size_t dd = static_cast<size_t>(absd);
    if (rows.size() != dd) throw NotOrthonormal("coefficient matrix must have |d| rows");
    for (const auto& r : rows)
        if (r.size() != dd) throw NotOrthonormal("coefficient matrix must have |d| columns");
    const double inv = 1.0 / std::sqrt(static_cast<double>(absd));
    for (size_t j = 0; j < dd; ++j)
        if (std::abs(rows[0][j] - cplx{inv, 0.0}) > kOrthonormalTol)
            throw NotOrthonormal("first row must be the normalized averaging filter");
    for (size_t l = 0; l < dd; ++l)
        for (size_t k = 0; k < dd; ++k) {
            const cplx g = dot_conj(rows[l], rows[k]);
            const cplx want = (l == k) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (std::abs(g - want) > kOrthonormalTol) throw NotOrthonormal();
        }
}

} // namespace

FilterBank haar_filter_bank(i64 d, const std::optional<std::vector<std::vector<cplx>>>& completion) {
    const i64 absd = abs_i(d);
    if (absd < 2) throw NotExpanding("dilation factor needs |d| > 1");
    FilterBank fb;
    fb.d = d;
    fb.absd = absd;
    fb.rows = completion ? *completion : default_completion(absd);
    check_unitary(fb.rows, absd);

    const i64 s = sign_i(d);
    fb.mu.reserve(fb.rows.size());
    fb.m.reserve(fb.rows.size());
    for (const auto& row : fb.rows) {
        TrigPoly mu(1, absd); // mu_l(t) = sum_j a_{l,j} e(j t / d), stored over period |d|
        TrigPoly m(1, 1);     // m_l(x) = mu_l(d x)
        for (size_t j = 0; j < row.size(); ++j) {
            const i64 jj = static_cast<i64>(j);
            mu.add_term(IVec{s * jj}, row[j]);
            m.add_term(IVec{jj}, row[j]);
        }
        fb.mu.push_back(std::move(mu));
        fb.m.push_back(std::move(m));
    }
    return fb;
}

FilterVerifyReport verify_filter_bank(const FilterBank& fb, int grid_n, double tol) {
    if (grid_n < 2 * static_cast<int>(fb.absd))
        throw std::invalid_argument("verify_filter_bank needs grid_n >= 2*|d|");
    FilterVerifyReport rep;
    const size_t dd = fb.m.size();
    const double dabs = static_cast<double>(fb.absd);

    rep.m0_zero_dev = std::abs(fb.m[0].eval1(0.0) - cplx{std::sqrt(dabs), 0.0});

    double gdev = 0.0;
    for (int k = 0; k < grid_n; ++k) {
        const double x = static_cast<double>(k) / static_cast<double>(grid_n);
        std::vector<std::vector<cplx>> vals(dd, std::vector<cplx>(dd));
        for (size_t l = 0; l < dd; ++l)
            for (size_t i = 0; i < dd; ++i)
                vals[l][i] = fb.m[l].eval1(x - static_cast<double>(i) / dabs);
        for (size_t l = 0; l < dd; ++l)
            for (size_t kk = 0; kk < dd; ++kk) {
                cplx g{0.0, 0.0};
                for (size_t i = 0; i < dd; ++i) g += std::conj(vals[l][i]) * vals[kk][i];
                const cplx want = (l == kk) ? cplx{dabs, 0.0} : cplx{0.0, 0.0};
                gdev = std::max(gdev, std::abs(g - want));
            }
    }
    rep.gram_max_dev = gdev;

    double cmin = std::numeric_limits<double>::infinity();
    const double half = 1.0 / (2.0 * dabs);
    for (int k = 0; k <= grid_n; ++k) {
        const double x = -half + 2.0 * half * static_cast<double>(k) / static_cast<double>(grid_n);
        cmin = std::min(cmin, std::abs(fb.m[0].eval1(x)));
    }
    rep.cohen_min = cmin;

    rep.m0_ok = rep.m0_zero_dev < tol;
    rep.gram_ok = rep.gram_max_dev < tol;
    rep.cohen_ok = rep.cohen_min > tol;
    rep.pass = rep.m0_ok && rep.gram_ok && rep.cohen_ok;
    return rep;
}

TrigPoly tensor_filter(const std::vector<FilterBank>& banks) {
    if (banks.empty()) throw std::invalid_argument("tensor_filter needs at least one bank");
    std::vector<TrigPoly> factors;
    factors.reserve(banks.size());
    for (const auto& fb : banks) factors.push_back(fb.m[0]);
    return tensor_trig(factors);
}

} // namespace pmra
