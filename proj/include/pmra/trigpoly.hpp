#pragma once

#include <complex>
#include <map>

#include "pmra/intmat.hpp"

namespace pmra {

using cplx = std::complex<double>;

/// e(r) = exp(2*pi*i*r).
inline cplx unit_e(double r) {
    const double th = 6.283185307179586476925286766559 * r;
    return {std::cos(th), std::sin(th)};
}

/// Finite trigonometric polynomial in n variables with a common integer
/// period P: x -> sum_v c_v e((v . x)/P). Exact frequency bookkeeping makes
/// periodicity mod P structural rather than numerical.
struct TrigPoly {
    int n = 1;
    i64 period = 1;
    std::map<IVec, cplx> coeffs;

    TrigPoly() = default;
    TrigPoly(int n_, i64 period_) : n(n_), period(period_) {
        if (n_ < 1 || period_ < 1) throw std::invalid_argument("TrigPoly needs n >= 1 and period >= 1");
    }

    void add_term(const IVec& freq, cplx c);
    cplx coefficient(const IVec& freq) const;

    cplx eval(const double* x) const;
    cplx eval1(double x) const; // n = 1 convenience

    /// Largest |v_j| over all stored frequencies (0 for constants).
    i64 max_abs_freq() const;
    /// sum |c_v|, a sup-norm bound.
    double coeff_abs_sum() const;
};

/// Product polynomial m(x_1..x_k) = prod_j f_j(x_j) of univariate factors
/// with a common period.
TrigPoly tensor_trig(const std::vector<TrigPoly>& factors);

} // namespace pmra
