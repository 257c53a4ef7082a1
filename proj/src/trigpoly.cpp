#include "pmra/trigpoly.hpp"

#include <cmath>

namespace pmra {

void TrigPoly::add_term(const IVec& freq, cplx c) {
    if (static_cast<int>(freq.size()) != n) throw DimensionMismatch("frequency arity mismatch");
    auto it = coeffs.find(freq);
    if (it == coeffs.end()) {
        if (c != cplx{0.0, 0.0}) coeffs.emplace(freq, c);
        return;
    }
    it->second += c;
    if (it->second == cplx{0.0, 0.0}) coeffs.erase(it);
}

cplx TrigPoly::coefficient(const IVec& freq) const {
    auto it = coeffs.find(freq);
    return it == coeffs.end() ? cplx{0.0, 0.0} : it->second;
}

cplx TrigPoly::eval(const double* x) const {
    const double inv_p = 1.0 / static_cast<double>(period);
    cplx acc{0.0, 0.0};
    for (const auto& [v, c] : coeffs) {
        double phase = 0.0;
        for (int j = 0; j < n; ++j) phase += static_cast<double>(v[static_cast<size_t>(j)]) * x[j];
        acc += c * unit_e(phase * inv_p);
    }
    return acc;
}

cplx TrigPoly::eval1(double x) const {
    if (n != 1) throw DimensionMismatch("eval1 needs a univariate polynomial");
    return eval(&x);
}

i64 TrigPoly::max_abs_freq() const {
    i64 m = 0;
    for (const auto& [v, c] : coeffs) {
        (void)c;
        for (i64 vj : v) m = std::max(m, abs_i(vj));
    }
    return m;
}

double TrigPoly::coeff_abs_sum() const {
    double s = 0.0;
    for (const auto& [v, c] : coeffs) {
        (void)v;
        s += std::abs(c);
    }
    return s;
}

TrigPoly tensor_trig(const std::vector<TrigPoly>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor_trig needs at least one factor");
    const i64 period = factors.front().period;
    int n_total = 0;
    for (const auto& f : factors) {
        if (f.period != period) throw QuasiPeriodMismatch("tensor factors must share a period");
        n_total += f.n;
    }
    TrigPoly out(n_total, period);
    std::vector<std::pair<IVec, cplx>> acc{{IVec{}, cplx{1.0, 0.0}}};
    for (const auto& f : factors) {
        std::vector<std::pair<IVec, cplx>> next;
        next.reserve(acc.size() * f.coeffs.size());
        for (const auto& [prefix, pc] : acc) {
            for (const auto& [v, c] : f.coeffs) {
                IVec joined = prefix;
                joined.insert(joined.end(), v.begin(), v.end());
                next.emplace_back(std::move(joined), pc * c);
            }
        }
        acc = std::move(next);
    }
    for (auto& [v, c] : acc) out.add_term(v, c);
    return out;
}

} // namespace pmra
