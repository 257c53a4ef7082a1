#include "pmra/decay.hpp"

#include <cmath>
#include <limits>

namespace pmra {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double AxisDecay::bound(double r) const {
    if (r < 0.0) r = 0.0;
    if (compact && r > radius) return 0.0;
    double b = sup;
    if (has_power && r >= 1.0) b = std::min(b, c * std::pow(r, -p));
    return b;
}

AxisDecay axis_bounded(double sup) {
    AxisDecay a;
    a.sup = sup;
    return a;
}

AxisDecay axis_power(double sup, double c, double p) {
    AxisDecay a;
    a.sup = sup;
    a.has_power = true;
    a.c = c;
    a.p = p;
    return a;
}

AxisDecay axis_compact(double sup, double radius) {
    AxisDecay a;
    a.sup = sup;
    a.compact = true;
    a.radius = radius;
    return a;
}

AxisDecay axis_product(const AxisDecay& a, const AxisDecay& b) {
    AxisDecay out;
    out.sup = a.sup * b.sup;
    if (a.has_power && b.has_power) {
        out.has_power = true;
        out.c = a.c * b.c;
        out.p = a.p + b.p;
    } else if (a.has_power) {
        out.has_power = true;
        out.c = a.c * b.sup;
        out.p = a.p;
    } else if (b.has_power) {
        out.has_power = true;
        out.c = b.c * a.sup;
        out.p = b.p;
    }
    if (a.compact || b.compact) {
        out.compact = true;
        if (a.compact && b.compact)
            out.radius = std::min(a.radius, b.radius);
        else
            out.radius = a.compact ? a.radius : b.radius;
    }
    return out;
}

AxisDecay axis_sum(const AxisDecay& a, const AxisDecay& b) {
    AxisDecay out;
    out.sup = a.sup + b.sup;
    if (a.compact && b.compact) {
        out.compact = true;
        out.radius = std::max(a.radius, b.radius);
    }
    // A compact summand admits any exponent: sup * max(1, radius)^p bounds it
    // for r >= 1 and it vanishes beyond radius.
    const bool a_decays = a.has_power || a.compact;
    const bool b_decays = b.has_power || b.compact;
    if (a_decays && b_decays && !(out.compact && !a.has_power && !b.has_power)) {
        double pp = kInf;
        if (a.has_power) pp = std::min(pp, a.p);
        if (b.has_power) pp = std::min(pp, b.p);
        if (std::isfinite(pp)) {
            auto eff_c = [pp](const AxisDecay& e) {
                if (e.has_power && e.p <= pp + 1e-15) return e.c;
                if (e.compact) return e.sup * std::pow(std::max(1.0, e.radius), pp);
                return e.c; // has_power with larger p: c * r^-p <= c * r^-pp for r >= 1
            };
            out.has_power = true;
            out.p = pp;
            out.c = eff_c(a) + eff_c(b);
        }
    }
    return out;
}

AxisDecay axis_dilate(const AxisDecay& a, double dil) {
    AxisDecay out = a;
    if (a.has_power) out.c = std::max(a.c, a.sup) * std::pow(dil, a.p);
    if (a.compact) out.radius = a.radius * dil;
    return out;
}

AxisDecay axis_shift(const AxisDecay& a, double abs_h) {
    if (abs_h == 0.0) return a;
    AxisDecay out = a;
    if (a.has_power) out.c = std::max(a.c, a.sup) * std::pow(2.0 * std::max(1.0, abs_h), a.p);
    if (a.compact) out.radius = a.radius + abs_h;
    return out;
}

double DecayModel::bound_at(const std::vector<double>& r) const {
    if (r.size() != axes.size()) throw DimensionMismatch("decay bound arity mismatch");
    double b = 1.0;
    for (size_t j = 0; j < axes.size(); ++j) b *= axes[j].bound(r[j]);
    return b;
}

double DecayModel::sup_bound() const {
    double b = 1.0;
    for (const auto& a : axes) b *= a.sup;
    return b;
}

DecayModel DecayModel::bounded(int n, double sup) {
    DecayModel m;
    m.axes.assign(static_cast<size_t>(n), axis_bounded(1.0));
    m.axes[0].sup = sup;
    return m;
}

DecayModel decay_product(const DecayModel& a, const DecayModel& b) {
    if (a.n() != b.n()) throw DimensionMismatch("decay product arity mismatch");
    DecayModel out;
    out.axes.reserve(a.axes.size());
    for (size_t j = 0; j < a.axes.size(); ++j) out.axes.push_back(axis_product(a.axes[j], b.axes[j]));
    return out;
}

DecayModel decay_sum(const DecayModel& a, const DecayModel& b) {
    // prod_j (u_j + v_j) dominates prod u_j + prod v_j for nonnegative axes.
    if (a.n() != b.n()) throw DimensionMismatch("decay sum arity mismatch");
    DecayModel out;
    out.axes.reserve(a.axes.size());
    for (size_t j = 0; j < a.axes.size(); ++j) out.axes.push_back(axis_sum(a.axes[j], b.axes[j]));
    return out;
}

DecayModel decay_scale(const DecayModel& a, double mag) {
    DecayModel out = a;
    out.axes[0].sup *= mag;
    out.axes[0].c *= mag;
    return out;
}

DecayModel decay_tensor(const std::vector<DecayModel>& parts) {
    DecayModel out;
    for (const auto& m : parts) out.axes.insert(out.axes.end(), m.axes.begin(), m.axes.end());
    return out;
}

DecayModel decay_dilate_diag(const DecayModel& a, const std::vector<double>& dils, double amp) {
    if (static_cast<int>(dils.size()) != a.n()) throw DimensionMismatch("dilation arity mismatch");
    DecayModel out;
    out.axes.reserve(a.axes.size());
    for (size_t j = 0; j < a.axes.size(); ++j) out.axes.push_back(axis_dilate(a.axes[j], dils[j]));
    return decay_scale(out, amp);
}

DecayModel decay_dilate_general(const DecayModel& a, const std::vector<double>& row_sums, double amp) {
    if (static_cast<int>(row_sums.size()) != a.n()) throw DimensionMismatch("dilation arity mismatch");
    bool all_compact = true;
    double max_radius = 0.0;
    for (const auto& ax : a.axes) {
        all_compact = all_compact && ax.compact;
        max_radius = std::max(max_radius, ax.radius);
    }
    DecayModel out;
    out.axes.reserve(a.axes.size());
    for (size_t j = 0; j < a.axes.size(); ++j) {
        AxisDecay ax = axis_bounded(a.axes[j].sup);
        if (all_compact) {
            // |x_k| > rowsum_k * max_radius forces |M^{-1}x|_inf > max_radius,
            // so the largest inner coordinate leaves its support.
            ax.compact = true;
            ax.radius = row_sums[j] * max_radius;
        }
        out.axes.push_back(ax);
    }
    return decay_scale(out, amp);
}

DecayModel decay_shift(const DecayModel& a, const std::vector<double>& h) {
    if (static_cast<int>(h.size()) != a.n()) throw DimensionMismatch("shift arity mismatch");
    DecayModel out;
    out.axes.reserve(a.axes.size());
    for (size_t j = 0; j < a.axes.size(); ++j) out.axes.push_back(axis_shift(a.axes[j], std::abs(h[j])));
    return out;
}

AxisSeries axis_series(const AxisDecay& env, double R, i64 step) {
    if (step < 1) throw std::invalid_argument("axis_series needs step >= 1");
    AxisSeries s;
    const double st = static_cast<double>(step);
    auto g = [&](double m) { return env.bound(std::max(0.0, m - 1.0)); };

    s.truncated = g(0.0);
    i64 k = 1;
    for (; static_cast<double>(k) * st <= R; ++k) s.truncated += 2.0 * g(static_cast<double>(k) * st);

    if (!env.summable()) {
        s.total = kInf;
        s.finite = false;
        return s;
    }
    double total = s.truncated;
    if (env.compact) {
        for (; static_cast<double>(k) * st <= env.radius + 1.0; ++k)
            total += 2.0 * g(static_cast<double>(k) * st);
        s.total = total;
        s.finite = true;
        return s;
    }
    // Explicit block, then integral comparison on c*(m-1)^(-p).
    const i64 k_stop = k + 256;
    for (; k < k_stop; ++k) total += 2.0 * g(static_cast<double>(k) * st);
    const double m0 = static_cast<double>(k_stop) * st - 1.0; // remainder starts at radii >= m0
    total += 2.0 * env.c * (std::pow(m0, -env.p) + std::pow(m0, 1.0 - env.p) / ((env.p - 1.0) * st));
    s.total = total;
    s.finite = true;
    return s;
}

double lattice_tail(const std::vector<AxisDecay>& envs, double R, const std::vector<i64>& steps) {
    if (envs.size() != steps.size()) throw DimensionMismatch("lattice_tail arity mismatch");
    double prod_total = 1.0;
    double prod_trunc = 1.0;
    for (size_t j = 0; j < envs.size(); ++j) {
        const AxisSeries s = axis_series(envs[j], R, steps[j]);
        if (!s.finite) return kInf;
        prod_total *= s.total;
        prod_trunc *= s.truncated;
    }
    return std::max(0.0, prod_total - prod_trunc);
}

} // namespace pmra
