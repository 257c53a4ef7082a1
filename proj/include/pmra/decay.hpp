#pragma once

#include <vector>

#include "pmra/intmat.hpp"

namespace pmra {

/// Envelope for one coordinate direction. The claims, all on r = |x_j|:
///   - |contribution| <= sup everywhere;
///   - if has_power: additionally <= c * r^(-p) for r >= 1;
///   - if compact: the factor vanishes for r > radius.
/// Combinators keep every claim conservative, so tail bounds derived from a
/// model are always valid for the section that carries it.
struct AxisDecay {
    double sup = 1.0;
    bool has_power = false;
    double c = 0.0;
    double p = 0.0;
    bool compact = false;
    double radius = 0.0;

    double bound(double r) const;
    /// True when sum_{m in Z} bound(|m|) converges.
    bool summable() const { return compact || (has_power && p > 1.0); }
};

AxisDecay axis_bounded(double sup);
AxisDecay axis_power(double sup, double c, double p);
AxisDecay axis_compact(double sup, double radius);

AxisDecay axis_product(const AxisDecay& a, const AxisDecay& b);
AxisDecay axis_sum(const AxisDecay& a, const AxisDecay& b);
/// Envelope of x -> f(x / dil) for dil >= 1.
AxisDecay axis_dilate(const AxisDecay& a, double dil);
/// Envelope of x -> f(x - h).
AxisDecay axis_shift(const AxisDecay& a, double abs_h);

/// Separable envelope |f(x)| <= prod_j axes[j].bound(|x_j|). Scalar factors
/// are folded into axis 0. Sections that mix axes (conjugated dilations)
/// degrade to the claims that survive mixing.
struct DecayModel {
    std::vector<AxisDecay> axes;

    int n() const { return static_cast<int>(axes.size()); }
    double bound_at(const std::vector<double>& r) const;
    double sup_bound() const;

    static DecayModel bounded(int n, double sup);
};

DecayModel decay_product(const DecayModel& a, const DecayModel& b);
DecayModel decay_sum(const DecayModel& a, const DecayModel& b);
DecayModel decay_scale(const DecayModel& a, double mag);
DecayModel decay_tensor(const std::vector<DecayModel>& parts);
/// x -> amp * f(x / diag), per-axis dilation factors >= 1.
DecayModel decay_dilate_diag(const DecayModel& a, const std::vector<double>& dils, double amp);
/// x -> amp * f(M^{-1} x) for a general integer M with row abs sums
/// row_sums. Power claims do not survive axis mixing; sup and compactness do.
DecayModel decay_dilate_general(const DecayModel& a, const std::vector<double>& row_sums, double amp);
DecayModel decay_shift(const DecayModel& a, const std::vector<double>& h);

/// One-axis lattice series sum_{m in step Z} env.bound(max(0,|m|-1)), split
/// at the truncation radius: `truncated` covers |m| <= R, `total` everything
/// (+inf when the envelope is not summable). The -1 inside absorbs a base
/// point anywhere in [0,1).
struct AxisSeries {
    double truncated = 0.0;
    double total = 0.0;
    bool finite = false;
};

AxisSeries axis_series(const AxisDecay& env, double R, i64 step = 1);

/// Tail of the box-truncated lattice sum of prod_j env_j over the lattice
/// prod_j (step_j Z), outside |m_j| <= R: prod total_j - prod truncated_j.
/// Returns +inf when any axis diverges.
double lattice_tail(const std::vector<AxisDecay>& envs, double R, const std::vector<i64>& steps);

} // namespace pmra
