#pragma once

#include "pmra/kernels.hpp"

namespace pmra {

/// Truncated C(T^n)-valued inner product: samples of
///   sum_{|p|_inf <= R} conj(s1(t-p)) s2(t-p)
/// over the grid, with the analytic bound on everything outside the box.
struct LatticeSumResult {
    TorusGrid grid;
    i64 radius = 0;
    std::vector<cplx> values;
    double tail_bound = 0.0;
};

/// Per-axis envelopes of the pointwise product conj(s1) s2.
std::vector<AxisDecay> pair_envelopes(const Section& s1, const Section& s2);

/// Throws NonSummableDecay when the product envelope is not lattice-summable
/// on some axis. Axes where both sections are compactly supported are summed
/// exactly (the box is clipped to the support, the tail contribution is 0).
LatticeSumResult rigged_inner_product(const Section& s1, const Section& s2, const TorusGrid& grid,
                                      i64 R, Exec exec = Exec::parallel);

struct XiReport {
    double sup = 0.0;        // max over grid of the truncated sum of |s|^2
    double tail_bound = 0.0; // +inf when the envelope is not summable
    double tol = 0.0;
    i64 radius = 0;
    bool pass = false; // tail_bound < tol
};

/// Membership surrogate: the periodization of |s|^2 must converge uniformly;
/// we report the truncated sup and the tail bound. A non-summable envelope
/// fails with an infinite tail instead of throwing.
XiReport xi_membership(const Section& s, const TorusGrid& grid, i64 R, double tol,
                       Exec exec = Exec::parallel);

/// Finite q-term inner product sum_{k=0}^{q-1} conj(h1(s,t-k)) h2(s,t-k) for
/// sections declaring equal quasi-periods (q, a). QuasiPeriodMismatch
/// otherwise.
std::vector<cplx> module_inner_product(const Section& h1, const Section& h2, i64 q,
                                       const TorusGrid& grid, Exec exec = Exec::parallel);

struct RefineReport {
    double max_dev = 0.0;
    double tol = 0.0;
    double box = 0.0; // edge length of the sampled cube centered at 0
    bool pass = false;
};

/// Two-scale relation: max over sampled x of |gamma(Ax) - mask(x) gamma(x)/sqrt d|,
/// sampled on the grid mapped affinely onto [-box/2, box/2)^n.
RefineReport check_refinement(const Section& gamma, const Section& mask, const DilationSpec& spec,
                              const TorusGrid& grid, double tol, double box = 8.0,
                              Exec exec = Exec::parallel);

struct UnitNormReport {
    double max_dev = 0.0;
    double tail_bound = 0.0;
    double tol = 0.0;
    i64 radius = 0;
    bool pass = false; // max_dev <= tol + tail_bound
};

/// Necessary condition sum over Z^{n-1} x qZ of |gamma(s-m_1,...,t-m_n q)|^2 = 1.
/// The grid's last axis is stretched to cover [0,q). Throws NonSummableDecay.
UnitNormReport check_unit_lattice_norm(const Section& gamma, i64 q, const TorusGrid& grid, i64 R,
                                       double tol, Exec exec = Exec::parallel);

/// Box radii for the pair envelopes: R clipped per axis to the support when
/// both sections are compact there.
std::vector<i64> clipped_radii(const std::vector<AxisDecay>& envs, i64 R);

} // namespace pmra
