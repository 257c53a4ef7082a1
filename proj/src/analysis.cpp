#include "pmra/analysis.hpp"

#include <cmath>

namespace pmra {

std::vector<AxisDecay> pair_envelopes(const Section& s1, const Section& s2) {
    if (s1.n != s2.n) throw DimensionMismatch("pair arity mismatch");
    std::vector<AxisDecay> envs;
    envs.reserve(s1.decay.axes.size());
    for (size_t j = 0; j < s1.decay.axes.size(); ++j)
        envs.push_back(axis_product(s1.decay.axes[j], s2.decay.axes[j]));
    return envs;
}

std::vector<i64> clipped_radii(const std::vector<AxisDecay>& envs, i64 R) {
    std::vector<i64> radii(envs.size(), R);
    for (size_t j = 0; j < envs.size(); ++j)
        if (envs[j].compact) {
            // base points lie in [0,1) per axis, so |t - p| >= |p| - 1
            const i64 rc = static_cast<i64>(std::ceil(envs[j].radius)) + 1;
            radii[j] = std::min(R, rc);
        }
    return radii;
}

LatticeSumResult rigged_inner_product(const Section& s1, const Section& s2, const TorusGrid& grid,
                                      i64 R, Exec exec) {
    if (s1.n != grid.n) throw DimensionMismatch("grid arity mismatch");
    if (R < 1) throw std::invalid_argument("truncation radius must be >= 1");
    const auto envs = pair_envelopes(s1, s2);
    for (const auto& e : envs)
        if (!e.summable()) throw NonSummableDecay();

    LatticeSumResult res;
    res.grid = grid;
    res.radius = R;
    res.tail_bound = lattice_tail(envs, static_cast<double>(R), std::vector<i64>(envs.size(), 1));
    res.values = lattice_pair_sum(s1, s2, grid, clipped_radii(envs, R),
                                  std::vector<i64>(envs.size(), 1), exec);
    return res;
}

XiReport xi_membership(const Section& s, const TorusGrid& grid, i64 R, double tol, Exec exec) {
    if (s.n != grid.n) throw DimensionMismatch("grid arity mismatch");
    XiReport rep;
    rep.tol = tol;
    rep.radius = R;

    const auto envs = pair_envelopes(s, s);
    bool summable = true;
    for (const auto& e : envs) summable = summable && e.summable();
    rep.tail_bound = summable
                         ? lattice_tail(envs, static_cast<double>(R), std::vector<i64>(envs.size(), 1))
                         : std::numeric_limits<double>::infinity();

    const auto values = lattice_pair_sum(s, s, grid, clipped_radii(envs, R),
                                         std::vector<i64>(envs.size(), 1), exec);
    double sup = 0.0;
    for (const auto& v : values) sup = std::max(sup, std::abs(v));
    rep.sup = sup;
    rep.pass = rep.tail_bound < tol;
    return rep;
}

std::vector<cplx> module_inner_product(const Section& h1, const Section& h2, i64 q,
                                       const TorusGrid& grid, Exec exec) {
    if (h1.n != grid.n || h2.n != grid.n) throw DimensionMismatch("grid arity mismatch");
    if (q < 1) throw std::invalid_argument("module rank q must be >= 1");
    if (!h1.quasi || !h2.quasi || !(*h1.quasi == *h2.quasi) || h1.quasi->q != q)
        throw QuasiPeriodMismatch();

    const size_t total = grid.size();
    std::vector<cplx> out(total);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
        std::vector<double> x = grid.point(static_cast<size_t>(idx));
        const double t = x[static_cast<size_t>(grid.n - 1)];
        cplx acc{0.0, 0.0};
        for (i64 k = 0; k < q; ++k) {
            x[static_cast<size_t>(grid.n - 1)] = t - static_cast<double>(k);
            acc += std::conj(eval(h1, x.data())) * eval(h2, x.data());
        }
        out[static_cast<size_t>(idx)] = acc;
    }
    return out;
}

RefineReport check_refinement(const Section& gamma, const Section& mask, const DilationSpec& spec,
                              const TorusGrid& grid, double tol, double box, Exec exec) {
    if (gamma.n != spec.n || mask.n != spec.n || grid.n != spec.n)
        throw DimensionMismatch("refinement arity mismatch");
    const int n = spec.n;
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(spec.absdet));
    const size_t total = grid.size();
    std::vector<double> devs(total, 0.0);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
        const std::vector<double> t = grid.point(static_cast<size_t>(idx));
        std::vector<double> x(static_cast<size_t>(n)), ax(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) x[static_cast<size_t>(j)] = (t[static_cast<size_t>(j)] - 0.5) * box;
        for (int r = 0; r < n; ++r) {
            double acc = 0.0;
            for (int c = 0; c < n; ++c)
                acc += static_cast<double>(spec.entries(r, c)) * x[static_cast<size_t>(c)];
            ax[static_cast<size_t>(r)] = acc;
        }
        const cplx lhs = eval(gamma, ax.data());
        const cplx rhs = eval(mask, x.data()) * eval(gamma, x.data()) * inv_sqrt_d;
        devs[static_cast<size_t>(idx)] = std::abs(lhs - rhs);
    }
    RefineReport rep;
    rep.tol = tol;
    rep.box = box;
    for (double d : devs) rep.max_dev = std::max(rep.max_dev, d);
    rep.pass = rep.max_dev <= tol;
    return rep;
}

UnitNormReport check_unit_lattice_norm(const Section& gamma, i64 q, const TorusGrid& grid, i64 R,
                                       double tol, Exec exec) {
    if (gamma.n != grid.n) throw DimensionMismatch("grid arity mismatch");
    if (q < 1) throw std::invalid_argument("lattice step q must be >= 1");
    auto envs = pair_envelopes(gamma, gamma);
    // base points reach q - 1 past [0,1) in the last axis
    envs.back() = axis_shift(envs.back(), static_cast<double>(q - 1));
    for (const auto& e : envs)
        if (!e.summable()) throw NonSummableDecay();

    std::vector<i64> steps(envs.size(), 1);
    steps.back() = q;

    TorusGrid g = grid;
    g.axis_scale.assign(static_cast<size_t>(grid.n), 1.0);
    g.axis_scale.back() = static_cast<double>(q);

    UnitNormReport rep;
    rep.tol = tol;
    rep.radius = R;
    rep.tail_bound = lattice_tail(envs, static_cast<double>(R), steps);

    const auto values = lattice_pair_sum(gamma, gamma, g, clipped_radii(envs, R), steps, exec);
    for (const auto& v : values) rep.max_dev = std::max(rep.max_dev, std::abs(v - cplx{1.0, 0.0}));
    rep.pass = rep.max_dev <= tol + rep.tail_bound;
    return rep;
}

} // namespace pmra
