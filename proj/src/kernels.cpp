#include "pmra/kernels.hpp"

namespace pmra {

namespace {

// Offsets per axis for the truncated lattice box, symmetric around 0,
// ascending. Fixed order keeps the summation deterministic.
std::vector<std::vector<double>> box_offsets(int n, const std::vector<i64>& radii,
                                             const std::vector<i64>& steps) {
    if (static_cast<int>(radii.size()) != n || static_cast<int>(steps.size()) != n)
        throw DimensionMismatch("lattice box arity mismatch");
    std::vector<std::vector<double>> offs(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const i64 step = steps[static_cast<size_t>(j)];
        if (step < 1) throw std::invalid_argument("lattice step must be >= 1");
        const i64 k_max = radii[static_cast<size_t>(j)] / step;
        auto& o = offs[static_cast<size_t>(j)];
        o.reserve(static_cast<size_t>(2 * k_max + 1));
        for (i64 k = -k_max; k <= k_max; ++k) o.push_back(static_cast<double>(k * step));
    }
    return offs;
}

} // namespace

std::vector<cplx> eval_grid(const Section& s, const TorusGrid& grid, Exec exec) {
    if (s.n != grid.n) throw DimensionMismatch("grid arity mismatch");
    const size_t total = grid.size();
    std::vector<cplx> out(total);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
        const std::vector<double> x = grid.point(static_cast<size_t>(idx));
        out[static_cast<size_t>(idx)] = eval(s, x.data());
    }
    return out;
}

std::vector<cplx> eval_points(const Section& s, const std::vector<double>& pts, int n, Exec exec) {
    if (s.n != n) throw DimensionMismatch("point arity mismatch");
    if (pts.size() % static_cast<size_t>(n) != 0)
        throw std::invalid_argument("point buffer not a multiple of the arity");
    const size_t total = pts.size() / static_cast<size_t>(n);
    std::vector<cplx> out(total);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx)
        out[static_cast<size_t>(idx)] = eval(s, pts.data() + static_cast<size_t>(idx) * static_cast<size_t>(n));
    return out;
}

std::vector<cplx> lattice_pair_sum(const Section& f, const Section& g, const TorusGrid& grid,
                                   const std::vector<i64>& radii, const std::vector<i64>& steps,
                                   Exec exec) {
    if (f.n != grid.n || g.n != grid.n) throw DimensionMismatch("lattice sum arity mismatch");
    const int n = grid.n;
    const auto offs = box_offsets(n, radii, steps);
    size_t box = 1;
    for (const auto& o : offs) box *= o.size();

    const size_t total = grid.size();
    std::vector<cplx> out(total);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
        const std::vector<double> t = grid.point(static_cast<size_t>(idx));
        std::vector<double> y(static_cast<size_t>(n));
        cplx acc{0.0, 0.0};
        for (size_t flat = 0; flat < box; ++flat) {
            size_t rem = flat;
            for (int j = 0; j < n; ++j) {
                const auto& o = offs[static_cast<size_t>(j)];
                y[static_cast<size_t>(j)] = t[static_cast<size_t>(j)] - o[rem % o.size()];
                rem /= o.size();
            }
            acc += std::conj(eval(f, y.data())) * eval(g, y.data());
        }
        out[static_cast<size_t>(idx)] = acc;
    }
    return out;
}

} // namespace pmra
