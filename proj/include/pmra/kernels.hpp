#pragma once

#include "pmra/grid.hpp"
#include "pmra/section.hpp"

namespace pmra {

/// Execution policy for grid loops. Both produce identical results bit for
/// bit: parallelism is over grid points only, each point's inner sum runs in
/// a fixed sequential order.
enum class Exec { serial, parallel };

/// Section values at every grid point, in grid order.
std::vector<cplx> eval_grid(const Section& s, const TorusGrid& grid, Exec exec = Exec::parallel);

/// Section values at explicit points (row-major, grid.n coordinates each).
std::vector<cplx> eval_points(const Section& s, const std::vector<double>& pts, int n,
                              Exec exec = Exec::parallel);

/// For each grid point t: sum over the lattice box
///   p in prod_j {m step_j : |m step_j| <= radius_j}
/// of conj(f(t-p)) g(t-p), axis 0 fastest.
std::vector<cplx> lattice_pair_sum(const Section& f, const Section& g, const TorusGrid& grid,
                                   const std::vector<i64>& radii, const std::vector<i64>& steps,
                                   Exec exec = Exec::parallel);

} // namespace pmra
