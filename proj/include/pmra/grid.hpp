#pragma once

#include <vector>

#include "pmra/intmat.hpp"

namespace pmra {

/// Uniform sample points (k_1/N, ..., k_n/N) over [0,1)^n, first coordinate
/// fastest. Axis scales stretch individual axes (used to cover [0,q) in the
/// last variable).
struct TorusGrid {
    int n = 1;
    int resolution = 2;
    std::vector<double> axis_scale; // empty means all 1

    TorusGrid() = default;
    TorusGrid(int n_, int resolution_) : n(n_), resolution(resolution_) {
        if (n_ < 1 || resolution_ < 2) throw std::invalid_argument("TorusGrid needs n >= 1, N >= 2");
    }

    size_t size() const;
    std::vector<double> point(size_t index) const;
};

} // namespace pmra
