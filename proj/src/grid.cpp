#include "pmra/grid.hpp"

namespace pmra {

size_t TorusGrid::size() const {
    size_t s = 1;
    for (int j = 0; j < n; ++j) {
        const size_t next = s * static_cast<size_t>(resolution);
        if (next / static_cast<size_t>(resolution) != s) throw OverflowError("grid too large");
        s = next;
    }
    return s;
}

std::vector<double> TorusGrid::point(size_t index) const {
    std::vector<double> x(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const size_t k = index % static_cast<size_t>(resolution);
        index /= static_cast<size_t>(resolution);
        double v = static_cast<double>(k) / static_cast<double>(resolution);
        if (!axis_scale.empty()) v *= axis_scale[static_cast<size_t>(j)];
        x[static_cast<size_t>(j)] = v;
    }
    return x;
}

} // namespace pmra
