// Timing comparison of the serial and parallel grid kernels. The two paths
// must agree bit for bit; any mismatch is a hard failure, not a statistic.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "pmra/analysis.hpp"
#include "pmra/filterbank.hpp"

using namespace pmra;

namespace {

double time_once(void (*body)(const void*), const void* arg) {
    const auto start = std::chrono::steady_clock::now();
    body(arg);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Case {
    const char* name;
    Section f;
    Section g;
    TorusGrid grid;
    i64 radius;
};

void run_case(const Case& c) {
    const std::vector<i64> radii(static_cast<size_t>(c.grid.n), c.radius);
    const std::vector<i64> steps(static_cast<size_t>(c.grid.n), 1);

    std::vector<cplx> eval_serial, eval_parallel, pair_serial, pair_parallel;
    double t_eval_s = 0, t_eval_p = 0, t_pair_s = 0, t_pair_p = 0;

    {
        auto start = std::chrono::steady_clock::now();
        eval_serial = eval_grid(c.f, c.grid, Exec::serial);
        t_eval_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    {
        auto start = std::chrono::steady_clock::now();
        eval_parallel = eval_grid(c.f, c.grid, Exec::parallel);
        t_eval_p = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    {
        auto start = std::chrono::steady_clock::now();
        pair_serial = lattice_pair_sum(c.f, c.g, c.grid, radii, steps, Exec::serial);
        t_pair_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    {
        auto start = std::chrono::steady_clock::now();
        pair_parallel = lattice_pair_sum(c.f, c.g, c.grid, radii, steps, Exec::parallel);
        t_pair_p = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    if (eval_serial != eval_parallel) {
        std::printf("FAIL %s: eval_grid serial/parallel results differ\n", c.name);
        std::exit(1);
    }
    if (pair_serial != pair_parallel) {
        std::printf("FAIL %s: lattice_pair_sum serial/parallel results differ\n", c.name);
        std::exit(1);
    }

    std::printf("%-28s eval %9.4f s / %9.4f s (x%.2f)   pair %9.4f s / %9.4f s (x%.2f)\n",
                c.name, t_eval_s, t_eval_p, t_eval_p > 0 ? t_eval_s / t_eval_p : 0.0, t_pair_s,
                t_pair_p, t_pair_p > 0 ? t_pair_s / t_pair_p : 0.0);
}

} // namespace

int main() {
    const FilterBank fb2 = haar_filter_bank(2);
    const DilationSpec s1 = validate_dilation(IMat::diagonal({2}));
    const DilationSpec s2 = validate_dilation(IMat::diagonal({2, 2}));

    std::vector<Case> cases;
    cases.push_back({"haar 1d, grid 4096, R 2048", section_haar(2), section_haar(2),
                     TorusGrid(1, 4096), 2048});
    cases.push_back({"product depth 12, grid 2048",
                     section_truncated_product(s1, fb2.m[0], 12),
                     section_truncated_product(s1, fb2.m[0], 12), TorusGrid(1, 2048), 256});
    cases.push_back({"meyer 2d tensor, grid 96",
                     section_tensor({section_meyer_scaling(2), section_meyer_scaling(2)}),
                     section_tensor({section_meyer_wavelet(), section_meyer_wavelet()}),
                     TorusGrid(2, 96), 32});
    const Section dil = dilate(s2, section_tensor({section_haar(2), section_haar(2)}), 2);
    cases.push_back({"dilated haar 2d, grid 64", dil, dil, TorusGrid(2, 64), 32});

    std::printf("serial / parallel timings (speedup), results checked bitwise equal\n");
    for (const auto& c : cases) run_case(c);
    std::printf("all cases bitwise identical across execution policies\n");
    return 0;
}
