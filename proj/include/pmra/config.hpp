#pragma once

#include <cstdint>
#include <string>

#include "pmra/cosets.hpp"

namespace pmra {

/// Run parameters shared by the command-line checks. Precedence: explicit
/// flags, then a config file (--config or TORUS_PMRA_CONFIG), then these
/// defaults. grid = 0 picks the per-dimension default.
struct RunConfig {
    int grid = 0;
    i64 radius = 64;
    int depth = 20; // truncated-product depth J
    double tol = 1e-8;
    i64 level_cap = kDefaultLevelCap;
    std::uint64_t seed = 12345;
    std::string out_path;

    int grid_for(int n) const;
    void validate() const;
};

/// Reads the JSON config file; unknown keys are rejected, missing keys keep
/// the base values.
RunConfig load_config(const std::string& path, RunConfig base = RunConfig{});

} // namespace pmra
