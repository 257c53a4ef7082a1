#include "pmra/config.hpp"

#include <fstream>

#include <json.hpp>

namespace pmra {

int RunConfig::grid_for(int n) const {
    if (grid > 0) return grid;
    if (n <= 1) return 256;
    if (n == 2) return 64;
    return 16;
}

void RunConfig::validate() const {
    if (grid < 0 || radius < 1 || depth < 1 || !(tol > 0.0) || level_cap < 1)
        throw std::invalid_argument("config values must be positive");
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    f >> j;

    RunConfig cfg = base;
    for (const auto& [key, val] : j.items()) {
        if (key == "grid")
            cfg.grid = val.get<int>();
        else if (key == "radius")
            cfg.radius = val.get<i64>();
        else if (key == "depth")
            cfg.depth = val.get<int>();
        else if (key == "tol")
            cfg.tol = val.get<double>();
        else if (key == "level_cap")
            cfg.level_cap = val.get<i64>();
        else if (key == "seed")
            cfg.seed = val.get<std::uint64_t>();
        else if (key == "out")
            cfg.out_path = val.get<std::string>();
        else
            throw std::invalid_argument("unknown config key: " + key);
    }
    cfg.validate();
    return cfg;
}

} // namespace pmra
