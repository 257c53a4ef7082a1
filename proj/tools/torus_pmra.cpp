#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmra/config.hpp"
#include "pmra/errors.hpp"
#include "pmra/jsonio.hpp"

using namespace pmra;

namespace {

// Shared flags attached to every subcommand. Precedence: explicit flag,
// then config file (--config or TORUS_PMRA_CONFIG), then the per-command
// defaults passed to resolve().
struct CommonOpts {
    std::string config_path;
    int grid = 0;
    i64 radius = 0;
    int depth = 0;
    double tol = 0.0;
    i64 level_cap = 0;
    std::uint64_t seed = 0;
    std::string out;

    CLI::Option* o_config = nullptr;
    CLI::Option* o_grid = nullptr;
    CLI::Option* o_radius = nullptr;
    CLI::Option* o_depth = nullptr;
    CLI::Option* o_tol = nullptr;
    CLI::Option* o_cap = nullptr;
    CLI::Option* o_seed = nullptr;
    CLI::Option* o_out = nullptr;

    void attach(CLI::App* cmd) {
        o_config = cmd->add_option("--config", config_path, "JSON config file")
                       ->envname("TORUS_PMRA_CONFIG");
        o_grid = cmd->add_option("--grid", grid, "grid resolution per axis");
        o_radius = cmd->add_option("--radius", radius, "lattice truncation radius");
        o_depth = cmd->add_option("--depth", depth, "product / frame depth");
        o_tol = cmd->add_option("--tol", tol, "pass tolerance");
        o_cap = cmd->add_option("--level-cap", level_cap, "coset table size cap");
        o_seed = cmd->add_option("--seed", seed, "RNG seed for generated test sections");
        o_out = cmd->add_option("--out", out, "output path (default stdout)");
    }

    RunConfig resolve(RunConfig defaults = RunConfig{}) const {
        RunConfig cfg = defaults;
        if (o_config->count() > 0 || !config_path.empty()) cfg = load_config(config_path, cfg);
        if (o_grid->count()) cfg.grid = grid;
        if (o_radius->count()) cfg.radius = radius;
        if (o_depth->count()) cfg.depth = depth;
        if (o_tol->count()) cfg.tol = tol;
        if (o_cap->count()) cfg.level_cap = level_cap;
        if (o_seed->count()) cfg.seed = seed;
        if (o_out->count()) cfg.out_path = out;
        cfg.validate();
        return cfg;
    }
};

IMat parse_matrix(const std::string& text) { return matrix_from_json(Json::parse(text)); }

DilationSpec parse_spec(const std::string& matrix_text, const std::string& conj_text) {
    std::optional<IMat> conj;
    if (!conj_text.empty()) conj = parse_matrix(conj_text);
    return validate_dilation(parse_matrix(matrix_text), conj);
}

void emit(const Json& j, const RunConfig& cfg) { write_output(canonical_json(j), cfg.out_path); }

// Random 1-periodic polynomial with frequencies in [-2,2]^n, used for the
// module-combination test sections.
TrigPoly random_poly(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> cdist(-1.0, 1.0);
    TrigPoly p(n, 1);
    IVec freq(static_cast<size_t>(n), 0);
    const int terms = 3;
    for (int t = 0; t < terms; ++t) {
        for (auto& f : freq) f = static_cast<i64>(rng() % 5) - 2;
        p.add_term(freq, {cdist(rng), cdist(rng)});
    }
    if (p.coeffs.empty()) p.add_term(IVec(static_cast<size_t>(n), 0), {1.0, 0.0});
    return p;
}

int cmd_cosets(const std::string& matrix_text, const std::string& conj_text, int level,
               const std::string& format, const CommonOpts& common) {
    const RunConfig cfg = common.resolve();
    const DilationSpec spec = parse_spec(matrix_text, conj_text);
    const CosetTable tab = coset_table(spec, level, cfg.level_cap);
    if (format == "csv")
        write_output(coset_table_to_csv(tab), cfg.out_path);
    else
        emit(coset_table_to_json(tab), cfg);
    return 0;
}

ModuleDescriptor parse_descriptor(int n, i64 q, const std::string& twists_text,
                                  const std::string& conj_text) {
    ModuleDescriptor m;
    m.q = q;
    if (!twists_text.empty()) m.twists = ivec_from_json(Json::parse(twists_text));
    m.n = n > 0 ? n : static_cast<int>(m.twists.size()) + 1;
    if (!conj_text.empty()) m.conjugator = parse_matrix(conj_text);
    return m;
}

Json descriptor_to_json(const ModuleDescriptor& m) {
    Json j;
    j["n"] = m.n;
    j["q"] = m.q;
    j["twists"] = ivec_to_json(m.twists);
    if (m.conjugator)
        j["conjugator"] = matrix_to_json(*m.conjugator);
    else
        j["conjugator"] = nullptr;
    return j;
}

int cmd_k0_class(i64 q, const std::string& twists_text, const std::string& conj_text,
                 const CommonOpts& common) {
    const RunConfig cfg = common.resolve();
    const ModuleDescriptor m = parse_descriptor(0, q, twists_text, conj_text);
    Json j;
    j["schema"] = 1;
    j["descriptor"] = descriptor_to_json(m);
    j["class"] = kclass_to_json(class_of_module(m));
    emit(j, cfg);
    return 0;
}

int cmd_k0_dilate(const std::string& matrix_text, const std::string& conj_text, i64 q,
                  const std::string& twists_text, int level, const CommonOpts& common) {
    const RunConfig cfg = common.resolve();
    const DilationSpec spec = parse_spec(matrix_text, conj_text);
    const ModuleDescriptor m = parse_descriptor(spec.n, q, twists_text, "");
    const ModuleDescriptor image = pmra_level_class(spec, m, level);
    const WaveletClass w = wavelet_class(spec, m, level - 1 >= 0 ? level - 1 : 0);

    Json j;
    j["schema"] = 1;
    j["spec"] = spec_to_json(spec);
    j["level"] = level;
    j["input"] = descriptor_to_json(m);
    j["result"] = descriptor_to_json(image);
    j["result_class"] = kclass_to_json(class_of_module(image));
    j["wavelet_class"] = kclass_to_json(w.diff);
    j["cancellation_valid"] = w.cancellation_valid;
    emit(j, cfg);
    return 0;
}

int cmd_k0_levels(const std::string& matrix_text, const std::string& conj_text, i64 q,
                  const std::string& twists_text, int level, const CommonOpts& common) {
    const RunConfig cfg = common.resolve();
    const DilationSpec spec = parse_spec(matrix_text, conj_text);
    const ModuleDescriptor m = parse_descriptor(spec.n, q, twists_text, "");
    Json j;
    j["schema"] = 1;
    j["spec"] = spec_to_json(spec);
    j["levels"] = Json::array();
    for (int i = 0; i <= level; ++i) {
        const ModuleDescriptor mi = pmra_level_class(spec, m, i);
        Json row;
        row["level"] = i;
        row["descriptor"] = descriptor_to_json(mi);
        row["class"] = kclass_to_json(class_of_module(mi));
        if (i < level) {
            const WaveletClass w = wavelet_class(spec, m, i);
            row["wavelet_class"] = kclass_to_json(w.diff);
            row["cancellation_valid"] = w.cancellation_valid;
        }
        j["levels"].push_back(std::move(row));
    }
    emit(j, cfg);
    return 0;
}

int cmd_k0_sl3(i64 q, i64 c1, i64 c2, i64 c3, const CommonOpts& common) {
    const RunConfig cfg = common.resolve();
    if (c1 == 0 && c2 == 0 && c3 == 0)
        throw std::invalid_argument("sl3-embed needs a nonzero coefficient triple");
    const i64 a = gcd_i(gcd_i(c1, c2), c3);
    const UnimodularCompletion comp = sl3_with_cofactors(c1 / a, c2 / a, c3 / a);

    ModuleDescriptor m;
    m.n = 3;
    m.q = q;
    m.twists = {0, a};
    m.conjugator = comp.b;
    const KClass cls = class_of_module(m);

    // round-trip: the embedded class must read back the requested triple
    ExtElement want = ExtElement::scalar(3, q);
    want = add(want, ExtElement::monomial(3, {1, 2}, c1));
    want = add(want, ExtElement::monomial(3, {1, 3}, c2));
    want = add(want, ExtElement::monomial(3, {2, 3}, c3));
    const bool verified = cls.elem == want;

    Json j;
    j["schema"] = 1;
    j["q"] = q;
    j["target"] = Json::array({c1, c2, c3});
    j["twist"] = a;
    j["completion"] = completion_to_json(comp);
    j["descriptor"] = descriptor_to_json(m);
    j["class"] = kclass_to_json(cls);
    j["verified"] = verified;
    emit(j, cfg);
    return verified ? 0 : 1;
}

int cmd_verify_filters(i64 d, const CommonOpts& common) {
    const RunConfig cfg = common.resolve();
    const FilterBank fb = haar_filter_bank(d);
    const FilterVerifyReport rep = verify_filter_bank(fb, cfg.grid_for(1), cfg.tol);
    Json j = filter_report_to_json(rep);
    j["bank"] = filter_bank_to_json(fb);
    emit(j, cfg);
    return rep.pass ? 0 : 1;
}

int cmd_verify_phi(i64 d, const CommonOpts& common) {
    RunConfig defaults;
    defaults.tol = 1e-6;
    defaults.grid = 1024;
    const RunConfig cfg = common.resolve(defaults);
    const DilationSpec spec = validate_dilation(IMat::diagonal({d}));
    const FilterBank fb = haar_filter_bank(d);
    const Section trunc = section_truncated_product(spec, fb.m[0], cfg.depth);
    const Section closed = section_haar(d);

    const int pts = cfg.grid_for(1);
    std::vector<double> xs(static_cast<size_t>(pts) + 1);
    for (int k = 0; k <= pts; ++k) xs[static_cast<size_t>(k)] = -8.0 + 16.0 * k / pts;
    const auto a = eval_points(trunc, xs, 1);
    const auto b = eval_points(closed, xs, 1);
    double max_dev = 0.0;
    for (size_t i = 0; i < a.size(); ++i) max_dev = std::max(max_dev, std::abs(a[i] - b[i]));
    const bool pass = max_dev < cfg.tol;

    Json j;
    j["schema"] = 1;
    j["d"] = d;
    j["depth"] = cfg.depth;
    j["points"] = pts + 1;
    j["interval"] = Json::array({-8.0, 8.0});
    j["max_dev"] = max_dev;
    j["tol"] = cfg.tol;
    j["pass"] = pass;
    emit(j, cfg);
    return pass ? 0 : 1;
}

Section builtin_section(const std::string& name, i64 d) {
    if (name == "haar") return section_haar(d);
    if (name == "meyer") return section_meyer_scaling(d);
    if (name == "constant") {
        TrigPoly one(1, 1);
        one.add_term({0}, {1.0, 0.0});
        return section_trig(one);
    }
    throw std::invalid_argument("unknown builtin section: " + name);
}

int cmd_verify_xi(const std::string& builtin, const std::string& section_path, i64 d,
                  const CommonOpts& common) {
    RunConfig defaults;
    defaults.tol = 1e-3;
    defaults.radius = 512;
    const RunConfig cfg = common.resolve(defaults);
    Section s = [&] {
        if (!section_path.empty()) {
            std::ifstream f(section_path);
            if (!f) throw std::runtime_error("cannot open section file: " + section_path);
            Json j;
            f >> j;
            return section_from_json(j);
        }
        return builtin_section(builtin, d);
    }();
    TorusGrid grid(s.n, cfg.grid_for(s.n));
    const XiReport rep = xi_membership(s, grid, cfg.radius, cfg.tol);
    Json j = xi_report_to_json(rep);
    j["section"] = section_to_json(s);
    emit(j, cfg);
    return rep.pass ? 0 : 1;
}

struct RefinementPair {
    Section gamma;
    Section mask;
    DilationSpec spec;
};

RefinementPair builtin_refinement(const std::string& name, i64 d) {
    if (name == "haar-1d") {
        const FilterBank fb = haar_filter_bank(d);
        return {section_haar(d), section_trig(fb.m[0]), validate_dilation(IMat::diagonal({d}))};
    }
    if (name == "meyer-1d")
        return {section_meyer_scaling(d), section_meyer_mask(d),
                validate_dilation(IMat::diagonal({d}))};
    if (name == "haar-2d") {
        const FilterBank fb = haar_filter_bank(d);
        return {section_tensor({section_haar(d), section_haar(d)}),
                section_trig(tensor_filter({fb, fb})), validate_dilation(IMat::diagonal({d, d}))};
    }
    if (name == "meyer-2d")
        return {section_tensor({section_meyer_scaling(d), section_meyer_scaling(d)}),
                section_tensor({section_meyer_mask(d), section_meyer_mask(d)}),
                validate_dilation(IMat::diagonal({d, d}))};
    throw std::invalid_argument("unknown builtin refinement pair: " + name);
}

int cmd_verify_refine(const std::string& builtin, i64 d, const CommonOpts& common) {
    const RunConfig cfg = common.resolve();
    const RefinementPair pair = builtin_refinement(builtin, d);
    TorusGrid grid(pair.spec.n, cfg.grid_for(pair.spec.n));
    const RefineReport rep = check_refinement(pair.gamma, pair.mask, pair.spec, grid, cfg.tol);
    const UnitNormReport un = check_unit_lattice_norm(pair.gamma, 1, grid, cfg.radius, cfg.tol);
    Json j;
    j["schema"] = 1;
    j["pair"] = builtin;
    j["d"] = d;
    j["refinement"] = refine_report_to_json(rep);
    j["unit_norm"] = unit_norm_report_to_json(un);
    const bool pass = rep.pass && un.pass;
    j["pass"] = pass;
    emit(j, cfg);
    return pass ? 0 : 1;
}

// Corpus of wavelet-level test sections per the frame design: the generators
// themselves, their D-images, and random module combinations, all pushed to
// the requested level so they live in the right subspace.
std::vector<Section> level_corpus(const FrameSet& fs, int level, std::mt19937_64& rng) {
    std::vector<Section> out;
    for (const auto& psi : fs.wavelets) out.push_back(dilate(fs.spec, psi, level));
    Section combo = section_product(fs.wavelets[0], section_trig(random_poly(fs.spec.n, rng)));
    for (size_t k = 1; k < fs.wavelets.size(); ++k)
        combo = section_sum(
            combo, section_product(fs.wavelets[k], section_trig(random_poly(fs.spec.n, rng))));
    out.push_back(dilate(fs.spec, combo, level));
    return out;
}

int cmd_verify_frame(const std::string& matrix_text, const std::string& conj_text,
                     const CommonOpts& common) {
    RunConfig defaults;
    defaults.depth = 2;
    const RunConfig cfg = common.resolve(defaults);
    const DilationSpec spec =
        matrix_text.empty() ? validate_dilation(IMat::diagonal({2})) : parse_spec(matrix_text, conj_text);
    const auto [phis, psis] = default_generators(spec);
    const FrameSet fs = generate_frame(spec, phis, psis, cfg.depth, cfg.level_cap);
    TorusGrid grid(spec.n, cfg.grid_for(spec.n));
    std::mt19937_64 rng(cfg.seed);

    bool pass = true;
    Json j;
    j["schema"] = 1;
    j["spec"] = spec_to_json(spec);
    j["depth"] = cfg.depth;
    j["element_count"] = fs.elements.size();
    j["expected_count"] = fs.expected_count();
    pass = pass && fs.elements.size() == fs.expected_count();
    j["levels"] = Json::array();
    for (int level = 0; level <= cfg.depth; ++level) {
        Json row;
        row["level"] = level;
        const size_t count = fs.level_elements(level).size();
        const size_t expected = psis.size() * static_cast<size_t>(pow_i(spec.absdet, level));
        row["count"] = count;
        row["expected_count"] = expected;
        pass = pass && count == expected;
        row["reconstruction"] = Json::array();
        for (const auto& zeta : level_corpus(fs, level, rng)) {
            const auto rep = verify_reconstruction(fs, zeta, level, grid, cfg.radius, cfg.tol);
            row["reconstruction"].push_back(reconstruction_report_to_json(rep));
            pass = pass && rep.pass;
        }
        j["levels"].push_back(std::move(row));
    }
    j["pass"] = pass;
    emit(j, cfg);
    return pass ? 0 : 1;
}

int cmd_verify_gram(const std::string& matrix_text, const std::string& conj_text,
                    const CommonOpts& common) {
    RunConfig defaults;
    defaults.depth = 2;
    const RunConfig cfg = common.resolve(defaults);
    const DilationSpec spec =
        matrix_text.empty() ? validate_dilation(IMat::diagonal({2})) : parse_spec(matrix_text, conj_text);
    const auto [phis, psis] = default_generators(spec);
    const FrameSet fs = generate_frame(spec, phis, psis, cfg.depth, cfg.level_cap);
    TorusGrid grid(spec.n, cfg.grid_for(spec.n));

    bool pass = true;
    Json j;
    j["schema"] = 1;
    j["spec"] = spec_to_json(spec);
    j["depth"] = cfg.depth;
    j["tol"] = cfg.tol;
    j["levels"] = Json::array();
    for (int level = 0; level <= cfg.depth; ++level) {
        const GramLevelReport rep = gram_report(fs, level, grid, cfg.radius);
        Json row = gram_report_to_json(rep);
        row["certified"] = rep.certified(cfg.tol);
        pass = pass && rep.certified(cfg.tol);
        j["levels"].push_back(std::move(row));
    }
    j["pass"] = pass;
    emit(j, cfg);
    return pass ? 0 : 1;
}

Json error_json(const std::string& kind, const std::string& what) {
    Json j;
    j["schema"] = 1;
    j["error"] = kind;
    j["message"] = what;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective multiresolution toolkit for integer dilations on the torus"};
    app.require_subcommand(1);

    // cosets
    auto* cosets = app.add_subcommand("cosets", "Enumerate coset representatives of Z^n / A^i Z^n");
    std::string co_matrix, co_conj, co_format = "json";
    int co_level = 1;
    cosets->add_option("--matrix", co_matrix, "dilation matrix as JSON rows")->required();
    cosets->add_option("--conjugator", co_conj, "unimodular S with S A S^-1 diagonal");
    cosets->add_option("--level", co_level, "table level i >= 0");
    cosets->add_option("--format", co_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    CommonOpts co_common;
    co_common.attach(cosets);

    // k0 family
    auto* k0 = app.add_subcommand("k0", "K0 classes of twisted modules");
    k0->require_subcommand(1);

    auto* k0class = k0->add_subcommand("class", "Chern class of a twisted module");
    i64 kc_q = 1;
    std::string kc_twists, kc_conj;
    k0class->add_option("--q", kc_q, "module rank q >= 1");
    k0class->add_option("--twists", kc_twists, "twist vector as JSON, length n-1")->required();
    k0class->add_option("--conjugator", kc_conj, "unimodular precomposition B");
    CommonOpts kc_common;
    kc_common.attach(k0class);

    auto* k0dil = k0->add_subcommand("dilate", "Pushforward descriptor under the dilation");
    std::string kd_matrix, kd_conj, kd_twists;
    i64 kd_q = 1;
    int kd_level = 1;
    k0dil->add_option("--matrix", kd_matrix, "dilation matrix as JSON rows")->required();
    k0dil->add_option("--conjugator", kd_conj, "unimodular S for non-diagonal input");
    k0dil->add_option("--q", kd_q, "module rank q >= 1");
    k0dil->add_option("--twists", kd_twists, "twist vector as JSON, length n-1");
    k0dil->add_option("--level", kd_level, "iterations of the dilation");
    CommonOpts kd_common;
    kd_common.attach(k0dil);

    auto* k0lvl = k0->add_subcommand("levels", "Descriptors and classes for levels 0..i");
    std::string kl_matrix, kl_conj, kl_twists;
    i64 kl_q = 1;
    int kl_level = 3;
    k0lvl->add_option("--matrix", kl_matrix, "dilation matrix as JSON rows")->required();
    k0lvl->add_option("--conjugator", kl_conj, "unimodular S for non-diagonal input");
    k0lvl->add_option("--q", kl_q, "module rank q >= 1");
    k0lvl->add_option("--twists", kl_twists, "twist vector as JSON, length n-1");
    k0lvl->add_option("--level", kl_level, "highest level");
    CommonOpts kl_common;
    kl_common.attach(k0lvl);

    auto* k0sl3 = k0->add_subcommand("sl3-embed",
                                     "Realize class q + c1 e12 + c2 e13 + c3 e23 on the 3-torus");
    i64 s_q = 1, s_c1 = 0, s_c2 = 0, s_c3 = 0;
    k0sl3->add_option("q", s_q, "module rank")->required();
    k0sl3->add_option("c1", s_c1, "e1^e2 coefficient")->required();
    k0sl3->add_option("c2", s_c2, "e1^e3 coefficient")->required();
    k0sl3->add_option("c3", s_c3, "e2^e3 coefficient")->required();
    CommonOpts ks_common;
    ks_common.attach(k0sl3);

    // verify family
    auto* verify = app.add_subcommand("verify", "Numerical identity checks with reports");
    verify->require_subcommand(1);

    auto* vfil = verify->add_subcommand("filters", "Filter-bank unitarity and normalization");
    i64 vf_d = 2;
    vfil->add_option("--d", vf_d, "dilation factor, |d| > 1");
    CommonOpts vf_common;
    vf_common.attach(vfil);

    auto* vphi = verify->add_subcommand("phi", "Truncated product vs closed-form scaling function");
    i64 vp_d = 2;
    vphi->add_option("--d", vp_d, "dilation factor d >= 2");
    CommonOpts vp_common;
    vp_common.attach(vphi);

    auto* vxi = verify->add_subcommand("xi", "Module membership surrogate for a section");
    std::string vx_builtin = "haar", vx_section;
    i64 vx_d = 2;
    vxi->add_option("--builtin", vx_builtin, "haar, meyer, or constant");
    vxi->add_option("--section", vx_section, "path to a section JSON file");
    vxi->add_option("--d", vx_d, "factor for the builtin section");
    CommonOpts vx_common;
    vx_common.attach(vxi);

    auto* vref = verify->add_subcommand("refine", "Two-scale and unit-norm checks for a pair");
    std::string vr_builtin = "haar-1d";
    i64 vr_d = 2;
    vref->add_option("--builtin", vr_builtin, "haar-1d, meyer-1d, haar-2d, or meyer-2d");
    vref->add_option("--d", vr_d, "dilation factor");
    CommonOpts vr_common;
    vr_common.attach(vref);

    auto* vfr = verify->add_subcommand("frame", "Frame reconstruction identity per wavelet level");
    std::string vfr_matrix, vfr_conj;
    vfr->add_option("--matrix", vfr_matrix, "dilation matrix (default [[2]])");
    vfr->add_option("--conjugator", vfr_conj, "unimodular S for non-diagonal input");
    CommonOpts vfr_common;
    vfr_common.attach(vfr);

    auto* vgr = verify->add_subcommand("gram", "Gram delta-identities per wavelet level");
    std::string vg_matrix, vg_conj;
    vgr->add_option("--matrix", vg_matrix, "dilation matrix (default [[2]])");
    vgr->add_option("--conjugator", vg_conj, "unimodular S for non-diagonal input");
    CommonOpts vg_common;
    vg_common.attach(vgr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cosets->parsed()) return cmd_cosets(co_matrix, co_conj, co_level, co_format, co_common);
        if (k0class->parsed()) return cmd_k0_class(kc_q, kc_twists, kc_conj, kc_common);
        if (k0dil->parsed())
            return cmd_k0_dilate(kd_matrix, kd_conj, kd_q, kd_twists, kd_level, kd_common);
        if (k0lvl->parsed())
            return cmd_k0_levels(kl_matrix, kl_conj, kl_q, kl_twists, kl_level, kl_common);
        if (k0sl3->parsed()) return cmd_k0_sl3(s_q, s_c1, s_c2, s_c3, ks_common);
        if (vfil->parsed()) return cmd_verify_filters(vf_d, vf_common);
        if (vphi->parsed()) return cmd_verify_phi(vp_d, vp_common);
        if (vxi->parsed()) return cmd_verify_xi(vx_builtin, vx_section, vx_d, vx_common);
        if (vref->parsed()) return cmd_verify_refine(vr_builtin, vr_d, vr_common);
        if (vfr->parsed()) return cmd_verify_frame(vfr_matrix, vfr_conj, vfr_common);
        if (vgr->parsed()) return cmd_verify_gram(vg_matrix, vg_conj, vg_common);
    } catch (const Error& e) {
        std::fputs(canonical_json(error_json("domain", e.what())).c_str(), stderr);
        return 2;
    } catch (const Json::parse_error& e) {
        std::fputs(canonical_json(error_json("parse", e.what())).c_str(), stderr);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fputs(canonical_json(error_json("validation", e.what())).c_str(), stderr);
        return 2;
    } catch (const std::exception& e) {
        std::fputs(canonical_json(error_json("internal", e.what())).c_str(), stderr);
        return 2;
    }
    return 2;
}
