#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "pmra/config.hpp"
#include "pmra/errors.hpp"
#include "pmra/jsonio.hpp"

using namespace pmra;

TEST_SUITE("jsonio") {

TEST_CASE("canonical rendering is stable and ordered") {
    Json j;
    j["schema"] = 1;
    j["zeta"] = 0.1;
    j["alpha"] = 3;
    Json inner;
    inner["b"] = true;
    inner["a"] = nullptr;
    j["nested"] = inner;
    j["list"] = Json::array({1, 2.5, "x"});
    const std::string a = canonical_json(j);
    const std::string b = canonical_json(j);
    CHECK(a == b);
    // insertion order preserved: schema first, zeta before alpha
    CHECK(a.find("\"schema\"") < a.find("\"zeta\""));
    CHECK(a.find("\"zeta\"") < a.find("\"alpha\""));
    CHECK(a.back() == '\n');
    // doubles carry full precision
    CHECK(a.find("0.10000000000000001") != std::string::npos);
    // non-finite doubles render as null
    Json bad;
    bad["v"] = std::numeric_limits<double>::infinity();
    CHECK(canonical_json(bad).find("null") != std::string::npos);
}

TEST_CASE("matrix and vector round-trips") {
    const IMat m = IMat::from_rows({{2, -1}, {0, 4}});
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    const IVec v{3, -7, 0};
    CHECK(ivec_from_json(ivec_to_json(v)) == v);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2],[3]]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("\"nope\"")), std::invalid_argument);
}

TEST_CASE("spec round-trip keeps the conjugator") {
    const auto plain = validate_dilation(IMat::diagonal({2, 3}));
    const auto back = spec_from_json(spec_to_json(plain));
    CHECK(back.entries == plain.entries);
    CHECK_FALSE(back.conjugated);

    const IMat m = IMat::from_rows({{2, 2}, {0, 4}});
    const IMat s = IMat::from_rows({{1, -1}, {0, 1}});
    const auto conj = validate_dilation(m, s);
    const auto back2 = spec_from_json(spec_to_json(conj));
    CHECK(back2.entries == conj.entries);
    CHECK(back2.conjugator == conj.conjugator);
    CHECK(back2.conjugated);
}

TEST_CASE("coset table serialization") {
    const auto spec = validate_dilation(IMat::diagonal({2, 2}));
    const auto tab = coset_table(spec, 2);
    const Json j = coset_table_to_json(tab);
    CHECK(j["schema"] == 1);
    CHECK(j["count"] == 16);
    CHECK(j["level"] == 2);
    CHECK(j["representatives"].size() == 16);
    CHECK(j["representatives"][6] == Json::array({2, 1}));
    const std::string csv = coset_table_to_csv(tab);
    CHECK(csv.rfind("index,v1,v2", 0) == 0);
    CHECK(csv.find("6,2,1") != std::string::npos);
}

TEST_CASE("kclass serialization lists sorted monomials") {
    ModuleDescriptor md;
    md.n = 3;
    md.q = 7;
    md.twists = {0, 2};
    const KClass c = class_of_module(md);
    const Json j = kclass_to_json(c);
    CHECK(j["n"] == 3);
    CHECK(j["rank"] == 7);
    bool found = false;
    for (const auto& t : j["terms"])
        if (t["generators"] == Json::array({2, 3})) {
            CHECK(t["coeff"] == -2);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("completion serialization carries the witnesses") {
    const auto c = sl3_with_cofactors(2, 3, 5);
    const Json j = completion_to_json(c);
    CHECK(j["triple"] == Json::array({2, 3, 5}));
    CHECK(j["witnesses"]["nu"] == 1);
    CHECK(j["witnesses"]["alpha"] == 2);
    CHECK(j["witnesses"]["beta"] == 5);
    CHECK(matrix_from_json(j["matrix"]) == c.b);
}

TEST_CASE("section round-trips evaluate identically") {
    std::vector<Section> cases;
    cases.push_back(section_haar(2));
    TrigPoly p(1, 1);
    p.add_term({1}, cplx(0.25, -0.5));
    p.add_term({0}, cplx(1.0, 0.0));
    cases.push_back(section_trig(p));
    cases.push_back(section_meyer_scaling(3));
    cases.push_back(section_meyer_wavelet());
    cases.push_back(section_meyer_mask(2));
    const auto spec = validate_dilation(IMat::diagonal({2}));
    cases.push_back(dilate(spec, section_meyer_wavelet(), 2));
    cases.push_back(modulate({3}, section_haar(2)));
    cases.push_back(section_sum(section_haar(2), section_meyer_scaling(2)));
    cases.push_back(section_scaled(cplx(0.0, -2.0), section_meyer_wavelet()));
    cases.push_back(section_product(section_trig(p), section_meyer_scaling(2)));
    cases.push_back(section_shifted({0.5}, section_meyer_scaling(2)));
    cases.push_back(
        section_quasi_comb(2, {}, section_meyer_scaling(2)));
    for (const auto& s : cases) {
        const Json j = section_to_json(s);
        const Section back = section_from_json(j);
        REQUIRE(back.n == s.n);
        for (double x : {-1.9, -0.4, 0.0, 0.3, 1.7}) {
            std::vector<double> pt(size_t(s.n), x);
            CHECK(std::abs(eval(s, pt) - eval(back, pt)) < 1e-14);
        }
        // quasi-period declarations survive the trip
        CHECK(back.quasi.has_value() == s.quasi.has_value());
        if (s.quasi.has_value()) CHECK(*back.quasi == *s.quasi);
    }
    // multivariate: tensor and truncated product
    const Section t = section_tensor({section_haar(2), section_meyer_scaling(2)});
    const Section bt = section_from_json(section_to_json(t));
    const double x2[2] = {0.3, -0.6};
    CHECK(std::abs(eval(t, x2) - eval(bt, x2)) < 1e-14);
    CHECK_THROWS_AS(section_from_json(Json::parse("{\"kind\":\"banana\"}")), std::invalid_argument);
}

TEST_CASE("grid csv has one row per point") {
    TorusGrid g(2, 2);
    const std::vector<cplx> vals{{1, 0}, {0, 1}, {0.5, -0.5}, {2, 2}};
    const std::string csv = grid_values_to_csv(g, vals);
    CHECK(csv.rfind("x1,x2,re,im", 0) == 0);
    size_t rows = 0;
    for (char ch : csv)
        if (ch == '\n') ++rows;
    CHECK(rows == 5); // header + 4 points
    CHECK(csv.find("0.5,0,0,1") != std::string::npos);
}

TEST_CASE("report serializers expose pass flags") {
    XiReport xr;
    xr.sup = 1.0;
    xr.tail_bound = 0.5;
    xr.tol = 1e-3;
    xr.radius = 7;
    const Json jx = xi_report_to_json(xr);
    CHECK(jx["schema"] == 1);
    CHECK(jx["pass"] == false);
    CHECK(jx["radius"] == 7);

    RefineReport rr;
    rr.max_dev = 1e-12;
    rr.tol = 1e-8;
    rr.box = 8.0;
    rr.pass = true;
    const Json jr = refine_report_to_json(rr);
    CHECK(jr["pass"] == true);

    UnitNormReport ur;
    const Json ju = unit_norm_report_to_json(ur);
    CHECK(ju.contains("max_dev"));
    CHECK(ju.contains("tail_bound"));

    ReconstructionReport cr;
    cr.level = 2;
    const Json jc = reconstruction_report_to_json(cr);
    CHECK(jc["level"] == 2);
}

TEST_CASE("frame manifest counts elements") {
    const auto spec = validate_dilation(IMat::diagonal({2}));
    const auto [phis, psis] = default_generators(spec);
    const FrameSet fs = generate_frame(spec, phis, psis, 2);
    const Json j = frame_manifest_to_json(fs);
    CHECK(j["schema"] == 1);
    CHECK(j["depth"] == 2);
    CHECK(j["element_count"] == 8);
    CHECK(j["elements"].size() == 8);
    CHECK(j["elements"][0]["tag"] == "scaling");
    CHECK(j["elements"][7]["level"] == 2);
}

TEST_CASE("gram report serialization is square") {
    const auto spec = validate_dilation(IMat::diagonal({2}));
    const auto [phis, psis] = default_generators(spec);
    const FrameSet fs = generate_frame(spec, phis, psis, 1);
    TorusGrid g(1, 16);
    const auto rep = gram_report(fs, 1, g, 4);
    const Json j = gram_report_to_json(rep);
    CHECK(j["count"] == 2);
    // row-major count x count, flat
    CHECK(j["deviations"].size() == 4);
}

TEST_CASE("config loading and validation") {
    const std::string path = "test_config_tmp.json";
    {
        std::ofstream out(path);
        out << "{\"grid\": 32, \"tol\": 1e-6, \"seed\": 99}\n";
    }
    const RunConfig cfg = load_config(path);
    CHECK(cfg.grid == 32);
    CHECK(cfg.tol == 1e-6);
    CHECK(cfg.seed == 99);
    CHECK(cfg.radius == 64); // untouched default
    {
        std::ofstream out(path);
        out << "{\"gird\": 32}\n";
    }
    CHECK_THROWS_AS(load_config(path), std::invalid_argument);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_config("definitely_missing.json"), std::runtime_error);

    RunConfig bad;
    bad.tol = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    RunConfig defs;
    CHECK(defs.grid_for(1) == 256);
    CHECK(defs.grid_for(2) == 64);
    CHECK(defs.grid_for(3) == 16);
}

TEST_CASE("lattice result serialization") {
    const Section phi = section_meyer_scaling(2);
    TorusGrid g(1, 8);
    const auto res = rigged_inner_product(phi, phi, g, 4);
    const Json j = lattice_result_to_json(res);
    CHECK(j["schema"] == 1);
    CHECK(j["radius"] == 4);
    CHECK(j["values"].size() == 8);
    CHECK(j["values"][0].contains("re"));
}

} // TEST_SUITE
