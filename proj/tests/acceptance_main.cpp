// Acceptance gate: one pass/fail line per criterion, exit 0 only if all
// pass within their runtime budgets. Tolerances are pinned here on purpose;
// loosening them is not a fix.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "pmra/analysis.hpp"
#include "pmra/cosets.hpp"
#include "pmra/filterbank.hpp"
#include "pmra/frames.hpp"
#include "pmra/kclass.hpp"
#include "pmra/unimodular.hpp"

using namespace pmra;

namespace {

struct Criterion {
    const char* name;
    double budget_s;
    bool (*run)(std::string& detail);
};

bool expect(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

// ---- 1: factor-2 diagonal dilation on the 3-torus, exact descriptor images

bool crit1(std::string& detail) {
    const DilationSpec spec = validate_dilation(IMat::diagonal({2, 2, 2}));
    bool ok = true;
    for (i64 a = 1; a <= 5; ++a) {
        ModuleDescriptor m;
        m.n = 3;
        m.q = 1;
        m.twists = {0, a};
        const ModuleDescriptor v1 = dilate_class(spec, m);
        ok = ok && expect(v1.q == 8, detail, "V1 rank != 8 at a=" + std::to_string(a));
        ok = ok && expect(v1.twists == IVec{0, 2 * a}, detail,
                          "V1 twist != 2a at a=" + std::to_string(a));

        const WaveletClass w = wavelet_class(spec, m, 0);
        ExtElement want = ExtElement::scalar(3, 7);
        want = add(want, ExtElement::monomial(3, {2, 3}, -a));
        ok = ok && expect(w.diff == KClass(3, want), detail,
                          "W0 class != 7 - a e2^e3 at a=" + std::to_string(a));
        ok = ok && expect(w.cancellation_valid, detail, "cancellation flag false for n=3");
    }
    return ok;
}

// ---- 2: unimodular 2x2 action on classes, exact coefficient law

IMat random_unimodular2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<i64> shear(-3, 3);
    IMat m = IMat::identity(2);
    for (int step = 0; step < 8; ++step) {
        IMat e = IMat::identity(2);
        switch (kind(rng)) {
        case 0: e(0, 1) = shear(rng); break;
        case 1: e(1, 0) = shear(rng); break;
        default:
            e(0, 0) = 0;
            e(0, 1) = 1;
            e(1, 0) = -1;
            e(1, 1) = 0;
            break;
        }
        m = mul(m, e);
    }
    return m;
}

bool crit2(std::string& detail) {
    std::mt19937_64 rng(20240819);
    std::uniform_int_distribution<i64> qd(1, 9), wd(-9, 9);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const IMat a = random_unimodular2(rng);
        const i64 da = det(a);
        ok = ok && expect(da == 1 || da == -1, detail, "generator product not unimodular");
        const i64 q = qd(rng), w = wd(rng);
        ExtElement e = ExtElement::scalar(2, q);
        e = add(e, ExtElement::monomial(2, {1, 2}, w));
        const KClass c(2, e);

        const KClass image = gl2_action(a, c);
        ok = ok && expect(image.rank() == q, detail, "rank moved under gl2_action");
        ok = ok && expect(image.elem.coefficient(0b11) == da * w, detail,
                          "top coefficient != det(A) * w");
        ok = ok && expect(gl_action(a, c) == image, detail,
                          "general substitution action disagrees with gl2_action");
    }
    return ok;
}

// ---- 3: cofactor completions and the embedded classes, 1000 random triples

bool crit3(std::string& detail) {
    std::mt19937_64 rng(20240819);
    std::uniform_int_distribution<i64> coord(-50, 50);
    std::uniform_int_distribution<i64> qd(1, 5);
    bool ok = true;
    int done = 0;
    while (done < 1000 && ok) {
        const i64 x = coord(rng), y = coord(rng), z = coord(rng);
        if (gcd_i(gcd_i(x, y), z) != 1) continue;
        ++done;
        const UnimodularCompletion c = sl3_with_cofactors(x, y, z);
        const IMat& b = c.b;
        ok = ok && expect(det(b) == 1, detail, "det B != 1");
        ok = ok && expect(b(1, 1) * b(2, 0) - b(1, 0) * b(2, 1) == x, detail, "cofactor x wrong");
        ok = ok && expect(b(1, 2) * b(2, 0) - b(1, 0) * b(2, 2) == y, detail, "cofactor y wrong");
        ok = ok && expect(b(1, 2) * b(2, 1) - b(1, 1) * b(2, 2) == z, detail, "cofactor z wrong");

        ModuleDescriptor m;
        m.n = 3;
        m.q = qd(rng);
        m.twists = {0, 1};
        m.conjugator = b;
        ExtElement want = ExtElement::scalar(3, m.q);
        want = add(want, ExtElement::monomial(3, {1, 2}, x));
        want = add(want, ExtElement::monomial(3, {1, 3}, y));
        want = add(want, ExtElement::monomial(3, {2, 3}, z));
        ok = ok && expect(class_of_module(m) == KClass(3, want), detail,
                          "embedded class misses the target triple");
    }
    return ok;
}

// ---- 4: coset tables, brute-force incongruence and the refinement identity

bool crit4(std::string& detail) {
    std::vector<DilationSpec> specs;
    specs.push_back(validate_dilation(IMat::diagonal({2, 2})));
    specs.push_back(validate_dilation(IMat::diagonal({2, 3})));
    specs.push_back(validate_dilation(IMat::diagonal({2, 2, 2})));
    specs.push_back(validate_dilation(IMat::from_rows({{2, 2}, {0, 4}}),
                                      IMat::from_rows({{1, -1}, {0, 1}})));
    bool ok = true;
    for (const auto& spec : specs) {
        std::vector<CosetTable> tabs;
        for (int level = 0; level <= 3; ++level) tabs.push_back(coset_table(spec, level));
        for (int level = 0; level <= 3; ++level) {
            const auto& reps = tabs[static_cast<size_t>(level)].reps;
            const auto expected = static_cast<size_t>(pow_i(spec.absdet, level));
            ok = ok && expect(reps.size() == expected, detail, "table size != d^level");
            for (size_t i = 0; i < reps.size() && ok; ++i)
                for (size_t j = i + 1; j < reps.size() && ok; ++j)
                    ok = ok && expect(!congruent_mod(spec, level, reps[i], reps[j]), detail,
                                      "congruent pair inside one table");
            if (level > 0) {
                const auto& prev = tabs[static_cast<size_t>(level - 1)].reps;
                for (size_t l = 0; l < prev.size(); ++l)
                    ok = ok && expect(reps[l] == prev[l], detail, "prefix consistency broken");
                // refinement: reps[l + m d^(level-1)] = A^(level-1) base[m] + reps[l]
                const IMat aj = mat_pow(spec.entries, level - 1);
                const auto& base = tabs[1].base;
                const i64 dj = pow_i(spec.absdet, level - 1);
                for (size_t m = 0; m < base.size(); ++m) {
                    const IVec shift = mul(aj, base[m]);
                    for (size_t l = 0; l < static_cast<size_t>(dj); ++l) {
                        const size_t idx = l + m * static_cast<size_t>(dj);
                        ok = ok && expect(reps[idx] == add(prev[l], shift), detail,
                                          "refinement identity broken");
                    }
                }
            }
        }
    }
    return ok;
}

// ---- 5: filter banks for d = 2..5

bool crit5(std::string& detail) {
    bool ok = true;
    for (i64 d = 2; d <= 5; ++d) {
        const FilterBank fb = haar_filter_bank(d);
        const FilterVerifyReport rep = verify_filter_bank(fb, 256, 1e-10);
        ok = ok && expect(rep.m0_zero_dev < 1e-12, detail,
                          "m0(0) deviation >= 1e-12 at d=" + std::to_string(d));
        ok = ok && expect(rep.gram_max_dev < 1e-10, detail,
                          "Gram deviation >= 1e-10 at d=" + std::to_string(d));
        ok = ok && expect(rep.pass, detail, "filter report fails at d=" + std::to_string(d));
    }
    return ok;
}

// ---- 6: truncated product vs closed form, then periodized square norm

bool crit6(std::string& detail) {
    bool ok = true;
    for (i64 d = 2; d <= 3; ++d) {
        const DilationSpec spec = validate_dilation(IMat::diagonal({d}));
        const FilterBank fb = haar_filter_bank(d);
        const Section trunc = section_truncated_product(spec, fb.m[0], 20);
        const Section closed = section_haar(d);
        std::vector<double> xs(1024);
        for (int k = 0; k < 1024; ++k) xs[static_cast<size_t>(k)] = -8.0 + 16.0 * k / 1023.0;
        const auto tv = eval_points(trunc, xs, 1);
        const auto cv = eval_points(closed, xs, 1);
        double max_dev = 0.0;
        for (size_t i = 0; i < tv.size(); ++i)
            max_dev = std::max(max_dev, std::abs(tv[i] - cv[i]));
        ok = ok && expect(max_dev < 1e-6, detail,
                          "product/closed-form gap >= 1e-6 at d=" + std::to_string(d));
    }
    const XiReport xi = xi_membership(section_haar(2), TorusGrid(1, 256), 512, 1e-3);
    ok = ok && expect(xi.pass, detail, "membership check failed at R=512");
    ok = ok && expect(std::abs(xi.sup - 1.0) <= xi.tail_bound, detail,
                      "periodized square norm further than the tail bound from 1");
    return ok;
}

// ---- 7: two-scale and unit-norm conditions, honest pass and honest fail

bool crit7(std::string& detail) {
    bool ok = true;
    const FilterBank fb = haar_filter_bank(2);
    const Section gamma1 = section_haar(2);
    const Section mask1 = section_trig(fb.m[0]);
    const DilationSpec spec1 = validate_dilation(IMat::diagonal({2}));
    const TorusGrid g1(1, 256);
    ok = ok && expect(check_refinement(gamma1, mask1, spec1, g1, 1e-8).pass, detail,
                      "1d two-scale check failed");
    ok = ok && expect(check_unit_lattice_norm(gamma1, 1, g1, 1024, 1e-8).pass, detail,
                      "1d unit-norm check failed");

    const Section gamma2 = section_tensor({gamma1, gamma1});
    const Section mask2 = section_trig(tensor_filter({fb, fb}));
    const DilationSpec spec2 = validate_dilation(IMat::diagonal({2, 2}));
    const TorusGrid g2(2, 64);
    ok = ok && expect(check_refinement(gamma2, mask2, spec2, g2, 1e-8).pass, detail,
                      "2d two-scale check failed");
    ok = ok && expect(check_unit_lattice_norm(gamma2, 1, g2, 64, 1e-8).pass, detail,
                      "2d unit-norm check failed");

    // gamma * g for 1-periodic non-unimodular g breaks both conditions
    TrigPoly g(1, 1);
    g.add_term({0}, {1.0, 0.0});
    g.add_term({1}, {0.2, 0.0});
    const Section perturbed = section_product(gamma1, section_trig(g));
    ok = ok && expect(!check_refinement(perturbed, mask1, spec1, g1, 1e-8).pass, detail,
                      "perturbed section still passes the two-scale check");
    ok = ok && expect(!check_unit_lattice_norm(perturbed, 1, g1, 1024, 1e-8).pass, detail,
                      "perturbed section still passes the unit-norm check");
    return ok;
}

// ---- 8: frame reconstruction and Gram certification

TrigPoly seeded_poly(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> cdist(-1.0, 1.0);
    TrigPoly p(n, 1);
    IVec freq(static_cast<size_t>(n), 0);
    for (int t = 0; t < 3; ++t) {
        for (auto& f : freq) f = static_cast<i64>(rng() % 5) - 2;
        p.add_term(freq, {cdist(rng), cdist(rng)});
    }
    p.add_term(IVec(static_cast<size_t>(n), 0), {1.0, 0.0});
    return p;
}

std::vector<Section> wavelet_corpus(const FrameSet& fs, int level, std::mt19937_64& rng) {
    std::vector<Section> out;
    for (const auto& psi : fs.wavelets) out.push_back(dilate(fs.spec, psi, level));
    for (int variant = 0; variant < 2; ++variant) {
        Section combo =
            section_product(fs.wavelets[0], section_trig(seeded_poly(fs.spec.n, rng)));
        for (size_t k = 1; k < fs.wavelets.size(); ++k)
            combo = section_sum(
                combo, section_product(fs.wavelets[k], section_trig(seeded_poly(fs.spec.n, rng))));
        out.push_back(dilate(fs.spec, combo, level));
    }
    return out;
}

bool crit8(std::string& detail) {
    bool ok = true;
    std::mt19937_64 rng(20240819);

    const DilationSpec s1 = validate_dilation(IMat::diagonal({2}));
    const auto [phi1, psi1] = default_generators(s1);
    const FrameSet f1 = generate_frame(s1, phi1, psi1, 2);
    const TorusGrid g1(1, 256);
    for (int level = 0; level <= 2; ++level) {
        for (const auto& zeta : wavelet_corpus(f1, level, rng)) {
            const auto rep = verify_reconstruction(f1, zeta, level, g1, 8, 1e-8);
            ok = ok && expect(rep.max_residual < 1e-8, detail,
                              "1d residual >= 1e-8 at level " + std::to_string(level));
        }
    }
    for (int level = 1; level <= 2; ++level) {
        const GramLevelReport gram = gram_report(f1, level, g1, 8);
        ok = ok && expect(gram.count == static_cast<size_t>(pow_i(2, level)), detail,
                          "1d level count != d^level");
        ok = ok && expect(gram.certified(1e-8), detail,
                          "1d Gram not certified at level " + std::to_string(level));
    }

    const DilationSpec s2 = validate_dilation(IMat::diagonal({2, 2}));
    const auto [phi2, psi2] = default_generators(s2);
    ok = ok && expect(psi2.size() == 3, detail, "2d wavelet generator count != 3");
    const FrameSet f2 = generate_frame(s2, phi2, psi2, 1);
    const TorusGrid g2(2, 16);
    for (int level = 0; level <= 1; ++level) {
        const size_t count = f2.level_elements(level).size();
        const size_t want = 3 * static_cast<size_t>(pow_i(4, level));
        ok = ok && expect(count == want, detail, "2d level count != r d^level");
        for (const auto& zeta : wavelet_corpus(f2, level, rng)) {
            const auto rep = verify_reconstruction(f2, zeta, level, g2, 8, 1e-8, 8.0);
            ok = ok && expect(rep.max_residual < 1e-8, detail,
                              "2d residual >= 1e-8 at level " + std::to_string(level));
        }
    }
    return ok;
}

// ---- 9: residuals against growing level spans decrease strictly

bool crit9(std::string& detail) {
    const DilationSpec spec = validate_dilation(IMat::diagonal({2}));
    const auto [phis, psis] = default_generators(spec);
    const FrameSet fs = generate_frame(spec, phis, psis, 3);
    Section zeta = section_sum(phis[0], section_scaled({0.8, 0.0}, psis[0]));
    for (int j = 1; j <= 3; ++j)
        zeta = section_sum(zeta,
                           section_scaled({std::pow(2.0, -j), 0.0}, dilate(spec, psis[0], j)));
    const std::vector<double> res =
        projection_residuals(fs, zeta, TorusGrid(1, 48), 8, 16.0);
    bool ok = expect(res.size() == 4, detail, "expected one residual per level 0..3");
    for (size_t i = 0; ok && i + 1 < res.size(); ++i)
        ok = ok && expect(res[i] > res[i + 1], detail,
                          "residuals not strictly decreasing at i=" + std::to_string(i));
    return ok;
}

} // namespace

int main() {
    const Criterion criteria[] = {
        {"exact level-one image and complement class for the 2,2,2 dilation", 1.0, crit1},
        {"unimodular 2x2 action matches the determinant coefficient law", 1.0, crit2},
        {"cofactor completions embed prescribed classes, 1000 triples", 5.0, crit3},
        {"coset tables: incongruence, prefixes, refinement identity", 10.0, crit4},
        {"filter banks d=2..5: normalization and translate Gram", 5.0, crit5},
        {"truncated product matches closed form; periodization near 1", 30.0, crit6},
        {"two-scale and unit-norm checks pass; perturbation fails both", 30.0, crit7},
        {"frame reconstruction and Gram certification, 1d and 2d", 120.0, crit8},
        {"projection residuals decrease strictly through level 3", 30.0, crit9},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_s) {
            ok = false;
            if (detail.empty())
                detail = "over budget (" + std::to_string(c.budget_s) + " s)";
        }
        if (!ok) ++failures;
        std::printf("%s %d/9 %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", index, c.name, secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
    }
    if (failures) std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
