#include <doctest.h>

#include <random>

#include "pmra/errors.hpp"
#include "pmra/kclass.hpp"
#include "pmra/unimodular.hpp"

using namespace pmra;

namespace {

KClass twisted_class(int n, i64 q, const IVec& a) {
    ExtElement e = ExtElement::scalar(n, q);
    for (int j = 1; j < n; ++j)
        e = add(e, ExtElement::monomial(n, {j, n}, -a[static_cast<size_t>(j) - 1]));
    return KClass(n, e);
}

} // namespace

TEST_SUITE("kclass") {

TEST_CASE("class of a plain twisted module") {
    ModuleDescriptor m;
    m.n = 3;
    m.q = 2;
    m.twists = {4, -1};
    const KClass c = class_of_module(m);
    CHECK(c.rank() == 2);
    CHECK(c == twisted_class(3, 2, {4, -1}));
}

TEST_CASE("descriptor validation") {
    ModuleDescriptor m;
    m.n = 3;
    m.q = 1;
    m.twists = {1};
    CHECK_THROWS_AS(class_of_module(m), DimensionMismatch);
    m.twists = {1, 2};
    m.q = 0;
    CHECK_THROWS_AS(class_of_module(m), std::invalid_argument);
    m.q = 1;
    m.conjugator = IMat::diagonal({1, 1, 2});
    CHECK_THROWS_AS(class_of_module(m), NotUnimodular);
}

TEST_CASE("direct sum adds coefficientwise") {
    const KClass c1 = twisted_class(2, 1, {3});
    const KClass c2 = twisted_class(2, 2, {-1});
    const KClass s = direct_sum(c1, c2);
    CHECK(s.rank() == 3);
    CHECK(s.elem.coefficient(0b11) == -2);
}

TEST_CASE("gl2 action scales the area coefficient by the determinant") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<i64> dist(-20, 20);
    for (int t = 0; t < 100; ++t) {
        // random GL(2,Z) element via row operations on the identity
        IMat a = IMat::identity(2);
        for (int k = 0; k < 6; ++k) {
            const i64 c = dist(rng) % 3;
            IMat e = IMat::identity(2);
            if (k % 2 == 0)
                e(0, 1) = c;
            else
                e(1, 0) = c;
            a = mul(a, e);
        }
        if (rng() % 2) {
            IMat f = IMat::identity(2);
            f(0, 0) = -1;
            a = mul(a, f);
        }
        REQUIRE(abs_i(det(a)) == 1);
        const i64 q = dist(rng), w = dist(rng);
        const KClass c = twisted_class(2, q, {w});
        const KClass g2 = gl2_action(a, c);
        CHECK(g2.rank() == q);
        CHECK(g2.elem.coefficient(0b11) == det(a) * (-w));
        CHECK(gl_action(a, c) == g2);
    }
}

TEST_CASE("frozen dilation example: diag(2,2,2)") {
    const auto spec = validate_dilation(IMat::diagonal({2, 2, 2}));
    for (i64 a = 1; a <= 5; ++a) {
        ModuleDescriptor m;
        m.n = 3;
        m.q = 1;
        m.twists = {0, a};
        const ModuleDescriptor v1 = dilate_class(spec, m);
        CHECK(v1.q == 8);
        CHECK(v1.twists == IVec{0, 2 * a});
        const WaveletClass w0 = wavelet_class(spec, m, 0);
        ExtElement expect = ExtElement::scalar(3, 7);
        expect = add(expect, ExtElement::monomial(3, {2, 3}, -a));
        CHECK(w0.diff.elem == expect);
        CHECK(w0.cancellation_valid);
    }
}

TEST_CASE("iterated dilation for diag(2,2)") {
    const auto spec = validate_dilation(IMat::diagonal({2, 2}));
    ModuleDescriptor m;
    m.n = 2;
    m.q = 1;
    m.twists = {1};
    const ModuleDescriptor v2 = pmra_level_class(spec, m, 2);
    CHECK(v2.q == 16);
    CHECK(v2.twists == IVec{1});
    // a_1 doubles per step for diag(2,2,2) but stays fixed for diag(2,2):
    // the complementary product is empty and sign(d_1 d_2) = +1.
}

TEST_CASE("sign bookkeeping for negative diagonal entries") {
    const auto spec = validate_dilation(IMat::diagonal({2, -3}));
    ModuleDescriptor m;
    m.n = 2;
    m.q = 1;
    m.twists = {4};
    const ModuleDescriptor v1 = dilate_class(spec, m);
    CHECK(v1.q == 6);
    // n = 2: empty complementary product, sign(d_1 d_2) = sign(2 * -3) = -1
    CHECK(v1.twists == IVec{-4});
}

TEST_CASE("multi-twist dilation is rejected") {
    const auto spec = validate_dilation(IMat::diagonal({2, 2, 2}));
    ModuleDescriptor m;
    m.n = 3;
    m.q = 1;
    m.twists = {1, 1};
    CHECK_THROWS_AS(dilate_class(spec, m), UnsupportedTwistPattern);
}

TEST_CASE("cancellation flag tracks the dimension") {
    const auto spec4 = validate_dilation(IMat::diagonal({2, 2, 2, 2}));
    ModuleDescriptor m;
    m.n = 4;
    m.q = 1;
    m.twists = {0, 0, 1};
    CHECK(wavelet_class(spec4, m, 0).cancellation_valid);
    const auto spec5 = validate_dilation(IMat::diagonal({2, 2, 2, 2, 2}));
    m.n = 5;
    m.twists = {0, 0, 0, 1};
    CHECK_FALSE(wavelet_class(spec5, m, 0).cancellation_valid);
}

TEST_CASE("conjugated descriptor substitutes generators") {
    // B from the (2,3,5) completion; X_B(q,0,a) pushes the twist through B.
    const UnimodularCompletion comp = sl3_with_cofactors(2, 3, 5);
    ModuleDescriptor m;
    m.n = 3;
    m.q = 4;
    m.twists = {0, 7};
    m.conjugator = comp.b;
    const KClass c = class_of_module(m);
    CHECK(c.rank() == 4);
    // class = q + a*(x e1^e2 + y e1^e3 + z e2^e3) with a = 7
    CHECK(c.elem.coefficient(0b011) == 7 * 2);
    CHECK(c.elem.coefficient(0b101) == 7 * 3);
    CHECK(c.elem.coefficient(0b110) == 7 * 5);
}

TEST_CASE("gl_action composes with substitution on random classes") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<i64> dist(-6, 6);
    for (int t = 0; t < 50; ++t) {
        const i64 q = 1 + static_cast<i64>(rng() % 9);
        const i64 a1 = dist(rng), a2 = dist(rng);
        const KClass c = twisted_class(3, q, {a1, a2});
        // upper unitriangular B
        IMat b = IMat::identity(3);
        b(0, 1) = dist(rng);
        b(0, 2) = dist(rng);
        b(1, 2) = dist(rng);
        const KClass g = gl_action(b, c);
        CHECK(g.elem == substitute(b, c.elem));
        CHECK(g.rank() == q);
    }
}

} // TEST_SUITE
