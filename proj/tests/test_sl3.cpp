#include <doctest.h>

#include <random>

#include "pmra/errors.hpp"
#include "pmra/unimodular.hpp"

using namespace pmra;

namespace {

void check_completion(i64 x, i64 y, i64 z) {
    const UnimodularCompletion c = sl3_with_cofactors(x, y, z);
    REQUIRE(c.b.rows == 3);
    CHECK(det(c.b) == 1);
    // rows 2 and 3 carry the prescribed cofactors
    const IMat& b = c.b;
    CHECK(b(1, 1) == 0);
    CHECK(b(1, 0) == -c.alpha);
    CHECK(b(1, 2) == c.beta);
    CHECK(b(2, 0) == c.sigma);
    CHECK(b(2, 1) == c.nu);
    CHECK(b(2, 2) == c.tau);
    CHECK(b(1, 1) * b(2, 0) - b(1, 0) * b(2, 1) == x);
    CHECK(b(1, 2) * b(2, 0) - b(1, 0) * b(2, 2) == y);
    CHECK(b(1, 2) * b(2, 1) - b(1, 1) * b(2, 2) == z);
    CHECK(c.nu * c.alpha == x);
    CHECK(c.alpha * c.tau + c.beta * c.sigma == y);
    CHECK(c.nu * c.beta == z);
}

} // namespace

TEST_SUITE("sl3") {

TEST_CASE("extended gcd is normalized and exact") {
    SUBCASE("frozen traces") {
        auto r = ext_gcd(5, 3);
        CHECK(r.g == 1);
        CHECK(r.u == -1);
        CHECK(r.v == 2);
        r = ext_gcd(1, 2);
        CHECK(r.g == 1);
        CHECK(r.u == 1);
        CHECK(r.v == 0);
        r = ext_gcd(2, 5);
        CHECK(r.g == 1);
        CHECK(r.u == -2);
        CHECK(r.v == 1);
    }
    SUBCASE("degenerate inputs") {
        auto r = ext_gcd(0, 0);
        CHECK(r.g == 0);
        r = ext_gcd(0, -7);
        CHECK(r.g == 7);
        CHECK(r.u * 0 + r.v * (-7) == 7);
        r = ext_gcd(-4, 0);
        CHECK(r.g == 4);
        CHECK(r.u * (-4) == 4);
    }
    SUBCASE("random identities and minimality") {
        std::mt19937_64 rng(97);
        std::uniform_int_distribution<i64> dist(-200, 200);
        for (int t = 0; t < 500; ++t) {
            const i64 a = dist(rng), b = dist(rng);
            const auto r = ext_gcd(a, b);
            CHECK(r.g >= 0);
            CHECK(r.g == gcd_i(a, b));
            CHECK(r.u * a + r.v * b == r.g);
            if (a != 0 && b != 0 && r.g > 0) {
                // |u| is minimal: |u| <= |b/g| / 2 rounded up
                const i64 bu = abs_i(b / r.g);
                CHECK(2 * abs_i(r.u) <= bu + (bu % 2));
            }
        }
    }
}

TEST_CASE("completion for the (2,3,5) triple matches the frozen witnesses") {
    const UnimodularCompletion c = sl3_with_cofactors(2, 3, 5);
    CHECK(c.b11 == 1);
    CHECK(c.b12 == 2);
    CHECK(c.b13 == 0);
    CHECK(c.nu == 1);
    CHECK(c.alpha == 2);
    CHECK(c.beta == 5);
    CHECK(c.sigma == 1);
    CHECK(c.tau == -1);
    check_completion(2, 3, 5);
}

TEST_CASE("degenerate coprime triples complete") {
    check_completion(1, 0, 0);
    check_completion(0, 1, 0);
    check_completion(0, 0, 1);
    check_completion(0, 5, 3);  // nu = gcd(0,3) branch
    check_completion(4, 1, 0);  // beta = 0 branch
    check_completion(0, -1, 0);
    check_completion(-3, 7, -2);
}

TEST_CASE("non-coprime triples are rejected") {
    CHECK_THROWS_AS(sl3_with_cofactors(2, 4, 6), NotCoprime);
    CHECK_THROWS_AS(sl3_with_cofactors(0, 0, 0), NotCoprime);
    CHECK_THROWS_AS(sl3_with_cofactors(-10, 5, 0), NotCoprime);
}

TEST_CASE("random coprime triples complete exactly") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<i64> dist(-50, 50);
    int done = 0;
    while (done < 400) {
        const i64 x = dist(rng), y = dist(rng), z = dist(rng);
        if (gcd_i(gcd_i(x, y), z) != 1) continue;
        check_completion(x, y, z);
        ++done;
    }
}

} // TEST_SUITE
