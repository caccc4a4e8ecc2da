#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "vanish/irls.hpp"

using namespace vanish;

namespace {
Rational Q(long n, long d = 1) { return Rational(n, d); }

// tau(2,1) affine family: tail of (x-1)(-1 + y x).
const Mat kTauMap{{Q(-1)}, {Q(1)}};
const Vec kTauFixed{Q(-1), Q(0)};
}

TEST_CASE("p = 2 reproduces the exact least-squares optimum") {
    auto r = min_lp_float(kTauMap, kTauFixed, Q(2));
    CHECK(r.converged);
    CHECK(std::abs(r.value - std::sqrt(0.5)) < 1e-9);
}

TEST_CASE("large p approaches the exact linf optimum on a linf-dominated instance") {
    // min ||(y, 10)||: the linf optimum 10 is attained at y = 0 and the
    // p = 100 optimum coincides with it to high accuracy.
    Mat map{{Q(1)}, {Q(0)}};
    Vec fixed{Q(0), Q(10)};
    auto linf = min_affine_linf(map, fixed);
    REQUIRE(linf.value == 10);
    auto r = min_lp_float(map, fixed, Q(100));
    CHECK(std::abs(r.value - 10.0) < 1e-4);
}

TEST_CASE("p = 3/2 lands between the exact l1 and l2 optima") {
    auto l1 = min_affine_l1(kTauMap, kTauFixed);
    REQUIRE(l1.value == 1);
    auto r = min_lp_float(kTauMap, kTauFixed, Q(3, 2));
    CHECK(r.value <= 1.0 + 1e-9);
    CHECK(r.value >= std::sqrt(0.5) - 1e-9);
}

TEST_CASE("objective is nonincreasing in p on a fixed instance") {
    Mat map{{Q(-1), Q(0)}, {Q(1), Q(-1)}, {Q(0), Q(1)}};
    Vec fixed{Q(-1), Q(0), Q(0)};
    const Rational ps[] = {Q(5, 4), Q(3, 2), Q(2), Q(4), Q(8)};
    double prev = 1e300;
    for (const auto& p : ps) {
        auto r = min_lp_float(map, fixed, p);
        CHECK(r.value <= prev + 1e-9);
        prev = r.value;
    }
}

TEST_CASE("exponents within 1e-3 of 1 are redirected to the exact l1 LP") {
    auto l1 = min_affine_l1(kTauMap, kTauFixed);
    auto r = min_lp_float(kTauMap, kTauFixed, Q(1) + Q(1, 2000));
    CHECK(r.residual == 0);
    CHECK(r.value == Catch::Approx(static_cast<double>(l1.value)).epsilon(1e-12));
}

TEST_CASE("iteration cap is reported") {
    IrlsOptions opt;
    opt.max_iterations = 1;
    auto r = min_lp_float(kTauMap, kTauFixed, Q(8), opt);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 1);
}

TEST_CASE("p must exceed 1") {
    CHECK_THROWS_AS(min_lp_float(kTauMap, kTauFixed, Q(1)), std::invalid_argument);
}

TEST_CASE("rationalized IRLS point is an exact member of the affine family") {
    auto r = min_lp_float(kTauMap, kTauFixed, Q(2));
    Vec pt = rationalize_irls_point(kTauMap, kTauFixed, r.y);
    // The family encodes 1 + a1 + a2 = 0.
    CHECK(pt[0] + pt[1] == -1);
}
