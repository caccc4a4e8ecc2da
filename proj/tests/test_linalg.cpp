#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vanish/linalg.hpp"

using namespace vanish;

namespace {
Rational Q(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("solve_linear_exact basics") {
    Mat I{{Q(1), Q(0)}, {Q(0), Q(1)}};
    Vec b{Q(3, 7), Q(-2)};
    auto r = solve_linear_exact(I, b);
    REQUIRE(r.ok());
    CHECK(r.x == b);

    // Vandermonde on nodes {1,2}, interpolating values (1,0) by c0 + c1 t.
    Mat V{{Q(1), Q(1)}, {Q(1), Q(2)}};
    auto rv = solve_linear_exact(V, Vec{Q(1), Q(0)});
    REQUIRE(rv.ok());
    CHECK(rv.x == Vec{Q(2), Q(-1)});

    Mat S{{Q(1), Q(2)}, {Q(2), Q(4)}};
    auto rs = solve_linear_exact(S, Vec{Q(1), Q(2)});
    CHECK_FALSE(rs.ok());
    CHECK(rs.status == LinSolveResult::Status::Singular);

    CHECK_THROWS_AS(solve_linear_exact(Mat{{Q(1), Q(2)}}, Vec{Q(1)}), std::invalid_argument);
    CHECK_THROWS_AS(solve_linear_exact(I, Vec{Q(1)}), std::invalid_argument);
}

TEST_CASE("solve_linear_exact random round trips") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t n = 1 + rep % 6;
        Mat a(n, Vec(n));
        Vec x(n);
        for (auto& row : a)
            for (auto& e : row) e = Rational(num(rng), den(rng));
        for (auto& e : x) e = Rational(num(rng), den(rng));
        Vec b = mat_vec(a, x);
        auto r = solve_linear_exact(a, b);
        if (!r.ok()) continue;  // random matrix happened to be singular
        CHECK(mat_vec(a, r.x) == b);
    }
}

TEST_CASE("min_l2sq_affine frozen instances") {
    // Empty parameterization: the value is just ||fixed||^2.
    Vec v{Q(1, 2), Q(-3)};
    auto r0 = min_l2sq_affine(Mat{{}, {}}, v);
    CHECK(r0.sq_value == Q(1, 4) + Q(9));

    // tau_2(2,1): minimize a1^2 + a2^2 subject to 1 + a1 + a2 = 0.
    // Affine family: tail of (x-1)(-1 + y x) = fixed (-1,0) + y * (-1,1).
    Mat map{{Q(-1)}, {Q(1)}};
    Vec fixed{Q(-1), Q(0)};
    auto r1 = min_l2sq_affine(map, fixed);
    CHECK(r1.sq_value == Q(1, 2));
    CHECK(r1.point == Vec{Q(-1, 2), Q(-1, 2)});

    // rho_2(2,1): minimize (1+b)^2 + (1+2b)^2.
    Mat map2{{Q(1)}, {Q(2)}};
    Vec fixed2{Q(1), Q(1)};
    auto r2 = min_l2sq_affine(map2, fixed2);
    CHECK(r2.sq_value == Q(1, 5));
    CHECK(r2.y == Vec{Q(-3, 5)});
}

TEST_CASE("min_l2sq_affine normal-equation residual is orthogonal") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    for (int rep = 0; rep < 25; ++rep) {
        std::size_t m = 1 + rep % 5, k = rep % 4;  // includes rank-deficient shapes
        Mat map(m, Vec(k));
        Vec fixed(m);
        for (auto& row : map)
            for (auto& e : row) e = Rational(num(rng), den(rng));
        for (auto& e : fixed) e = Rational(num(rng), den(rng));
        auto r = min_l2sq_affine(map, fixed);
        // map^T residual == 0 exactly
        for (std::size_t j = 0; j < k; ++j) {
            Rational s(0);
            for (std::size_t i = 0; i < m; ++i) s += map[i][j] * r.point[i];
            CHECK(s == 0);
        }
        CHECK(dot(r.point, r.point) == r.sq_value);
    }
}
