#include <catch2/catch_amalgamated.hpp>

#include "vanish/constructions.hpp"

using namespace vanish;

namespace {
Rational Q(long n, long d = 1) { return Rational(n, d); }

// Independent square-free oracle: trial division.
bool is_odd_squarefree_ref(long j) {
    if (j % 2 == 0) return false;
    for (long d = 2; d * d <= j; ++d)
        if (j % (d * d) == 0) return false;
    return true;
}
}

TEST_CASE("H_m coefficients, m = 2 frozen values") {
    auto h = HmCoefficients::compute(2);
    CHECK(h.c[0] == Q(-8, 3));
    CHECK(h.c[1] == Q(-1, 3));
    CHECK(h.d == Q(2));
    CHECK(build_H(2) == Poly{Q(1), Q(-8, 3), Q(2), Q(0), Q(-1, 3)});
    CHECK(build_H(2).eval(Q(1)) == 0);
    CHECK(build_H(2).multiplicity_at_one() == 3);
}

TEST_CASE("H_1 is the constant 1") {
    CHECK(build_H(1) == Poly::constant(Q(1)));
    CHECK_THROWS_AS(build_H(0), std::invalid_argument);
}

TEST_CASE("H_m family certifies for m = 1..10") {
    for (long m = 1; m <= 10; ++m) {
        Witness w = build_H_witness(m);
        INFO("m = " << m);
        CHECK(w.all_verified());
        if (m >= 2) {
            CHECK(w.poly.degree() == m * m);
            CHECK(w.poly.eval(Q(1)) == 0);  // coefficients sum to zero
            CHECK(w.observed_multiplicity >= m + 1);
            auto h = HmCoefficients::compute(m);
            for (long k = 1; k <= m; ++k)
                CHECK(boost::multiprecision::abs(h.c[static_cast<std::size_t>(k - 1)]) <=
                      Q(4) / boost::multiprecision::abs(Q(k * k - 2)));
            CHECK(boost::multiprecision::abs(h.d) <= 8);
        }
    }
}

TEST_CASE("H_5 spot checks") {
    Witness w = build_H_witness(5);
    CHECK(w.poly.degree() == 25);
    CHECK(w.observed_multiplicity >= 6);
    CHECK(w.all_verified());
}

TEST_CASE("odd_squarefree") {
    CHECK(odd_squarefree(1) == std::vector<long>{1});
    CHECK(odd_squarefree(10) == std::vector<long>{1, 3, 5, 7});
    CHECK(odd_squarefree(15) == std::vector<long>{1, 3, 5, 7, 11, 13, 15});
    // against the trial-division oracle
    auto s = odd_squarefree(500);
    std::vector<long> ref;
    for (long j = 1; j <= 500; ++j)
        if (is_odd_squarefree_ref(j)) ref.push_back(j);
    CHECK(s == ref);
}

TEST_CASE("build_lemma31 n=100 M=4 p=1") {
    Witness w = build_lemma31(100, 4, NormExponent::one());
    CHECK(w.params.at("m") == "5");
    CHECK(w.params.at("odd_squarefree_count") == "2");  // {1, 3}
    CHECK(w.poly.coeff(0) == 2);
    CHECK(w.poly.degree() == 75);
    CHECK(w.observed_multiplicity >= 5);
    CHECK(w.poly.tail_norm(NormExponent::one()).value <= 64);
    CHECK(w.all_verified());
    CHECK_FALSE(w.vacuous);
}

TEST_CASE("build_lemma31 degenerate and m=1 branches") {
    // n=1, M=1: m=1, substitute 1 - x.
    Witness w = build_lemma31(1, 1, NormExponent::one());
    CHECK(w.poly == Poly{Q(1), Q(-1)});
    CHECK(w.observed_multiplicity == 1);
    CHECK(w.all_verified());

    // M > n: m = 0, vacuous.
    Witness v = build_lemma31(3, 16, NormExponent::two());
    CHECK(v.vacuous);
    CHECK(v.claims.empty());
    CHECK(v.params.at("m") == "0");
}

TEST_CASE("build_lemma31 n=400 M=1 p=inf") {
    Witness w = build_lemma31(400, 1, NormExponent::infinity());
    CHECK(w.params.at("m") == "20");
    CHECK(w.poly.degree() == 400);
    CHECK(w.poly.tail_norm(NormExponent::infinity()).value <= 16);
    CHECK(w.all_verified());
}

TEST_CASE("build_lemma31 general p uses the scaled budget") {
    Witness w = build_lemma31(64, 2, NormExponent::general(Q(3, 2)));
    CHECK(w.all_verified());
}

TEST_CASE("lemma32 M selection follows the pi rule") {
    // L = 1/48: (3/16pi^2)*1 < 1/48 so M = 2.
    CHECK(lemma32_select_M(Q(1, 48), Q(2)) == 2);
    // L = 1: ceil((16 pi^2/3)^2) = ceil(2770.747...) = 2771.
    CHECK(lemma32_select_M(Q(1), Q(2)) == 2771);
}

TEST_CASE("build_lemma32 small and degenerate cases") {
    Witness w = build_lemma32(36, Q(1, 48), NormExponent::two());
    CHECK(w.params.at("M") == "2");
    CHECK_FALSE(w.vacuous);
    CHECK(w.all_verified());
    // tail norm of the scaled polynomial certified <= 1
    CHECK(w.poly.tail_norm(NormExponent::two()).value <= 1);

    // n = 400, L = 1: M = 2771 forces m = 0, the vacuous branch.
    Witness v = build_lemma32(400, Q(1), NormExponent::two());
    CHECK(v.vacuous);
    CHECK(v.params.at("M") == "2771");
}

TEST_CASE("build_lemma32 mid-size certification") {
    // Same rule as the large spec instance, scaled down: n = 10^5 keeps
    // M = 2771 and yields m = 6.
    Witness w = build_lemma32(100000, Q(1), NormExponent::two());
    CHECK(w.params.at("M") == "2771");
    CHECK(w.params.at("m") == "6");
    CHECK(w.observed_multiplicity >= 6);
    CHECK(w.all_verified());
    CHECK(w.params.count("ratio_squared") == 1);
}

TEST_CASE("build_lemma33 frozen instances") {
    Witness w = build_lemma33(100, Q(1, 20), NormExponent::two());
    CHECK(w.params.at("k") == "1");
    CHECK(w.params.at("m") == "10");
    CHECK(w.observed_multiplicity >= 11);
    CHECK(w.poly.coeff(0) == Q(1, 20));
    CHECK(w.all_verified());

    Witness w2 = build_lemma33(100, Q(1, 1000000), NormExponent::one());
    CHECK(w2.params.at("k") == "4");
    CHECK(w2.params.at("m") == "5");
    CHECK(w2.observed_multiplicity >= 24);
    CHECK(w2.all_verified());

    CHECK_THROWS_AS(build_lemma33(100, Q(1, 17), NormExponent::one()), std::invalid_argument);
    CHECK_THROWS_AS(build_lemma33(100, Q(1, 16), NormExponent::one()), std::invalid_argument);
}

TEST_CASE("build_lemma33 m=1 branch uses L(1-x)^k") {
    Witness w = build_lemma33(3, Q(1, 20), NormExponent::one());
    CHECK(w.params.at("k") == "1");
    CHECK(w.params.at("m") == "1");
    CHECK(w.poly == Poly{Q(1, 20), Q(-1, 20)});
    CHECK(w.all_verified());
}

TEST_CASE("build_lemma33 exact power-of-17 threshold") {
    // L = 17^{-2}: k = floor(log_17 289) = 2 exactly.
    Witness w = build_lemma33(100, Q(1, 289), NormExponent::one());
    CHECK(w.params.at("k") == "2");
    CHECK(w.all_verified());
}

TEST_CASE("build_lemma34 frozen instances") {
    Witness w = build_lemma34(1001, Q(1, 2));
    CHECK(w.params.at("r") == "37");
    CHECK(w.params.at("m") == "5");
    CHECK(w.observed_multiplicity >= 6);
    CHECK(w.all_verified());
    // Q(1) = 0 and Q' = H_m(x^r) exactly.
    CHECK(w.poly.eval(Q(1)) == 0);
    CHECK(w.poly.derivative() == build_H(5).compose_power(37));

    Witness v = build_lemma34(101, Q(1, 2));
    CHECK(v.vacuous);
    CHECK(v.params.at("m") == "1");

    Witness w3 = build_lemma34(10000, Q(9, 10));
    CHECK(w3.params.at("r") == "229");
    CHECK(w3.params.at("m") == "6");
    CHECK(w3.all_verified());

    CHECK_THROWS_AS(build_lemma34(100, Q(1)), std::invalid_argument);
    CHECK_THROWS_AS(build_lemma34(100, Q(0)), std::invalid_argument);
}

TEST_CASE("build_cheb_witness frozen instances") {
    Witness w = build_cheb_witness(3, Q(3, 2));
    CHECK(w.params.at("m") == "1");
    CHECK(w.poly == Poly{Q(2), Q(-1)});
    CHECK(w.poly.coeff(0) == 2);
    CHECK(w.all_verified());

    Witness w10 = build_cheb_witness(10, Q(3, 2));
    CHECK(w10.params.at("m") == "2");
    CHECK(w10.poly.eval(Q(0)) == Q(161, 81));
    CHECK(w10.all_verified());

    CHECK_THROWS_AS(build_cheb_witness(10, Q(2)), std::invalid_argument);
    CHECK_THROWS_AS(build_cheb_witness(10, Q(1)), std::invalid_argument);

    // n = 1 redirects to the factorial witness.
    Witness w1 = build_cheb_witness(1, Q(3, 2));
    CHECK(w1.construction == "factorial");
    CHECK(w1.poly == Poly{Q(-1), Q(1)});
    CHECK(w1.all_verified());
}

TEST_CASE("build_factorial_witness") {
    Witness w2 = build_factorial_witness(2);
    CHECK(w2.poly == Poly{Q(2), Q(-3), Q(1)});
    CHECK(w2.all_verified());

    Witness w5 = build_factorial_witness(5);
    CHECK(w5.poly.eval(Q(0)) == -120);
    for (long j = 1; j <= 5; ++j) CHECK(w5.poly.eval(Q(j)) == 0);
    CHECK(w5.all_verified());
}

TEST_CASE("corrupting a coefficient flips a verification flag") {
    Witness w = build_lemma33(50, Q(1, 20), NormExponent::two());
    REQUIRE(w.all_verified());
    auto coeffs = w.poly.coeffs();
    coeffs[3] += Q(1, 1000000000);
    w.poly = Poly(std::move(coeffs));
    certify_witness(w);
    CHECK_FALSE(w.all_verified());
}

TEST_CASE("vacuous witnesses are first-class and scale-invariant claims hold") {
    Witness w = build_lemma34(2000, Q(3, 4));
    REQUIRE_FALSE(w.vacuous);
    REQUIRE(w.all_verified());
    // Any nonzero scalar multiple certifies the same ratio claims.
    Witness scaled = w;
    scaled.poly = w.poly * Q(7, 3);
    certify_witness(scaled);
    CHECK(scaled.verified[1] == Cmp::True);  // coeff_ratio_ge survives scaling
    CHECK(scaled.observed_multiplicity == w.observed_multiplicity);
}
