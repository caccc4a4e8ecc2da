#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "vanish/bounds.hpp"
#include "vanish/config.hpp"

using namespace vanish;

namespace {
Rational Q(long n, long d = 1) { return Rational(n, d); }
const EnvelopeConstants kC21 = EnvelopeConstants::conjugate_defaults();
const EnvelopeConstants kC22 = EnvelopeConstants::l1_defaults();

void check_between(const Interval& e, const Rational& lo, const Rational& hi) {
    CHECK(e.definitely_gt(lo));
    CHECK(e.definitely_lt(hi));
}
}

TEST_CASE("thm21 first regime, both readings") {
    // n = 100, L = 1, q = 2. LemmaConsistent: 10/53 - 1 and 10*40 + 2.
    auto lc = thm21_envelopes(100, Q(1), Q(2), kC21, Reading::LemmaConsistent);
    CHECK(lc.first.contains(Q(10, 53) - 1));
    CHECK(lc.second.contains(Q(402)));
    // AsPrinted: 10*53 - 1 = 529 and 10/40 + 2 = 9/4.
    auto ap = thm21_envelopes(100, Q(1), Q(2), kC21, Reading::AsPrinted);
    CHECK(ap.first.contains(Q(529)));
    CHECK(ap.second.contains(Q(9, 4)));
}

TEST_CASE("thm21 second regime and boundary") {
    // n = 100, L = 1/4: (2/7) sqrt(100 ln 4) = 3.36401..., upper 157.0627...
    auto env = thm21_envelopes(100, Q(1, 4), Q(2), kC21, Reading::LemmaConsistent);
    check_between(env.first, Q(336402, 100000), Q(336403, 100000));
    check_between(env.second, Q(157063, 1000), Q(157064, 1000));
    // L = 1/2 sits in the closed second regime: (2/7) sqrt(100 ln 2) = 2.3787...
    auto b = thm21_envelopes(100, Q(1, 2), Q(2), kC21, Reading::AsPrinted);
    check_between(b.first, Q(23787, 10000), Q(23788, 10000));
}

TEST_CASE("thm22 envelopes") {
    auto e1 = thm22_envelopes(100, Q(1), kC22, Reading::LemmaConsistent);
    CHECK(e1.first.contains(Q(-1)));
    CHECK(e1.second.contains(Q(1)));

    auto e2 = thm22_envelopes(100, Q(3, 2), kC22, Reading::LemmaConsistent);
    CHECK(e2.first.contains(Q(0)));
    CHECK(e2.second.contains(Q(0)));
    CHECK(e2.second.rad() == 0.0);

    // n = 1000, L = 1/2: lower 7.52220..., upper 346.260...
    auto e3 = thm22_envelopes(1000, Q(1, 2), kC22, Reading::LemmaConsistent);
    check_between(e3.first, Q(75221, 10000), Q(75222, 10000));
    check_between(e3.second, Q(346259, 1000), Q(346260, 1000));

    // L in (1/2, 1]: lower (1/5) sqrt(n(1-L)) - 1.
    auto e4 = thm22_envelopes(100, Q(3, 4), kC22, Reading::LemmaConsistent);
    CHECK(e4.first.contains(Q(0)));   // sqrt(25)/5 - 1 = 0 exactly
    CHECK(e4.second.contains(Q(6)));  // sqrt(25) + 1
}

TEST_CASE("lemma39 degree bound") {
    auto b1 = lemma39_degree_bound(100, Q(1), Q(2));
    CHECK(b1.contains(Q(402)));
    // K = 2: 13 sqrt(100 ln 2) + 4 = 112.2322...
    auto b2 = lemma39_degree_bound(100, Q(2), Q(2));
    check_between(b2, Q(112232, 1000), Q(112233, 1000));
    // Huge K: the min clamps at n, 13*100 + 4.
    auto b3 = lemma39_degree_bound(100, pow_rational(Q(2), 300), Q(2));
    CHECK(b3.contains(Q(1304)));
}

TEST_CASE("lemma310 degree bound") {
    // n = 10, K = 3/2: sqrt(2.5) + 1 = 2.58113...
    auto b1 = lemma310_degree_bound(10, Q(3, 2));
    check_between(b1, Q(258113, 100000), Q(258114, 100000));
    // consistent with the built Chebyshev witness degree m = 2
    CHECK(b1.definitely_gt(Q(2)));
    // n = 3, K = 3/2: 1.86602...
    auto b2 = lemma310_degree_bound(3, Q(3, 2));
    check_between(b2, Q(186602, 100000), Q(186603, 100000));
    CHECK(b2.definitely_gt(Q(1)));
    // K = 2 crosses into the log branch.
    auto b3 = lemma310_degree_bound(10, Q(2));
    check_between(b3, Q(38225, 1000), Q(38226, 1000));
    CHECK_THROWS_AS(lemma310_degree_bound(10, Q(1)), std::invalid_argument);
}

TEST_CASE("verify_grid: empty config gives empty report") {
    GridConfig cfg;
    auto recs = verify_grid(cfg);
    CHECK(recs.empty());
    CHECK(summarize(recs).cells == 0);
}

TEST_CASE("verify_grid single cells") {
    GridConfig cfg;
    cfg.ns = {10};
    cfg.Ls = {Q(1)};
    cfg.pairs = {{NormExponent::two(), NormExponent::two()}};
    auto recs = verify_grid(cfg);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].sandwich_ok == Cmp::True);
    CHECK(recs[0].status == "ok");

    GridConfig cfg2;
    cfg2.ns = {10};
    cfg2.Ls = {Q(3, 2)};
    cfg2.pairs = {{NormExponent::one(), NormExponent::infinity()}};
    auto recs2 = verify_grid(cfg2);
    REQUIRE(recs2.size() == 1);
    CHECK(recs2[0].kappa == 0);
    CHECK(recs2[0].mu == 0);
    CHECK(recs2[0].lower_ok == Cmp::True);
    CHECK(recs2[0].upper_ok == Cmp::True);
    CHECK(recs2[0].sandwich_ok == Cmp::True);
}

TEST_CASE("envelopes are monotone in L within a regime and ordered") {
    // Second regime, decreasing -log L as L grows.
    auto a = thm21_envelopes(16, Q(1, 4), Q(2), kC21, Reading::LemmaConsistent);
    auto b = thm21_envelopes(16, Q(1, 3), Q(2), kC21, Reading::LemmaConsistent);
    auto c = thm21_envelopes(16, Q(1, 2), Q(2), kC21, Reading::LemmaConsistent);
    CHECK_FALSE(a.first.definitely_lt(b.first));
    CHECK_FALSE(b.first.definitely_lt(c.first));
    CHECK_FALSE(a.second.definitely_lt(b.second));
    // First regime, LemmaConsistent.
    auto d = thm21_envelopes(16, Q(2, 3), Q(2), kC21, Reading::LemmaConsistent);
    auto e = thm21_envelopes(16, Q(1), Q(2), kC21, Reading::LemmaConsistent);
    auto f = thm21_envelopes(16, Q(3, 2), Q(2), kC21, Reading::LemmaConsistent);
    CHECK_FALSE(d.first.definitely_lt(e.first));
    CHECK_FALSE(e.first.definitely_lt(f.first));
    CHECK_FALSE(d.second.definitely_lt(e.second));
    CHECK_FALSE(e.second.definitely_lt(f.second));
    // lower <= upper in both regimes under the LemmaConsistent reading.
    for (const auto& env : {a, b, c, d, e, f}) CHECK_FALSE(env.second.definitely_lt(env.first));
}

TEST_CASE("csv writer shape and determinism") {
    GridConfig cfg;
    cfg.ns = {4, 5};
    cfg.Ls = {Q(1), Q(3, 2)};
    cfg.pairs = {{NormExponent::one(), NormExponent::infinity()},
                 {NormExponent::two(), NormExponent::two()}};
    auto recs = verify_grid(cfg);
    REQUIRE(recs.size() == 8);
    std::ostringstream s1, s2;
    write_verify_csv(recs, s1, true, "T");
    write_verify_csv(recs, s2, true, "T");
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().rfind("n,L_num,L_den,p,q,kappa,mu,", 0) == 0);
    std::ostringstream s3;
    write_verify_csv(recs, s3, false, "2000-01-01T00:00:00Z");
    CHECK(s3.str().rfind("# generated 2000-01-01T00:00:00Z", 0) == 0);
}

TEST_CASE("parallel grid matches serial grid") {
    GridConfig cfg;
    cfg.ns = {3, 4, 5, 6};
    cfg.Ls = {Q(1, 2), Q(1)};
    cfg.pairs = {{NormExponent::two(), NormExponent::two()}};
    auto serial = verify_grid(cfg);
    cfg.threads = 4;
    auto parallel = verify_grid(cfg);
    REQUIRE(serial.size() == parallel.size());
    std::ostringstream a, b;
    write_verify_csv(serial, a, true, "");
    write_verify_csv(parallel, b, true, "");
    CHECK(a.str() == b.str());
}

TEST_CASE("run config parsing") {
    std::istringstream in(
        "mode=exact\n"
        "# comment\n"
        "n=2..4,10\n"
        "L=1/4,1,3/2\n"
        "pairs=1:inf,2:2,inf:1\n"
        "reading=lemma\n"
        "threads=2\n"
        "reproducible=true\n");
    RunConfig cfg = parse_run_config(in);
    CHECK(cfg.ns == std::vector<long>{2, 3, 4, 10});
    CHECK(cfg.Ls.size() == 3);
    CHECK(cfg.pairs.size() == 3);
    CHECK(cfg.reading == Reading::LemmaConsistent);
    CHECK(cfg.threads == 2);
    CHECK(cfg.reproducible);

    std::istringstream bad1("L=0\n");
    CHECK_THROWS_AS(parse_run_config(bad1), std::invalid_argument);
    std::istringstream bad2("frobnicate=1\n");
    CHECK_THROWS_AS(parse_run_config(bad2), std::invalid_argument);
    std::istringstream bad3("pairs=2:3\n");
    CHECK_THROWS_AS(parse_run_config(bad3), std::invalid_argument);
    std::istringstream bad4("mode=exact\npairs=3/2:3\n");
    CHECK_THROWS_AS(parse_run_config(bad4), std::invalid_argument);
    std::istringstream ok_float("mode=float\npairs=3/2:3\nn=3\nL=1\n");
    CHECK(parse_run_config(ok_float).pairs.size() == 1);
}
