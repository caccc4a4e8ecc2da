// vanish: construct and certify extremal vanishing-order witnesses, query the
// exact tau/rho/kappa/mu oracles, and run envelope verification grids.
//
// Exit codes: 0 verified, 1 claim/verification failure, 2 undecided,
// 3 usage or parameter error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "vanish/config.hpp"
#include "vanish/constructions.hpp"
#include "vanish/serialize.hpp"

namespace {

using namespace vanish;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 3;

int fail_usage(const std::string& msg) {
    json err;
    err["error"] = msg;
    std::cout << err.dump(2) << "\n";
    return kExitUsage;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << j.dump(2) << "\n";
}

long env_precision_bits() {
    // Optional override; never required.
    if (const char* s = std::getenv("VANISH_PRECISION_BITS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v >= 16 && v <= (1 << 22)) return v;
    }
    return 192;
}

struct ConstructArgs {
    std::string family;
    long n = 0, m = 0, M = 0;
    std::string L, p = "2", K;
    std::string out;
};

int run_construct(const ConstructArgs& a, long prec) {
    Witness w;
    if (a.family == "hm") {
        if (a.m < 1) return fail_usage("hm: --m must be >= 1");
        w = build_H_witness(a.m, prec);
    } else if (a.family == "lemma31") {
        if (a.n < 1 || a.M < 1) return fail_usage("lemma31: need --n >= 1 and --M >= 1");
        w = build_lemma31(a.n, a.M, NormExponent::parse(a.p), prec);
    } else if (a.family == "lemma32") {
        if (a.n < 1 || a.L.empty()) return fail_usage("lemma32: need --n >= 1 and --L");
        w = build_lemma32(a.n, parse_rational(a.L), NormExponent::parse(a.p), prec);
    } else if (a.family == "lemma33") {
        if (a.n < 1 || a.L.empty()) return fail_usage("lemma33: need --n >= 1 and --L");
        w = build_lemma33(a.n, parse_rational(a.L), NormExponent::parse(a.p), prec);
    } else if (a.family == "lemma34") {
        if (a.n < 2 || a.L.empty()) return fail_usage("lemma34: need --n >= 2 and --L");
        w = build_lemma34(a.n, parse_rational(a.L), prec);
    } else if (a.family == "cheb") {
        if (a.n < 1 || a.K.empty()) return fail_usage("cheb: need --n >= 1 and --K");
        w = build_cheb_witness(a.n, parse_rational(a.K), prec);
    } else if (a.family == "factorial") {
        if (a.n < 1) return fail_usage("factorial: need --n >= 1");
        w = build_factorial_witness(a.n, prec);
    } else {
        return fail_usage("unknown construction '" + a.family + "'");
    }
    emit(witness_to_json(w), a.out);
    if (w.vacuous || w.all_verified()) return kExitOk;
    return w.any_undecided() ? kExitUndecided : kExitClaimFailure;
}

struct OracleArgs {
    std::string which;
    long n = 0, k = -1;
    std::string L, p, q;
    std::string out;
};

int run_oracle(const OracleArgs& a, long prec) {
    if (a.which == "tau" || a.which == "rho") {
        if (a.n < 1 || a.k < 0) return fail_usage(a.which + ": need --n >= 1 and --k >= 0");
        std::string es = a.which == "tau" ? a.p : (a.q.empty() ? a.p : a.q);
        if (es.empty()) return fail_usage(a.which + ": need an exponent (--p or --q)");
        NormExponent e = NormExponent::parse(es);
        OracleResult r = a.which == "tau" ? tau(a.n, a.k, e, prec) : rho(a.n, a.k, e, prec);
        emit(oracle_result_to_json(r), a.out);
        return kExitOk;
    }
    if (a.which == "kappa" || a.which == "mu") {
        if (a.n < 1 || a.L.empty()) return fail_usage(a.which + ": need --n >= 1 and --L");
        std::string es = a.which == "kappa" ? a.p : (a.q.empty() ? a.p : a.q);
        if (es.empty()) return fail_usage(a.which + ": need an exponent (--p or --q)");
        NormExponent e = NormExponent::parse(es);
        Rational L = parse_rational(a.L);
        ExtremalResult r = a.which == "kappa" ? kappa(a.n, L, e, nullptr, prec) : mu(a.n, L, e, nullptr, prec);
        emit(extremal_to_json(r), a.out);
        return r.undecided ? kExitUndecided : kExitOk;
    }
    return fail_usage("unknown oracle '" + a.which + "'");
}

int run_verify(const std::string& config_path, bool reproducible_flag) {
    std::ifstream in(config_path);
    if (!in) return fail_usage("cannot read config file '" + config_path + "'");
    RunConfig cfg = parse_run_config(in);
    if (reproducible_flag) cfg.reproducible = true;

    OracleCache cache;
    std::vector<BoundRecord> recs = verify_grid(cfg.grid(), &cache);
    GridSummary summary = summarize(recs);

    std::string timestamp;
    {
        auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[64];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        timestamp = buf;
    }
    if (cfg.csv_path.empty()) {
        write_verify_csv(recs, std::cout, cfg.reproducible, timestamp);
    } else {
        std::ofstream f(cfg.csv_path);
        if (!f) return fail_usage("cannot open csv output '" + cfg.csv_path + "'");
        write_verify_csv(recs, f, cfg.reproducible, timestamp);
    }
    json sj = grid_summary_to_json(summary);
    if (cfg.summary_path.empty()) {
        std::cerr << sj.dump(2) << "\n";
    } else {
        std::ofstream f(cfg.summary_path);
        if (!f) return fail_usage("cannot open summary output '" + cfg.summary_path + "'");
        f << sj.dump(2) << "\n";
    }
    if (summary.sandwich_violations > 0) return kExitClaimFailure;
    if (summary.undecided > 0) return kExitUndecided;
    return kExitOk;
}

int run_certify(const std::string& witness_path, long prec) {
    std::ifstream in(witness_path);
    if (!in) return fail_usage("cannot read witness file '" + witness_path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        return fail_usage(std::string("malformed JSON: ") + e.what());
    }
    Witness w = witness_from_json(j);
    certify_witness(w, prec);
    json out = witness_to_json(w);
    out["all_verified"] = w.all_verified();
    if (w.claims.empty()) out["warning"] = "no claims present; vacuously certified";
    std::cout << out.dump(2) << "\n";
    if (w.claims.empty()) return kExitOk;
    if (w.all_verified()) return kExitOk;
    return w.any_undecided() ? kExitUndecided : kExitClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vanishing-order witnesses, oracles and envelope verification"};
    app.require_subcommand(1);
    long prec = env_precision_bits();
    app.add_option("--prec", prec, "working precision in bits for enclosures")->capture_default_str();

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "build and certify a witness polynomial");
    construct->add_option("family", ca.family, "hm|lemma31|lemma32|lemma33|lemma34|cheb|factorial")
        ->required();
    construct->add_option("--n", ca.n, "target degree budget");
    construct->add_option("--m", ca.m, "H_m index");
    construct->add_option("--M", ca.M, "square-free range bound");
    construct->add_option("--L", ca.L, "dominance parameter, num/den");
    construct->add_option("--p", ca.p, "norm exponent: 1, 2, inf or num/den");
    construct->add_option("--K", ca.K, "value-dominance parameter, num/den");
    construct->add_option("--out", ca.out, "write witness JSON here instead of stdout");

    OracleArgs oa;
    CLI::App* oracle = app.add_subcommand("oracle", "query the exact extremal oracles");
    oracle->add_option("which", oa.which, "tau|rho|kappa|mu")->required();
    oracle->add_option("--n", oa.n, "degree / sample budget")->required();
    oracle->add_option("--k", oa.k, "vanishing order (tau) or degree (rho)");
    oracle->add_option("--L", oa.L, "threshold, num/den");
    oracle->add_option("--p", oa.p, "norm exponent");
    oracle->add_option("--q", oa.q, "norm exponent (values side)");
    oracle->add_option("--out", oa.out, "write result JSON here instead of stdout");

    std::string config_path;
    bool reproducible = false;
    CLI::App* verify = app.add_subcommand("verify", "run an envelope verification grid");
    verify->add_option("--config", config_path, "key=value run configuration")->required();
    verify->add_flag("--reproducible", reproducible, "suppress the timestamp header line");

    std::string witness_path;
    CLI::App* certify = app.add_subcommand("certify", "re-certify a witness JSON file");
    certify->add_option("file", witness_path, "witness JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(ca, prec);
        if (oracle->parsed()) return run_oracle(oa, prec);
        if (verify->parsed()) return run_verify(config_path, reproducible);
        if (certify->parsed()) return run_certify(witness_path, prec);
    } catch (const std::invalid_argument& e) {
        return fail_usage(e.what());
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cout << err.dump(2) << "\n";
        return kExitUsage;
    }
    return fail_usage("no subcommand");
}
