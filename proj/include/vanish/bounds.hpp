#pragma once

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "vanish/duality.hpp"

namespace vanish {

/// Envelope constants. Defaults follow the two theorems' "appropriate
/// choices": (1/53, 40, 2/7, 13) for the conjugate-pair theorem and
/// (1/5, 1, 2/7, 13) for the l1/sup-norm theorem.
struct EnvelopeConstants {
    Rational c1, c2, c3, c4;
    static EnvelopeConstants conjugate_defaults() {
        return {Rational(1, 53), Rational(40), Rational(2, 7), Rational(13)};
    }
    static EnvelopeConstants l1_defaults() {
        return {Rational(1, 5), Rational(1), Rational(2, 7), Rational(13)};
    }
};

/// Two published forms of the first-regime envelopes. AsPrinted evaluates the
/// theorem display verbatim; LemmaConsistent evaluates the forms the witness
/// constructions and degree bounds actually deliver, i.e.
/// sqrt(n) (L/c1)^{-q/2} - 1 below and sqrt(n) (c2/L)^{q/2} + 2 above.
enum class Reading { AsPrinted, LemmaConsistent };

inline const char* reading_str(Reading r) {
    return r == Reading::AsPrinted ? "asprinted" : "lemma";
}

namespace detail {

inline Interval min_sqrt_nlog(long n, const Interval& log_arg, mpfr_prec_t prec) {
    Interval nI = Interval::from_int(n, prec);
    return (nI * log_arg).sqrt().min(nI);
}

}  // namespace detail

/// Envelopes for kappa_p / mu_q with conjugate p, q and finite q.
/// Regime split at L = 1/2 (the low side closed).
inline std::pair<Interval, Interval> thm21_envelopes(long n, const Rational& L, const Rational& q,
                                                     const EnvelopeConstants& c, Reading reading,
                                                     mpfr_prec_t prec = 192) {
    if (L <= 0) throw std::invalid_argument("thm21_envelopes: L must be > 0");
    if (q < 1) throw std::invalid_argument("thm21_envelopes: q must be >= 1");
    Interval sqrt_n = Interval::from_int(n, prec).sqrt();
    Interval one = Interval::from_int(1, prec);
    if (L > Rational(1, 2)) {
        Rational mql2 = -q / 2;
        Interval lower, upper;
        if (reading == Reading::AsPrinted) {
            lower = sqrt_n * Interval::from_rational(c.c1 * L, prec).pow(mql2, prec) - one;
            upper = sqrt_n * Interval::from_rational(c.c2 * L, prec).pow(mql2, prec) +
                    Interval::from_int(2, prec);
        } else {
            lower = sqrt_n * Interval::from_rational(L / c.c1, prec).pow(mql2, prec) - one;
            upper = sqrt_n * Interval::from_rational(c.c2 / L, prec).pow(q / 2, prec) +
                    Interval::from_int(2, prec);
        }
        return {lower, upper};
    }
    Interval mlog = Interval::from_rational(1 / L, prec).log();
    Interval core = detail::min_sqrt_nlog(n, mlog, prec);
    return {core * Interval::from_rational(c.c3, prec),
            core * Interval::from_rational(c.c4, prec) + Interval::from_int(4, prec)};
}

/// Envelopes for kappa_1 / mu_inf. Zero on both sides for L > 1;
/// sqrt(n(1-L)) scaling on (1/2, 1]; the common log regime on (0, 1/2].
inline std::pair<Interval, Interval> thm22_envelopes(long n, const Rational& L,
                                                     const EnvelopeConstants& c, Reading /*reading*/,
                                                     mpfr_prec_t prec = 192) {
    if (L <= 0) throw std::invalid_argument("thm22_envelopes: L must be > 0");
    if (L > 1) return {Interval(prec), Interval(prec)};  // exactly zero
    if (L > Rational(1, 2)) {
        Interval root = (Interval::from_int(n, prec) * Interval::from_rational(1 - L, prec)).sqrt();
        Interval lower = root * Interval::from_rational(c.c1, prec) - Interval::from_int(1, prec);
        Interval upper = root * Interval::from_rational(c.c2, prec) + Interval::from_int(1, prec);
        return {lower, upper};
    }
    Interval mlog = Interval::from_rational(1 / L, prec).log();
    Interval core = detail::min_sqrt_nlog(n, mlog, prec);
    return {core * Interval::from_rational(c.c3, prec),
            core * Interval::from_rational(c.c4, prec) + Interval::from_int(4, prec)};
}

/// Degree bound sufficient for |F(0)| > K ||(F(1..n))||_q:
/// sqrt(n) (40K)^{q/2} + 2 for K < 2, else 13 min{sqrt(n log K), n} + 4.
inline Interval lemma39_degree_bound(long n, const Rational& K, const Rational& q,
                                     mpfr_prec_t prec = 192) {
    if (K <= 0) throw std::invalid_argument("lemma39_degree_bound: K must be > 0");
    if (K < 2) {
        Interval sqrt_n = Interval::from_int(n, prec).sqrt();
        return sqrt_n * Interval::from_rational(40 * K, prec).pow(q / 2, prec) +
               Interval::from_int(2, prec);
    }
    Interval logK = Interval::from_rational(K, prec).log();
    return detail::min_sqrt_nlog(n, logK, prec) * Interval::from_int(13, prec) +
           Interval::from_int(4, prec);
}

/// Degree bound sufficient for |F(0)| > K max_j |F(j)|:
/// sqrt(n(K-1)/2) + 1 for 1 < K < 2, else the log form.
inline Interval lemma310_degree_bound(long n, const Rational& K, mpfr_prec_t prec = 192) {
    if (K <= 1) throw std::invalid_argument("lemma310_degree_bound: K must be > 1");
    if (K < 2) {
        return (Interval::from_int(n, prec) * Interval::from_rational((K - 1) / 2, prec)).sqrt() +
               Interval::from_int(1, prec);
    }
    Interval logK = Interval::from_rational(K, prec).log();
    return detail::min_sqrt_nlog(n, logK, prec) * Interval::from_int(13, prec) +
           Interval::from_int(4, prec);
}

struct GridConfig {
    std::vector<long> ns;
    std::vector<Rational> Ls;
    std::vector<std::pair<NormExponent, NormExponent>> pairs;  // conjugate (p, q)
    Reading reading = Reading::LemmaConsistent;
    long threads = 1;
    mpfr_prec_t prec = 192;
};

struct BoundRecord {
    long n = 0;
    Rational L;
    NormExponent p, q;
    long kappa = 0, mu = 0;
    bool kappa_undecided = false, mu_undecided = false;
    Interval lower_ap, upper_ap, lower_lc, upper_lc;
    Cmp lower_ok = Cmp::Undecided;   // configured reading: lower_env <= kappa
    Cmp upper_ok = Cmp::Undecided;   // configured reading: mu <= upper_env
    Cmp sandwich_ok = Cmp::Undecided;
    Cmp lower_ok_ap = Cmp::Undecided;  // AsPrinted flags, reported alongside
    Cmp upper_ok_ap = Cmp::Undecided;
    std::string status;  // ok | envelope_violation | sandwich_violation | undecided
};

namespace detail {

inline Cmp env_le_int(const Interval& e, long v) {
    if (e.definitely_le(Rational(v))) return Cmp::True;
    if (e.definitely_gt(Rational(v))) return Cmp::False;
    return Cmp::Undecided;
}
inline Cmp int_le_env(long v, const Interval& e) {
    if (e.definitely_ge(Rational(v))) return Cmp::True;
    if (e.definitely_lt(Rational(v))) return Cmp::False;
    return Cmp::Undecided;
}

inline BoundRecord run_cell(long n, const Rational& L, const NormExponent& p, const NormExponent& q,
                            const GridConfig& cfg, OracleCache& cache) {
    BoundRecord rec;
    rec.n = n;
    rec.L = L;
    rec.p = p;
    rec.q = q;
    ExtremalResult kp = kappa(n, L, p, &cache, cfg.prec);
    ExtremalResult mq = mu(n, L, q, &cache, cfg.prec);
    rec.kappa = kp.value;
    rec.mu = mq.value;
    rec.kappa_undecided = kp.undecided;
    rec.mu_undecided = mq.undecided;

    const bool l1_pair = p.is_one();
    EnvelopeConstants consts =
        l1_pair ? EnvelopeConstants::l1_defaults() : EnvelopeConstants::conjugate_defaults();
    auto eval_env = [&](Reading r) {
        return l1_pair ? thm22_envelopes(n, L, consts, r, cfg.prec)
                       : thm21_envelopes(n, L, q.finite_value(), consts, r, cfg.prec);
    };
    auto ap = eval_env(Reading::AsPrinted);
    auto lc = eval_env(Reading::LemmaConsistent);
    rec.lower_ap = ap.first;
    rec.upper_ap = ap.second;
    rec.lower_lc = lc.first;
    rec.upper_lc = lc.second;

    const auto& chosen = cfg.reading == Reading::AsPrinted ? ap : lc;
    if (!kp.undecided) {
        rec.lower_ok = env_le_int(chosen.first, kp.value);
        rec.lower_ok_ap = env_le_int(ap.first, kp.value);
    }
    if (!mq.undecided) {
        // mu <= n always, so clamping the envelope at n never changes the verdict.
        rec.upper_ok = int_le_env(mq.value, chosen.second);
        rec.upper_ok_ap = int_le_env(mq.value, ap.second);
    }
    if (!kp.undecided && !mq.undecided)
        rec.sandwich_ok = kp.value <= mq.value ? Cmp::True : Cmp::False;

    if (rec.sandwich_ok == Cmp::False)
        rec.status = "sandwich_violation";
    else if (rec.lower_ok == Cmp::False || rec.upper_ok == Cmp::False)
        rec.status = "envelope_violation";
    else if (kp.undecided || mq.undecided || rec.lower_ok == Cmp::Undecided ||
             rec.upper_ok == Cmp::Undecided || rec.sandwich_ok == Cmp::Undecided)
        rec.status = "undecided";
    else
        rec.status = "ok";
    return rec;
}

}  // namespace detail

/// Evaluate every (n, L, pair) cell: oracles, both envelope readings, flags.
/// Cells run independently (optional worker pool); output order is the
/// deterministic lexicographic cell order regardless of thread count.
inline std::vector<BoundRecord> verify_grid(const GridConfig& cfg, OracleCache* cache = nullptr) {
    struct Cell {
        long n;
        Rational L;
        NormExponent p, q;
    };
    std::vector<Cell> cells;
    for (long n : cfg.ns)
        for (const auto& L : cfg.Ls)
            for (const auto& [p, q] : cfg.pairs) cells.push_back({n, L, p, q});
    std::vector<BoundRecord> out(cells.size());
    OracleCache local;
    OracleCache& c = cache ? *cache : local;

    const long nthreads = std::max<long>(1, std::min<long>(cfg.threads, static_cast<long>(cells.size())));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out[i] = detail::run_cell(cells[i].n, cells[i].L, cells[i].p, cells[i].q, cfg, c);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (long t = 0; t < nthreads; ++t)
        workers.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                out[i] = detail::run_cell(cells[i].n, cells[i].L, cells[i].p, cells[i].q, cfg, c);
            }
        });
    for (auto& w : workers) w.join();
    return out;
}

struct GridSummary {
    long cells = 0, ok = 0, envelope_violations = 0, sandwich_violations = 0, undecided = 0;
    long asprinted_lower_violations = 0, asprinted_upper_violations = 0;
};

inline GridSummary summarize(const std::vector<BoundRecord>& recs) {
    GridSummary s;
    s.cells = static_cast<long>(recs.size());
    for (const auto& r : recs) {
        if (r.status == "ok") ++s.ok;
        else if (r.status == "envelope_violation") ++s.envelope_violations;
        else if (r.status == "sandwich_violation") ++s.sandwich_violations;
        else ++s.undecided;
        if (r.lower_ok_ap == Cmp::False) ++s.asprinted_lower_violations;
        if (r.upper_ok_ap == Cmp::False) ++s.asprinted_upper_violations;
    }
    return s;
}

inline const char* cmp_str(Cmp c) {
    switch (c) {
        case Cmp::True: return "true";
        case Cmp::False: return "false";
        case Cmp::Undecided: return "undecided";
    }
    return "?";
}

/// CSV report. Column set is part of the tool's interface; enclosures print
/// as midpoint±radius decimals. The timestamp header is suppressed in
/// reproducible mode so identical runs are byte-identical.
inline void write_verify_csv(const std::vector<BoundRecord>& recs, std::ostream& os,
                             bool reproducible, const std::string& timestamp) {
    if (!reproducible) os << "# generated " << timestamp << "\n";
    os << "n,L_num,L_den,p,q,kappa,mu,lower_asprinted,upper_asprinted,lower_lemma,upper_lemma,"
          "lower_ok,upper_ok,sandwich_ok,status\n";
    for (const auto& r : recs) {
        os << r.n << ',' << rat_num(r.L).str() << ',' << rat_den(r.L).str() << ',' << r.p.str()
           << ',' << r.q.str() << ',';
        if (r.kappa_undecided) os << "undecided";
        else os << r.kappa;
        os << ',';
        if (r.mu_undecided) os << "undecided";
        else os << r.mu;
        os << ',' << r.lower_ap.str() << ',' << r.upper_ap.str() << ',' << r.lower_lc.str() << ','
           << r.upper_lc.str() << ',' << cmp_str(r.lower_ok) << ',' << cmp_str(r.upper_ok) << ','
           << cmp_str(r.sandwich_ok) << ',' << r.status << '\n';
    }
}

}  // namespace vanish
