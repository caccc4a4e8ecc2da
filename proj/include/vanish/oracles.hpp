#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

#include "vanish/affine.hpp"
#include "vanish/irls.hpp"
#include "vanish/poly.hpp"

namespace vanish {

/// Affine parameterization of the two convex reductions.
/// tau(n,k): P = (x-1)^k R with P(0) = 1; rows are tail coefficients a_1..a_n,
/// columns the free coefficients r_1..r_{n-k} of R.
/// rho(n,k): Q = 1 + b_1 x + ... + b_k x^k; rows are values Q(1)..Q(n).
struct AffineInstance {
    Mat map;
    Vec fixed;
};

inline AffineInstance tau_instance(long n, long k) {
    Poly base = Poly::x_minus_one().pow(static_cast<unsigned long>(k));
    AffineInstance inst;
    inst.fixed.assign(static_cast<std::size_t>(n), Rational(0));
    const Rational r0 = k % 2 == 0 ? Rational(1) : Rational(-1);  // (-1)^k
    for (long j = 1; j <= n; ++j)
        inst.fixed[static_cast<std::size_t>(j - 1)] = r0 * base.coeff(static_cast<std::size_t>(j));
    inst.map.assign(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n - k), Rational(0)));
    for (long i = 1; i <= n - k; ++i)
        for (long j = 1; j <= n; ++j)
            if (j >= i) inst.map[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] =
                base.coeff(static_cast<std::size_t>(j - i));
    return inst;
}

inline AffineInstance rho_instance(long n, long k) {
    AffineInstance inst;
    inst.fixed.assign(static_cast<std::size_t>(n), Rational(1));
    inst.map.assign(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(k), Rational(0)));
    for (long j = 1; j <= n; ++j) {
        Rational pw(1);
        for (long i = 1; i <= k; ++i) {
            pw *= j;
            inst.map[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = pw;
        }
    }
    return inst;
}

inline Poly tau_argmin_poly(long n, long k, const Vec& y) {
    std::vector<Rational> r(static_cast<std::size_t>(n - k) + 1, Rational(0));
    r[0] = k % 2 == 0 ? Rational(1) : Rational(-1);
    for (std::size_t i = 0; i < y.size(); ++i) r[i + 1] = y[i];
    return Poly::x_minus_one().pow(static_cast<unsigned long>(k)) * Poly(std::move(r));
}

inline Poly rho_argmin_poly(const Vec& y) {
    std::vector<Rational> c(y.size() + 1, Rational(0));
    c[0] = 1;
    for (std::size_t i = 0; i < y.size(); ++i) c[i + 1] = y[i];
    return Poly(std::move(c));
}

struct OracleResult {
    enum class Kind { Tau, Rho };
    enum class Solver { ExactLP, ExactLS, FloatIRLS };
    Kind kind = Kind::Tau;
    long n = 0, k = 0;
    NormExponent exponent;
    NormValue value;
    Poly argmin;
    Solver solver = Solver::ExactLP;
    double float_residual = 0;  // IRLS convergence residual when solver is FloatIRLS
};

namespace detail {

/// Rigorous lower bound for tau_p(n, k): any Q in P_{k-1} gives
/// tau >= |Q(0)| / ||(Q(1..n))||_q via the orthogonality + Hoelder step.
inline Interval tau_dual_lower(long n, long k, const NormExponent& p, mpfr_prec_t prec) {
    NormExponent q = p.conjugate();
    AffineInstance dual = rho_instance(n, k - 1);
    IrlsResult ir = min_lp_float(dual.map, dual.fixed, q.finite_value());
    Vec qv = rationalize_irls_point(dual.map, dual.fixed, ir.y);
    NormValue qn = vec_norm(qv, q, prec);
    Interval qn_enc = qn.kind == NormValue::Kind::Enclosure
                          ? qn.enc
                          : Interval::from_rational(qn.value, prec);
    if (qn.is_squared()) qn_enc = qn_enc.sqrt();
    return Interval::from_int(1, prec) / qn_enc;  // Q(0) = 1 by construction
}

/// Rigorous lower bound for rho_q(n, k): any feasible P of the tau(n, k+1)
/// problem gives rho >= 1 / ||tail(P)||_p.
inline Interval rho_dual_lower(long n, long k, const NormExponent& q, mpfr_prec_t prec) {
    NormExponent p = q.conjugate();
    AffineInstance dual = tau_instance(n, k + 1);
    IrlsResult ir = min_lp_float(dual.map, dual.fixed, p.finite_value());
    Vec yq(ir.y.size());
    for (std::size_t i = 0; i < ir.y.size(); ++i) yq[i] = Rational(ir.y[i]);
    Poly pcand = tau_argmin_poly(n, k + 1, yq);
    NormValue tn = pcand.tail_norm(p, prec);
    Interval tn_enc = tn.kind == NormValue::Kind::Enclosure
                          ? tn.enc
                          : Interval::from_rational(tn.value, prec);
    if (tn.is_squared()) tn_enc = tn_enc.sqrt();
    return Interval::from_int(1, prec) / tn_enc;
}

}  // namespace detail

/// Minimal tail p-norm over {P : P(0) = 1, (x-1)^k | P, deg <= n}.
/// Exact for p in {1, 2, inf}; a certified duality-gap enclosure for
/// general p. The argmin is re-certified against the defining constraints.
inline OracleResult tau(long n, long k, const NormExponent& p, mpfr_prec_t prec = 192) {
    if (n < 1) throw std::invalid_argument("tau: n must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("tau: k must lie in [0, n]");
    OracleResult out;
    out.kind = OracleResult::Kind::Tau;
    out.n = n;
    out.k = k;
    out.exponent = p;
    if (k == 0) {
        out.argmin = Poly::constant(Rational(1));
        out.value = p.is_two() ? NormValue::exact_squared(Rational(0), p)
                               : (p.is_general() ? NormValue::enclosure(Interval(prec), p)
                                                 : NormValue::exact(Rational(0), p));
        out.solver = p.is_two() ? OracleResult::Solver::ExactLS : OracleResult::Solver::ExactLP;
        return out;
    }
    AffineInstance inst = tau_instance(n, k);
    switch (p.tag) {
        case NormExponent::Tag::One: {
            auto r = min_affine_l1(inst.map, inst.fixed);
            out.value = NormValue::exact(r.value, p);
            out.argmin = tau_argmin_poly(n, k, r.y);
            out.solver = OracleResult::Solver::ExactLP;
            break;
        }
        case NormExponent::Tag::Infinity: {
            auto r = min_affine_linf(inst.map, inst.fixed);
            out.value = NormValue::exact(r.value, p);
            out.argmin = tau_argmin_poly(n, k, r.y);
            out.solver = OracleResult::Solver::ExactLP;
            break;
        }
        case NormExponent::Tag::Two: {
            auto r = min_l2sq_affine(inst.map, inst.fixed);
            out.value = NormValue::exact_squared(r.sq_value, p);
            out.argmin = tau_argmin_poly(n, k, r.y);
            out.solver = OracleResult::Solver::ExactLS;
            break;
        }
        case NormExponent::Tag::General: {
            IrlsResult ir = min_lp_float(inst.map, inst.fixed, p.value);
            Vec yq(ir.y.size());
            for (std::size_t i = 0; i < ir.y.size(); ++i) yq[i] = Rational(ir.y[i]);
            out.argmin = tau_argmin_poly(n, k, yq);
            NormValue up = out.argmin.tail_norm(p, prec);
            if (k == n) {
                // Unique feasible point: its norm enclosure is the value.
                out.value = up;
            } else {
                Interval lower = detail::tau_dual_lower(n, k, p, prec);
                out.value = NormValue::enclosure(Interval::span(lower, up.enc), p);
            }
            out.solver = OracleResult::Solver::FloatIRLS;
            out.float_residual = ir.residual;
            break;
        }
    }
    // Re-certify the argmin independent of the solver path.
    if (out.argmin.coeff(0) != 1) throw std::logic_error("tau argmin: constant term != 1");
    if (out.argmin.multiplicity_at_one() < k) throw std::logic_error("tau argmin: vanishing order too small");
    if (out.value.kind == NormValue::Kind::Exact && out.argmin.tail_norm(p, prec).value != out.value.value)
        throw std::logic_error("tau argmin: stated value not attained");
    if (out.value.kind == NormValue::Kind::ExactSquared &&
        out.argmin.tail_norm(p, prec).value != out.value.value)
        throw std::logic_error("tau argmin: stated squared value not attained");
    return out;
}

/// Minimal q-norm of (Q(1), ..., Q(n)) over {Q : Q(0) = 1, deg <= k}.
/// k >= n is served exactly by the normalized vanishing product.
inline OracleResult rho(long n, long k, const NormExponent& q, mpfr_prec_t prec = 192) {
    if (n < 1) throw std::invalid_argument("rho: n must be >= 1");
    if (k < 0) throw std::invalid_argument("rho: k must be >= 0");
    OracleResult out;
    out.kind = OracleResult::Kind::Rho;
    out.n = n;
    out.k = k;
    out.exponent = q;
    if (k >= n) {
        Poly f = Poly::constant(Rational(1));
        for (long j = 1; j <= n; ++j) f = f * Poly{Rational(-j), Rational(1)};
        out.argmin = f * (1 / f.coeff(0));
        out.value = q.is_two() ? NormValue::exact_squared(Rational(0), q)
                               : (q.is_general() ? NormValue::enclosure(Interval(prec), q)
                                                 : NormValue::exact(Rational(0), q));
        out.solver = q.is_two() ? OracleResult::Solver::ExactLS : OracleResult::Solver::ExactLP;
        return out;
    }
    AffineInstance inst = rho_instance(n, k);
    switch (q.tag) {
        case NormExponent::Tag::One: {
            auto r = min_affine_l1(inst.map, inst.fixed);
            out.value = NormValue::exact(r.value, q);
            out.argmin = rho_argmin_poly(r.y);
            out.solver = OracleResult::Solver::ExactLP;
            break;
        }
        case NormExponent::Tag::Infinity: {
            auto r = min_affine_linf(inst.map, inst.fixed);
            out.value = NormValue::exact(r.value, q);
            out.argmin = rho_argmin_poly(r.y);
            out.solver = OracleResult::Solver::ExactLP;
            break;
        }
        case NormExponent::Tag::Two: {
            auto r = min_l2sq_affine(inst.map, inst.fixed);
            out.value = NormValue::exact_squared(r.sq_value, q);
            out.argmin = rho_argmin_poly(r.y);
            out.solver = OracleResult::Solver::ExactLS;
            break;
        }
        case NormExponent::Tag::General: {
            IrlsResult ir = min_lp_float(inst.map, inst.fixed, q.value);
            Vec yq(ir.y.size());
            for (std::size_t i = 0; i < ir.y.size(); ++i) yq[i] = Rational(ir.y[i]);
            out.argmin = rho_argmin_poly(yq);
            NormValue up = vec_norm(out.argmin.values_on(1, n), q, prec);
            Interval lower = detail::rho_dual_lower(n, k, q, prec);
            out.value = NormValue::enclosure(Interval::span(lower, up.enc), q);
            out.solver = OracleResult::Solver::FloatIRLS;
            out.float_residual = ir.residual;
            break;
        }
    }
    if (out.argmin.coeff(0) != 1) throw std::logic_error("rho argmin: Q(0) != 1");
    if (out.argmin.degree() > k) throw std::logic_error("rho argmin: degree too large");
    if (out.value.kind == NormValue::Kind::Exact &&
        vec_norm(out.argmin.values_on(1, n), q, prec).value != out.value.value)
        throw std::logic_error("rho argmin: stated value not attained");
    if (out.value.kind == NormValue::Kind::ExactSquared &&
        vec_norm(out.argmin.values_on(1, n), q, prec).value != out.value.value)
        throw std::logic_error("rho argmin: stated squared value not attained");
    return out;
}

/// Thread-safe memo table for oracle calls, keyed by (kind, n, k, exponent).
class OracleCache {
  public:
    OracleResult tau(long n, long k, const NormExponent& p, mpfr_prec_t prec = 192) {
        return get(OracleResult::Kind::Tau, n, k, p, prec);
    }
    OracleResult rho(long n, long k, const NormExponent& q, mpfr_prec_t prec = 192) {
        return get(OracleResult::Kind::Rho, n, k, q, prec);
    }

  private:
    OracleResult get(OracleResult::Kind kind, long n, long k, const NormExponent& e, mpfr_prec_t prec) {
        Key key{kind == OracleResult::Kind::Tau ? 0 : 1, n, k, e.str()};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = m_.find(key);
            if (it != m_.end()) return it->second;
        }
        OracleResult r = kind == OracleResult::Kind::Tau ? vanish::tau(n, k, e, prec)
                                                         : vanish::rho(n, k, e, prec);
        std::lock_guard<std::mutex> lock(mu_);
        return m_.emplace(std::move(key), std::move(r)).first->second;
    }
    using Key = std::tuple<int, long, long, std::string>;
    std::map<Key, OracleResult> m_;
    std::mutex mu_;
};

struct ExtremalResult {
    enum class Kind { Kappa, Mu };
    Kind kind = Kind::Kappa;
    long n = 0;
    Rational L;
    NormExponent exponent;
    long value = 0;
    bool undecided = false;
    Poly witness;
};

/// kappa_p(n, L) = max{k in [0, n] : tau_p(n,k) <= 1/L}, scanned linearly
/// (the scan doubles as a monotonicity audit). Comparisons exact; general-p
/// enclosures that straddle the threshold surface as `undecided`.
inline ExtremalResult kappa(long n, const Rational& L, const NormExponent& p,
                            OracleCache* cache = nullptr, mpfr_prec_t prec = 192) {
    if (n < 1) throw std::invalid_argument("kappa: n must be >= 1");
    if (L <= 0) throw std::invalid_argument("kappa: L must be > 0");
    ExtremalResult out;
    out.kind = ExtremalResult::Kind::Kappa;
    out.n = n;
    out.L = L;
    out.exponent = p;
    const Rational thr = 1 / L;
    OracleCache local;
    OracleCache& c = cache ? *cache : local;
    long best = -1;
    Poly best_witness;
    for (long k = 0; k <= n; ++k) {
        OracleResult t = c.tau(n, k, p, prec);
        Cmp cmp = t.value.le(thr);
        if (cmp == Cmp::Undecided) {
            // One sharper attempt before giving up.
            t = vanish::tau(n, k, p, prec * 4);
            cmp = t.value.le(thr);
        }
        if (cmp == Cmp::Undecided) {
            out.undecided = true;
            out.value = best < 0 ? 0 : best;
            out.witness = best_witness;
            return out;
        }
        if (cmp == Cmp::False) break;
        best = k;
        best_witness = t.argmin;
    }
    out.value = best;
    out.witness = best_witness;
    return out;
}

/// mu_q(n, L) = min{k >= 0 : rho_q(n,k) < L} (strict; the minimum is
/// attained). Always <= n since rho(n, n) = 0 < L.
inline ExtremalResult mu(long n, const Rational& L, const NormExponent& q,
                         OracleCache* cache = nullptr, mpfr_prec_t prec = 192) {
    if (n < 1) throw std::invalid_argument("mu: n must be >= 1");
    if (L <= 0) throw std::invalid_argument("mu: L must be > 0");
    ExtremalResult out;
    out.kind = ExtremalResult::Kind::Mu;
    out.n = n;
    out.L = L;
    out.exponent = q;
    OracleCache local;
    OracleCache& c = cache ? *cache : local;
    for (long k = 0; k <= n; ++k) {
        OracleResult r = c.rho(n, k, q, prec);
        Cmp cmp = r.value.lt(L);
        if (cmp == Cmp::Undecided) {
            r = vanish::rho(n, k, q, prec * 4);
            cmp = r.value.lt(L);
        }
        if (cmp == Cmp::Undecided) {
            out.undecided = true;
            out.value = k;
            out.witness = r.argmin;
            return out;
        }
        if (cmp == Cmp::True) {
            out.value = k;
            out.witness = r.argmin;
            return out;
        }
    }
    throw std::logic_error("mu: scan exceeded n, but rho(n, n) = 0 < L must hold");
}

/// Sampling + annealed local-move sanity bound for the same objectives, in
/// plain doubles with a fixed per-instance seed. Feasibility is built into the
/// parameterization, so the result can never undercut the exact optimum by
/// more than float evaluation noise.
inline double random_search_bound(OracleResult::Kind kind, long n, long k,
                                  const NormExponent& e, long trials) {
    AffineInstance inst = kind == OracleResult::Kind::Tau ? tau_instance(n, k) : rho_instance(n, k);
    const std::size_t m = inst.fixed.size();
    const std::size_t kk = inst.map.empty() ? 0 : inst.map[0].size();
    std::vector<std::vector<double>> a(m, std::vector<double>(kk));
    std::vector<double> f(m);
    for (std::size_t i = 0; i < m; ++i) {
        f[i] = static_cast<double>(inst.fixed[i]);
        for (std::size_t j = 0; j < kk; ++j) a[i][j] = static_cast<double>(inst.map[i][j]);
    }
    double pval = e.is_infinity() ? 0 : static_cast<double>(e.finite_value());
    auto objective = [&](const std::vector<double>& y) {
        double acc = 0;
        for (std::size_t i = 0; i < m; ++i) {
            double r = f[i];
            for (std::size_t j = 0; j < kk; ++j) r += a[i][j] * y[j];
            double ar = std::fabs(r);
            if (e.is_infinity())
                acc = std::max(acc, ar);
            else
                acc += std::pow(ar, pval);
        }
        return e.is_infinity() ? acc : std::pow(acc, 1.0 / pval);
    };
    std::seed_seq seq{static_cast<unsigned>(kind), static_cast<unsigned>(n),
                      static_cast<unsigned>(k), 0x9e3779b9u};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> best(kk, 0.0), cand(kk);
    double best_val = objective(best);
    for (long t = 0; t < trials; ++t) {
        double scale = std::pow(10.0, -3.0 * static_cast<double>(t) / std::max<long>(1, trials));
        for (std::size_t j = 0; j < kk; ++j) cand[j] = best[j] + scale * gauss(rng);
        double v = objective(cand);
        if (v < best_val) {
            best_val = v;
            best = cand;
        }
    }
    return best_val;
}

}  // namespace vanish
