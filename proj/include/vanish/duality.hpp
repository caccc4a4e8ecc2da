#pragma once

#include "vanish/oracles.hpp"

namespace vanish {

/// Moment matrix of the divisibility test: row i (i = 0..k-1), column j
/// (j = 0..n), entry j^i with 0^0 = 1.
struct MomentSystem {
    long n = 0, k = 0;
    Mat rows;

    static MomentSystem build(long n, long k) {
        if (k < 1) throw std::invalid_argument("MomentSystem: k must be >= 1");
        MomentSystem s;
        s.n = n;
        s.k = k;
        s.rows.assign(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(n) + 1, Rational(0)));
        for (long j = 0; j <= n; ++j) {
            Rational pw(1);  // j^0, with 0^0 = 1
            for (long i = 0; i < k; ++i) {
                s.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pw;
                pw *= j;
            }
        }
        return s;
    }
};

/// (x-1)^k | P  iff  sum_j a_j j^i = 0 for i = 0..k-1 (monomials span the
/// degree-(k-1) test space). Exact integer arithmetic.
inline bool divisibility_via_moments(const Poly& p, long n, long k) {
    if (p.degree() > n) throw std::invalid_argument("divisibility_via_moments: degree exceeds n");
    if (k < 1) throw std::invalid_argument("divisibility_via_moments: k must be >= 1");
    MomentSystem s = MomentSystem::build(n, k);
    for (long i = 0; i < k; ++i) {
        Rational acc(0);
        for (long j = 0; j <= n; ++j)
            acc += p.coeff(static_cast<std::size_t>(j)) * s.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (acc != 0) return false;
    }
    return true;
}

/// The two-step comparison behind the kappa <= mu sandwich, on a concrete
/// pair (P, Q):  |sum_{j>=1} a_j Q(j)|  <=  ||tail(P)||_p ||(Q(1..n))||_q
///                                      <   |a_0 Q(0)|.
/// The first inequality is Hoelder and should always verify; the strict
/// second step is the witness-quality condition.
struct HolderCheck {
    Cmp dominance = Cmp::Undecided;  // |a_0| >= L ||tail||_p, context for the pair
    Cmp holder = Cmp::Undecided;     // |sum| <= product of norms
    Cmp strict = Cmp::Undecided;     // product < |a_0 Q(0)|
    bool passed() const { return holder == Cmp::True && strict == Cmp::True; }
};

inline HolderCheck holder_cross_check(const Poly& p, const NormExponent& pe, const Poly& q,
                                      long n, const Rational& L, mpfr_prec_t prec = 192) {
    NormExponent qe = pe.conjugate();
    HolderCheck out;

    Rational pairing(0);  // sum_{j=1}^n a_j Q(j)
    for (long j = 1; j <= n; ++j)
        pairing += p.coeff(static_cast<std::size_t>(j)) * q.eval(Rational(j));
    Rational abs_pairing = boost::multiprecision::abs(pairing);
    Rational rhs = boost::multiprecision::abs(p.coeff(0) * q.eval(Rational(0)));

    NormValue np = p.tail_norm(pe, prec);
    NormValue nq = vec_norm(q.values_on(1, n), qe, prec);
    out.dominance = np.dominates(boost::multiprecision::abs(p.coeff(0)), L);

    auto as_cmp = [](bool b) { return b ? Cmp::True : Cmp::False; };
    const bool p_exact = np.kind == NormValue::Kind::Exact;
    const bool q_exact = nq.kind == NormValue::Kind::Exact;
    if (p_exact && q_exact) {
        Rational prod = np.value * nq.value;
        out.holder = as_cmp(abs_pairing <= prod);
        out.strict = as_cmp(prod < rhs);
    } else if (np.is_squared() && nq.is_squared()) {
        Rational prod_sq = np.value * nq.value;
        out.holder = as_cmp(abs_pairing * abs_pairing <= prod_sq);
        out.strict = as_cmp(prod_sq < rhs * rhs);
    } else {
        auto to_enc = [&](const NormValue& v) {
            Interval e = v.kind == NormValue::Kind::Enclosure ? v.enc
                                                              : Interval::from_rational(v.value, prec);
            return v.is_squared() ? e.sqrt() : e;
        };
        Interval prod = to_enc(np) * to_enc(nq);
        out.holder = prod.definitely_ge(abs_pairing)
                         ? Cmp::True
                         : (prod.definitely_lt(abs_pairing) ? Cmp::False : Cmp::Undecided);
        out.strict = prod.cmp_lt(rhs);
    }
    return out;
}

/// tau_p(n,k) * rho_q(n,k-1) for conjugate exponents: exact value for
/// p in {1, inf}, exact squared product for p = 2. Weak duality says >= 1;
/// LP duality makes it exactly 1.
struct DualityProduct {
    bool squared = false;
    Rational value;
};

inline DualityProduct weak_duality_product(long n, long k, const NormExponent& p,
                                           OracleCache* cache = nullptr, mpfr_prec_t prec = 192) {
    if (k < 1 || k > n) throw std::invalid_argument("weak_duality_product: k must lie in [1, n]");
    if (p.is_general()) throw std::invalid_argument("weak_duality_product: exact exponents only");
    NormExponent q = p.conjugate();
    OracleCache local;
    OracleCache& c = cache ? *cache : local;
    OracleResult t = c.tau(n, k, p, prec);
    OracleResult r = c.rho(n, k - 1, q, prec);
    DualityProduct out;
    out.squared = p.is_two();
    out.value = t.value.value * r.value.value;
    return out;
}

}  // namespace vanish
