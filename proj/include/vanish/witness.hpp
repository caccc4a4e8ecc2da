#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vanish/poly.hpp"

namespace vanish {

/// One checkable statement about a polynomial. Every claim can be re-derived
/// from the raw coefficients alone; nothing here is trusted state.
struct Claim {
    enum class Kind {
        DegreeEq,          // degree == n_value
        DegreeLe,          // degree <= n_value
        ConstantCoeffEq,   // coeff 0 == q_value
        MultiplicityGe,    // multiplicity at 1 >= n_value
        TailNormLe,        // tail p-norm <= q_value; squared: q_value is the squared budget (p = 2)
        TailNormScaledLe,  // tail p-norm <= q_value * m_value^(1/p), general p via enclosure
        CoeffRatioGe,      // |a_0| >= q_value * tail p-norm
        AbsValuesLe,       // |P(j)| <= q_value for j = n_from..n_to
        ValuesZero,        // P(j) == 0 for j = n_from..n_to
        ValueAt0Gt,        // P(0) > q_value
        HmCoeffBounds,     // |coeff(k^2)| <= 4/|k^2-2| for k = 1..n_value, |coeff(2)| <= 8
    };

    Kind kind;
    long n_value = 0;
    long n_from = 0, n_to = 0;
    long m_value = 0;
    Rational q_value;
    NormExponent p;
    bool squared = false;

    static Claim degree_eq(long d) { return {Kind::DegreeEq, d, 0, 0, 0, {}, {}, false}; }
    static Claim degree_le(long d) { return {Kind::DegreeLe, d, 0, 0, 0, {}, {}, false}; }
    static Claim constant_coeff_eq(Rational v) {
        return {Kind::ConstantCoeffEq, 0, 0, 0, 0, std::move(v), {}, false};
    }
    static Claim multiplicity_ge(long k) { return {Kind::MultiplicityGe, k, 0, 0, 0, {}, {}, false}; }
    static Claim tail_norm_le(NormExponent p, Rational budget, bool squared_budget) {
        return {Kind::TailNormLe, 0, 0, 0, 0, std::move(budget), p, squared_budget};
    }
    static Claim tail_norm_le_scaled(NormExponent p, Rational base, long m) {
        return {Kind::TailNormScaledLe, 0, 0, 0, m, std::move(base), p, false};
    }
    static Claim coeff_ratio_ge(NormExponent p, Rational l) {
        return {Kind::CoeffRatioGe, 0, 0, 0, 0, std::move(l), p, false};
    }
    static Claim abs_values_le(long from, long to, Rational bound) {
        return {Kind::AbsValuesLe, 0, from, to, 0, std::move(bound), {}, false};
    }
    static Claim values_zero(long from, long to) { return {Kind::ValuesZero, 0, from, to, 0, {}, {}, false}; }
    static Claim value_at0_gt(Rational v) { return {Kind::ValueAt0Gt, 0, 0, 0, 0, std::move(v), {}, false}; }
    static Claim hm_coeff_bounds(long m) { return {Kind::HmCoeffBounds, m, 0, 0, 0, {}, {}, false}; }
};

/// Re-derive one claim from the coefficients. Exact wherever the claim is
/// rational; general-p norm claims go through certified enclosures.
inline Cmp verify_claim(const Poly& poly, const Claim& c, mpfr_prec_t prec = 192) {
    using K = Claim::Kind;
    auto as_cmp = [](bool b) { return b ? Cmp::True : Cmp::False; };
    switch (c.kind) {
        case K::DegreeEq:
            return as_cmp(poly.degree() == c.n_value);
        case K::DegreeLe:
            return as_cmp(poly.degree() <= c.n_value);
        case K::ConstantCoeffEq:
            return as_cmp(poly.coeff(0) == c.q_value);
        case K::MultiplicityGe:
            if (c.n_value <= 0) return Cmp::True;
            if (poly.is_zero()) return Cmp::False;
            return as_cmp(poly.multiplicity_at_one() >= c.n_value);
        case K::TailNormLe: {
            NormValue nv = poly.tail_norm(c.p, prec);
            if (c.squared) {
                if (!nv.is_squared()) return Cmp::False;
                return as_cmp(nv.value <= c.q_value);
            }
            return nv.le(c.q_value);
        }
        case K::TailNormScaledLe: {
            if (!c.p.is_general()) return Cmp::False;
            // sum |a_j|^p <= base^p * M, both sides as enclosures.
            return decide_widening(
                [&](mpfr_prec_t pr) {
                    Interval lhs(pr);
                    for (std::size_t j = 1; j <= static_cast<std::size_t>(std::max<long>(poly.degree(), 0)); ++j) {
                        Rational a = boost::multiprecision::abs(poly.coeff(j));
                        if (a == 0) continue;
                        lhs = lhs + Interval::from_rational(a, pr).pow(c.p.value, pr);
                    }
                    Interval rhs = Interval::from_rational(c.q_value, pr).pow(c.p.value, pr) *
                                   Interval::from_int(c.m_value, pr);
                    if (lhs.definitely_le(rhs)) return Cmp::True;
                    if (rhs.definitely_lt(lhs)) return Cmp::False;
                    return Cmp::Undecided;
                },
                prec);
        }
        case K::CoeffRatioGe: {
            NormValue nv = poly.tail_norm(c.p, prec);
            Rational a0 = boost::multiprecision::abs(poly.coeff(0));
            return nv.dominates(a0, c.q_value);
        }
        case K::AbsValuesLe: {
            for (long j = c.n_from; j <= c.n_to; ++j) {
                Rational v = poly.eval(Rational(j));
                if (boost::multiprecision::abs(v) > c.q_value) return Cmp::False;
            }
            return Cmp::True;
        }
        case K::ValuesZero: {
            for (long j = c.n_from; j <= c.n_to; ++j)
                if (poly.eval(Rational(j)) != 0) return Cmp::False;
            return Cmp::True;
        }
        case K::ValueAt0Gt:
            return as_cmp(poly.coeff(0) > c.q_value);
        case K::HmCoeffBounds: {
            for (long k = 1; k <= c.n_value; ++k) {
                Rational ck = poly.coeff(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
                Rational cap = Rational(4) / boost::multiprecision::abs(Rational(k * k - 2));
                if (boost::multiprecision::abs(ck) > cap) return Cmp::False;
            }
            if (boost::multiprecision::abs(poly.coeff(2)) > 8) return Cmp::False;
            return Cmp::True;
        }
    }
    throw std::logic_error("bad claim kind");
}

/// A constructed polynomial plus its certified claims. `verified` is filled
/// only by re-deriving every claim from `poly`; builders never copy their own
/// intent into it.
struct Witness {
    std::string construction;
    std::map<std::string, std::string> params;
    Poly poly;
    std::vector<Claim> claims;
    std::vector<Cmp> verified;
    long observed_multiplicity = 0;
    bool vacuous = false;

    bool all_verified() const {
        for (auto v : verified)
            if (v != Cmp::True) return false;
        return verified.size() == claims.size();
    }
    bool any_undecided() const {
        for (auto v : verified)
            if (v == Cmp::Undecided) return true;
        return false;
    }
    long claimed_multiplicity() const {
        long k = 0;
        for (const auto& c : claims)
            if (c.kind == Claim::Kind::MultiplicityGe) k = std::max(k, c.n_value);
        return k;
    }
};

/// Recompute every verification flag and the observed multiplicity.
inline void certify_witness(Witness& w, mpfr_prec_t prec = 192) {
    w.verified.clear();
    w.verified.reserve(w.claims.size());
    for (const auto& c : w.claims) w.verified.push_back(verify_claim(w.poly, c, prec));
    w.observed_multiplicity = w.poly.is_zero() ? 0 : w.poly.multiplicity_at_one();
}

}  // namespace vanish
