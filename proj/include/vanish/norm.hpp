#pragma once

#include <stdexcept>
#include <string>

#include "vanish/interval.hpp"
#include "vanish/rational.hpp"

namespace vanish {

/// Norm exponent p in [1, inf]. 1, 2 and inf get dedicated exact treatment;
/// everything else is General (rational, > 1) and handled by enclosures.
struct NormExponent {
    enum class Tag { One, Two, Infinity, General };
    Tag tag = Tag::Two;
    Rational value{2};  // meaningful for General only

    static NormExponent one() { return {Tag::One, Rational(1)}; }
    static NormExponent two() { return {Tag::Two, Rational(2)}; }
    static NormExponent infinity() { return {Tag::Infinity, Rational(0)}; }
    static NormExponent general(const Rational& p) {
        if (p <= 1) throw std::invalid_argument("General exponent must be > 1");
        if (p == 2) return two();
        return {Tag::General, p};
    }

    bool is_one() const { return tag == Tag::One; }
    bool is_two() const { return tag == Tag::Two; }
    bool is_infinity() const { return tag == Tag::Infinity; }
    bool is_general() const { return tag == Tag::General; }

    /// Finite rational value; only valid when tag != Infinity.
    Rational finite_value() const {
        switch (tag) {
            case Tag::One: return Rational(1);
            case Tag::Two: return Rational(2);
            case Tag::General: return value;
            case Tag::Infinity: break;
        }
        throw std::logic_error("finite_value of infinite exponent");
    }

    NormExponent conjugate() const {
        switch (tag) {
            case Tag::One: return infinity();
            case Tag::Two: return two();
            case Tag::Infinity: return one();
            case Tag::General: return general(value / (value - 1));
        }
        throw std::logic_error("bad NormExponent tag");
    }

    std::string str() const {
        switch (tag) {
            case Tag::One: return "1";
            case Tag::Two: return "2";
            case Tag::Infinity: return "inf";
            case Tag::General: return rational_str(value);
        }
        return "?";
    }

    static NormExponent parse(const std::string& s) {
        if (s == "inf" || s == "oo" || s == "infinity") return infinity();
        Rational p = parse_rational(s);
        if (p == 1) return one();
        if (p == 2) return two();
        return general(p);
    }

    friend bool operator==(const NormExponent& a, const NormExponent& b) {
        return a.tag == b.tag && (a.tag != Tag::General || a.value == b.value);
    }
};

/// A computed p-norm. Exact rationals where the norm is rational (p = 1, inf),
/// the exact *square* for p = 2, and a certified enclosure for general p.
struct NormValue {
    enum class Kind { Exact, ExactSquared, Enclosure };
    Kind kind = Kind::Exact;
    Rational value;    // Exact / ExactSquared
    Interval enc;      // Enclosure
    NormExponent p;

    static NormValue exact(const Rational& v, NormExponent p) { return {Kind::Exact, v, Interval(), p}; }
    static NormValue exact_squared(const Rational& v, NormExponent p) { return {Kind::ExactSquared, v, Interval(), p}; }
    static NormValue enclosure(Interval e, NormExponent p) { return {Kind::Enclosure, Rational(0), std::move(e), p}; }

    bool is_squared() const { return kind == Kind::ExactSquared; }

    /// norm <= budget, with budget an (unsquared) nonnegative rational.
    Cmp le(const Rational& budget) const {
        if (budget < 0) return Cmp::False;
        switch (kind) {
            case Kind::Exact: return value <= budget ? Cmp::True : Cmp::False;
            case Kind::ExactSquared: return value <= budget * budget ? Cmp::True : Cmp::False;
            case Kind::Enclosure: return enc.cmp_le(budget);
        }
        return Cmp::Undecided;
    }
    /// norm < budget (strict).
    Cmp lt(const Rational& budget) const {
        if (budget <= 0) return Cmp::False;
        switch (kind) {
            case Kind::Exact: return value < budget ? Cmp::True : Cmp::False;
            case Kind::ExactSquared: return value < budget * budget ? Cmp::True : Cmp::False;
            case Kind::Enclosure: return enc.cmp_lt(budget);
        }
        return Cmp::Undecided;
    }
    /// a >= L * norm, for a, L >= 0 rational (the coefficient-dominance test).
    Cmp dominates(const Rational& a, const Rational& L) const {
        switch (kind) {
            case Kind::Exact: return a >= L * value ? Cmp::True : Cmp::False;
            case Kind::ExactSquared: return a * a >= L * L * value ? Cmp::True : Cmp::False;
            case Kind::Enclosure: {
                if (L == 0) return Cmp::True;
                Cmp c = enc.cmp_le(a / L);
                return c;
            }
        }
        return Cmp::Undecided;
    }

    /// Decimal rendering for reports (exact values print exactly).
    std::string str() const {
        switch (kind) {
            case Kind::Exact: return rational_str(value);
            case Kind::ExactSquared: return rational_str(value) + " (squared)";
            case Kind::Enclosure: return enc.str();
        }
        return "?";
    }
};

/// p-norm of a rational vector, in the NormValue calculus: exact for
/// p in {1, inf}, exact squared for p = 2, certified enclosure otherwise.
inline NormValue vec_norm(const std::vector<Rational>& v, const NormExponent& p,
                          mpfr_prec_t prec = 192) {
    switch (p.tag) {
        case NormExponent::Tag::One: {
            Rational s(0);
            for (const auto& a : v) s += boost::multiprecision::abs(a);
            return NormValue::exact(s, p);
        }
        case NormExponent::Tag::Infinity: {
            Rational m(0);
            for (const auto& a : v) {
                Rational x = boost::multiprecision::abs(a);
                if (x > m) m = x;
            }
            return NormValue::exact(m, p);
        }
        case NormExponent::Tag::Two: {
            Rational s(0);
            for (const auto& a : v) s += a * a;
            return NormValue::exact_squared(s, p);
        }
        case NormExponent::Tag::General: {
            Interval sum(prec);
            bool any = false;
            for (const auto& a : v) {
                if (a == 0) continue;
                any = true;
                sum = sum + Interval::from_rational(boost::multiprecision::abs(a), prec).pow(p.value, prec);
            }
            if (!any) return NormValue::enclosure(Interval(prec), p);  // exact zero
            Interval norm = sum.pow(1 / p.value, prec);
            return NormValue::enclosure(std::move(norm), p);
        }
    }
    throw std::logic_error("bad NormExponent tag");
}

}  // namespace vanish
