#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "vanish/rational.hpp"

namespace vanish {

/// Closed interval [lo, hi] with MPFR endpoints, lo rounded down and hi
/// rounded up through every operation, so the true value is always enclosed.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 128) : prec_(prec) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval(Interval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, MPFR_PREC_MIN);
        mpfr_init2(hi_, MPFR_PREC_MIN);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    Interval& operator=(Interval o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval from_rational(const Rational& q, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_q(r.lo_, q.backend().data(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.backend().data(), MPFR_RNDU);
        return r;
    }
    static Interval from_int(long n, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_si(r.lo_, n, MPFR_RNDD);
        mpfr_set_si(r.hi_, n, MPFR_RNDU);
        return r;
    }
    static Interval pi(mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_const_pi(r.lo_, MPFR_RNDD);
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        return r;
    }

    mpfr_prec_t prec() const { return prec_; }

    Interval operator+(const Interval& o) const {
        Interval r(join_prec(o));
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }
    Interval operator-(const Interval& o) const {
        Interval r(join_prec(o));
        mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }
    Interval operator-() const {
        Interval r(prec_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    Interval operator*(const Interval& o) const {
        Interval r(join_prec(o));
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        bool first = true;
        const mpfr_srcptr as[2] = {lo_, hi_}, bs[2] = {o.lo_, o.hi_};
        for (auto a : as)
            for (auto b : bs) {
                mpfr_mul(t, a, b, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, a, b, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }
    Interval operator/(const Interval& o) const {
        if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
            throw std::domain_error("Interval division by interval containing 0");
        Interval r(join_prec(o));
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        bool first = true;
        const mpfr_srcptr as[2] = {lo_, hi_}, bs[2] = {o.lo_, o.hi_};
        for (auto a : as)
            for (auto b : bs) {
                mpfr_div(t, a, b, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_div(t, a, b, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }

    Interval abs() const {
        Interval r(prec_);
        if (mpfr_sgn(lo_) >= 0) return *this;
        if (mpfr_sgn(hi_) <= 0) return -*this;
        mpfr_set_zero(r.lo_, 1);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    /// Requires lo >= 0.
    Interval sqrt() const {
        if (mpfr_sgn(lo_) < 0) throw std::domain_error("Interval sqrt of negative");
        Interval r(prec_);
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    /// Requires lo > 0.
    Interval log() const {
        if (mpfr_sgn(lo_) <= 0) throw std::domain_error("Interval log of nonpositive");
        Interval r(prec_);
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    Interval exp() const {
        Interval r(prec_);
        mpfr_exp(r.lo_, lo_, MPFR_RNDD);
        mpfr_exp(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    /// x^e for x with lo > 0, arbitrary rational exponent.
    Interval pow(const Rational& e, mpfr_prec_t prec) const {
        Interval ei = Interval::from_rational(e, prec);
        return (log() * ei).exp();
    }

    /// [lo of a, hi of b]; the caller guarantees that ordering.
    static Interval span(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_set(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_set(r.hi_, b.hi_, MPFR_RNDU);
        if (mpfr_cmp(r.lo_, r.hi_) > 0) throw std::logic_error("Interval::span: crossed endpoints");
        return r;
    }

    Interval min(const Interval& o) const {
        Interval r(join_prec(o));
        mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }

    // Certified comparisons. "definitely_*" means true for every point of the
    // enclosure; a false return is "not certified", not a certified negation.
    bool definitely_le(const Rational& q) const { return mpfr_cmp_q(hi_, const_cast<mpq_ptr>(q.backend().data())) <= 0; }
    bool definitely_lt(const Rational& q) const { return mpfr_cmp_q(hi_, const_cast<mpq_ptr>(q.backend().data())) < 0; }
    bool definitely_ge(const Rational& q) const { return mpfr_cmp_q(lo_, const_cast<mpq_ptr>(q.backend().data())) >= 0; }
    bool definitely_gt(const Rational& q) const { return mpfr_cmp_q(lo_, const_cast<mpq_ptr>(q.backend().data())) > 0; }
    bool definitely_le(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
    bool definitely_lt(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool contains(const Rational& q) const {
        return mpfr_cmp_q(lo_, const_cast<mpq_ptr>(q.backend().data())) <= 0 &&
               mpfr_cmp_q(hi_, const_cast<mpq_ptr>(q.backend().data())) >= 0;
    }

    /// Compare the enclosed value against a rational threshold: value <= q?
    Cmp cmp_le(const Rational& q) const {
        if (definitely_le(q)) return Cmp::True;
        if (definitely_gt(q)) return Cmp::False;
        return Cmp::Undecided;
    }
    Cmp cmp_lt(const Rational& q) const {
        if (definitely_lt(q)) return Cmp::True;
        if (definitely_ge(q)) return Cmp::False;
        return Cmp::Undecided;
    }

    /// Floor of the enclosed value when both endpoints agree on it.
    std::optional<Int> unambiguous_floor() const {
        mpz_t zl, zh;
        mpz_init(zl);
        mpz_init(zh);
        mpfr_get_z(zl, lo_, MPFR_RNDD);
        mpfr_get_z(zh, hi_, MPFR_RNDD);
        std::optional<Int> out;
        if (mpz_cmp(zl, zh) == 0) out = Int(mpz_class_like(zl));
        mpz_clear(zl);
        mpz_clear(zh);
        return out;
    }
    /// Ceiling of the enclosed value when both endpoints agree on it.
    std::optional<Int> unambiguous_ceil() const {
        mpz_t zl, zh;
        mpz_init(zl);
        mpz_init(zh);
        mpfr_get_z(zl, lo_, MPFR_RNDU);
        mpfr_get_z(zh, hi_, MPFR_RNDU);
        std::optional<Int> out;
        if (mpz_cmp(zl, zh) == 0) out = Int(mpz_class_like(zl));
        mpz_clear(zl);
        mpz_clear(zh);
        return out;
    }

    /// Exact rational value of the upper endpoint (mpfr values are dyadic).
    Rational hi_rational() const {
        Rational q;
        mpfr_get_q(q.backend().data(), hi_);
        return q;
    }

    double mid() const {
        mpfr_t m;
        mpfr_init2(m, 64);
        mpfr_add(m, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(m, m, 1, MPFR_RNDN);
        double d = mpfr_get_d(m, MPFR_RNDN);
        mpfr_clear(m);
        return d;
    }
    double rad() const {
        mpfr_t m;
        mpfr_init2(m, 64);
        mpfr_sub(m, hi_, lo_, MPFR_RNDU);
        mpfr_div_2ui(m, m, 1, MPFR_RNDU);
        double d = mpfr_get_d(m, MPFR_RNDU);
        mpfr_clear(m);
        return d;
    }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

    /// "midpoint±radius" in plain decimal, the report format.
    std::string str() const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g±%.3g", mid(), rad());
        return buf;
    }

  private:
    static Int mpz_class_like(mpz_srcptr z) {
        Int v;
        mpz_set(v.backend().data(), z);
        return v;
    }
    mpfr_prec_t join_prec(const Interval& o) const { return std::max(prec_, o.prec_); }

    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

/// Retry a precision-parameterized decision with doubling precision.
/// `f(prec)` returns Cmp; gives up (Undecided) past `cap` bits.
template <class F>
Cmp decide_widening(F&& f, mpfr_prec_t start = 128, mpfr_prec_t cap = 1 << 16) {
    for (mpfr_prec_t p = start; p <= cap; p *= 2) {
        Cmp c = f(p);
        if (c != Cmp::Undecided) return c;
    }
    return Cmp::Undecided;
}

}  // namespace vanish
