#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vanish/norm.hpp"
#include "vanish/rational.hpp"

namespace vanish {

/// Dense polynomial over exact rationals, coefficients ascending by degree.
/// Trailing zeros are trimmed; the zero polynomial has an empty vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(Rational a) {
        Poly p;
        if (a != 0) p.c_.push_back(std::move(a));
        return p;
    }
    static Poly monomial(std::size_t j, Rational a) {
        Poly p;
        if (a != 0) {
            p.c_.assign(j + 1, Rational(0));
            p.c_[j] = std::move(a);
        }
        return p;
    }
    /// x - 1
    static Poly x_minus_one() { return Poly{Rational(-1), Rational(1)}; }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Rational(0); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly operator+(const Poly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j] == 0) continue;
                r[i + j] += c_[i] * o.c_[j];
            }
        }
        return Poly(std::move(r));
    }
    Poly operator*(const Rational& s) const {
        if (s == 0) return Poly();
        std::vector<Rational> r = c_;
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }

    /// Horner evaluation, exact.
    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// P^k by repeated squaring; P^0 = 1.
    Poly pow(unsigned long k) const {
        Poly acc = Poly::constant(Rational(1));
        Poly base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }

    /// P(x^r): coefficient j of P lands at exponent j*r.
    Poly compose_power(unsigned long r) const {
        if (r == 0) throw std::invalid_argument("compose_power: r must be positive");
        if (r == 1 || is_zero()) return *this;
        std::vector<Rational> out((c_.size() - 1) * r + 1, Rational(0));
        for (std::size_t j = 0; j < c_.size(); ++j) out[j * r] = c_[j];
        return Poly(std::move(out));
    }

    /// A with A' = P, A(0) = 0.
    Poly antiderivative() const {
        std::vector<Rational> out(c_.size() + 1, Rational(0));
        for (std::size_t j = 0; j < c_.size(); ++j) out[j + 1] = c_[j] / Rational(static_cast<long>(j) + 1);
        return Poly(std::move(out));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> out(c_.size() - 1);
        for (std::size_t j = 1; j < c_.size(); ++j) out[j - 1] = c_[j] * Rational(static_cast<long>(j));
        return Poly(std::move(out));
    }

    /// Largest k with (x-1)^k | P, by repeated exact synthetic division.
    /// Rejects the zero polynomial.
    long multiplicity_at_one() const {
        if (is_zero()) throw std::invalid_argument("multiplicity_at_one of zero polynomial");
        std::vector<Rational> cur = c_;
        long k = 0;
        while (true) {
            // Divide by (x - 1): quotient q, remainder r = value at 1.
            const std::size_t d = cur.size() - 1;
            if (d == 0) {
                // Nonzero constant: no further factor.
                return k;
            }
            std::vector<Rational> q(d);
            q[d - 1] = cur[d];
            for (std::size_t i = d - 1; i-- > 0;) q[i] = cur[i + 1] + q[i + 1];
            Rational rem = cur[0] + q[0];
            if (rem != 0) return k;
            ++k;
            cur = std::move(q);
            while (!cur.empty() && cur.back() == 0) cur.pop_back();
            if (cur.empty()) throw std::logic_error("exact division produced zero quotient");
        }
    }

    /// p-norm of the tail (a_1..a_n, constant term excluded).
    /// Exact for p in {1, inf}; exact squared value for p = 2; certified
    /// enclosure for general p at the given precision.
    NormValue tail_norm(const NormExponent& p, mpfr_prec_t prec = 192) const {
        std::vector<Rational> tail(c_.begin() + (c_.empty() ? 0 : 1), c_.end());
        return vec_norm(tail, p, prec);
    }

    /// Values (P(from), ..., P(to)), exact.
    std::vector<Rational> values_on(long from, long to) const {
        std::vector<Rational> v;
        v.reserve(static_cast<std::size_t>(std::max<long>(0, to - from + 1)));
        for (long j = from; j <= to; ++j) v.push_back(eval(Rational(j)));
        return v;
    }

    /// Chebyshev polynomial of the first kind, integer coefficients via the
    /// three-term recurrence.
    static Poly chebyshev(unsigned m) {
        Poly t0 = Poly::constant(Rational(1));
        if (m == 0) return t0;
        Poly t1 = Poly::monomial(1, Rational(1));
        if (m == 1) return t1;
        Poly two_x = Poly::monomial(1, Rational(2));
        for (unsigned i = 2; i <= m; ++i) {
            Poly t2 = two_x * t1 - t0;
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        return t1;
    }

    /// P(a*x + b) by Horner in the polynomial ring.
    Poly compose_affine(const Rational& a, const Rational& b) const {
        Poly arg{b, a};
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * arg + Poly::constant(c_[i]);
        return acc;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace vanish
