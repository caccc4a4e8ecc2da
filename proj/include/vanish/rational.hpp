#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vanish {

// et_off: plain value semantics, no expression templates.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Strict "num" / "num/den" parser (decimal forms are rejected on purpose:
/// exact inputs must stay exact).
inline Rational parse_rational(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char ch : t)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    if (!is_int(num) || (slash != std::string_view::npos && !is_int(den)))
        throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
    Int n{std::string(num)};
    Int d = slash == std::string_view::npos ? Int(1) : Int(std::string(den));
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
    return Rational(n, d);  // canonicalizes sign and gcd
}

/// "num/den" with the "/1" suppressed, matching the wire format.
inline std::string rational_str(const Rational& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Int floor_rational(const Rational& q) {
    Int n = rat_num(q), d = rat_den(q);  // d > 0
    Int quot = n / d;                    // truncates toward zero
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

inline Int ceil_rational(const Rational& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int quot = n / d;
    if (n > 0 && quot * d != n) ++quot;
    return quot;
}

/// Largest m >= 0 with m*m <= q. Requires q >= 0.
inline Int isqrt_floor(const Rational& q) {
    if (q < 0) throw std::invalid_argument("isqrt_floor of negative value");
    Int m = boost::multiprecision::sqrt(floor_rational(q));
    while (Rational((m + 1) * (m + 1)) <= q) ++m;
    while (m > 0 && Rational(m * m) > q) --m;
    return m;
}

/// Largest k >= 0 with base^k <= x. Requires base >= 2, x >= 1.
/// Exact, so ties (x an exact power of base) are decided correctly.
inline Int floor_log(const Int& base, const Rational& x) {
    if (base < 2) throw std::invalid_argument("floor_log: base must be >= 2");
    if (x < 1) throw std::invalid_argument("floor_log: x must be >= 1");
    Int k = 0;
    Rational acc = 1;
    Rational b(base);
    while (acc * b <= x) {
        acc *= b;
        ++k;
    }
    return k;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rational: 0^negative");
        return 1 / pow_rational(base, -e);
    }
    Rational acc(1), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

/// Three-valued comparison outcome for enclosure-based checks.
enum class Cmp { True, False, Undecided };

inline bool cmp_true(Cmp c) { return c == Cmp::True; }

}  // namespace vanish
