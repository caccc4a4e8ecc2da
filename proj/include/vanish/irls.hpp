#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vanish/affine.hpp"
#include "vanish/linalg.hpp"

namespace vanish {

// Working precision for the float path: 50 decimal digits, enough that the
// reported values are limited by convergence, not by roundoff, even on
// ill-conditioned Vandermonde instances.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                           boost::multiprecision::et_off>;

struct IrlsOptions {
    long max_iterations = 10000;
    double rel_tolerance = 1e-12;
};

struct IrlsResult {
    double value = 0;
    std::vector<double> y;
    double residual = 0;  // convergence residual: last relative objective change
    bool converged = true;
    long iterations = 0;
};

inline Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

namespace detail {

inline std::vector<Real> real_solve(std::vector<std::vector<Real>> a, std::vector<Real> b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(a[i][k]) > abs(a[piv][k])) piv = i;
        if (a[piv][k] == 0) {
            // Degenerate direction; freeze it.
            a[k][k] = 1;
            b[k] = 0;
            continue;
        }
        std::swap(a[piv], a[k]);
        std::swap(b[piv], b[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            Real f = a[i][k] / a[k][k];
            if (f == 0) continue;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Real> x(n, Real(0));
    for (std::size_t i = n; i-- > 0;) {
        Real s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

inline Real lp_norm(const std::vector<Real>& r, const Real& p) {
    Real s(0);
    for (const auto& v : r) {
        if (v == 0) continue;
        s += pow(abs(v), p);
    }
    if (s == 0) return Real(0);
    return pow(s, 1 / p);
}

}  // namespace detail

/// Approximate min ||fixed + map*y||_p over y for general p in (1, inf),
/// by iteratively reweighted least squares with damping for p > 3 and a
/// p-doubling homotopy for large p. Exponents within 1e-3 of 1 are redirected
/// to the exact l1 LP (the weights blow up there).
inline IrlsResult min_lp_float(const Mat& map, const Vec& fixed, const Rational& p_in,
                               const IrlsOptions& opt = {}) {
    if (p_in <= 1) throw std::invalid_argument("min_lp_float: p must be > 1");
    const std::size_t m = fixed.size();
    const std::size_t k = map.empty() ? 0 : map[0].size();

    if (p_in - 1 < Rational(1, 1000)) {
        auto l1 = min_affine_l1(map, fixed);
        IrlsResult r;
        r.value = static_cast<double>(to_real(l1.value));
        r.y.resize(k);
        for (std::size_t j = 0; j < k; ++j) r.y[j] = static_cast<double>(to_real(l1.y[j]));
        r.residual = 0;
        r.converged = true;
        return r;
    }

    std::vector<std::vector<Real>> a(m, std::vector<Real>(k));
    std::vector<Real> f(m);
    for (std::size_t i = 0; i < m; ++i) {
        f[i] = to_real(fixed[i]);
        for (std::size_t j = 0; j < k; ++j) a[i][j] = to_real(map[i][j]);
    }
    const Real p_target = to_real(p_in);

    std::vector<Real> y(k, Real(0));
    auto residual_at = [&](const std::vector<Real>& yy) {
        std::vector<Real> r(m);
        for (std::size_t i = 0; i < m; ++i) {
            Real s = f[i];
            for (std::size_t j = 0; j < k; ++j) s += a[i][j] * yy[j];
            r[i] = s;
        }
        return r;
    };
    auto weighted_ls = [&](const std::vector<Real>& w) {
        std::vector<std::vector<Real>> g(k, std::vector<Real>(k, Real(0)));
        std::vector<Real> rhs(k, Real(0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t c1 = 0; c1 < k; ++c1) {
                if (a[i][c1] == 0) continue;
                Real wac = w[i] * a[i][c1];
                for (std::size_t c2 = c1; c2 < k; ++c2) g[c1][c2] += wac * a[i][c2];
                rhs[c1] -= wac * f[i];
            }
        }
        for (std::size_t c1 = 0; c1 < k; ++c1)
            for (std::size_t c2 = 0; c2 < c1; ++c2) g[c1][c2] = g[c2][c1];
        return detail::real_solve(std::move(g), std::move(rhs));
    };

    IrlsResult out;
    if (k == 0 || m == 0) {
        out.value = static_cast<double>(detail::lp_norm(f, p_target));
        out.y.assign(k, 0.0);
        return out;
    }

    // Least-squares start, then walk p up (or directly for moderate p).
    {
        std::vector<Real> w(m, Real(1));
        y = weighted_ls(w);
    }
    Real scale(0);
    for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, abs(f[i]));
    if (scale == 0) scale = 1;
    const Real floor_eps = scale * Real("1e-35");
    const Real rtol(opt.rel_tolerance);

    Real p_cur = std::min(p_target, Real(2));
    long used = 0;
    Real obj = detail::lp_norm(residual_at(y), p_target);
    while (true) {
        p_cur = std::min(p_target, p_cur * 2);
        Real damping = p_cur <= 3 ? Real(1) : 1 / (p_cur - 1);
        obj = detail::lp_norm(residual_at(y), p_cur);
        // Residual smoothing keeps the p < 2 weights finite where optimal
        // residuals vanish; tighten it in stages down to the floor.
        Real eps = scale / 16;
        bool stage_done = false;
        while (!stage_done && used < opt.max_iterations) {
            ++used;
            std::vector<Real> r = residual_at(y);
            std::vector<Real> w(m);
            for (std::size_t i = 0; i < m; ++i) {
                Real ri = std::max(abs(r[i]), eps);
                w[i] = pow(ri, p_cur - 2);
            }
            std::vector<Real> y_ls = weighted_ls(w);
            for (std::size_t j = 0; j < k; ++j) y[j] += damping * (y_ls[j] - y[j]);
            Real obj_new = detail::lp_norm(residual_at(y), p_cur);
            Real diff = abs(obj_new - obj);
            Real denom = std::max(obj_new, Real("1e-300"));
            out.residual = static_cast<double>(diff / denom);
            if (diff <= rtol * denom) {
                if (eps > floor_eps)
                    eps = std::max(floor_eps, eps / Real(1024));
                else
                    stage_done = true;
            }
            obj = obj_new;
        }
        if (p_cur == p_target) break;
        if (used >= opt.max_iterations) break;
    }
    out.converged = used < opt.max_iterations;
    out.iterations = used;
    out.value = static_cast<double>(detail::lp_norm(residual_at(y), p_target));
    out.y.resize(k);
    for (std::size_t j = 0; j < k; ++j) out.y[j] = static_cast<double>(y[j]);
    return out;
}

/// Exact rational snapshot of the IRLS point (mpfr values are dyadic
/// rationals, so this is lossless); used to certify float results.
inline Vec rationalize_irls_point(const Mat& map, const Vec& fixed, const std::vector<double>& y) {
    const std::size_t m = fixed.size();
    const std::size_t k = map.empty() ? 0 : map[0].size();
    Vec yq(k);
    for (std::size_t j = 0; j < k; ++j) yq[j] = Rational(y[j]);
    Vec point(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational s = fixed[i];
        for (std::size_t j = 0; j < k; ++j) s += map[i][j] * yq[j];
        point[i] = s;
    }
    return point;
}

}  // namespace vanish
