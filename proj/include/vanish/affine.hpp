#pragma once

#include <stdexcept>

#include "vanish/simplex.hpp"

namespace vanish {

struct AffineMinResult {
    Rational value;  // exact minimum norm
    Vec y;           // minimizing parameters
    Vec point;       // fixed + map*y
    LpSolution lp;   // certificate
};

/// min ||fixed + map*y||_1 over free y.
/// Variables: [y | t], rows t_i >= |(fixed + map y)_i| as two <= rows each.
inline AffineMinResult min_affine_l1(const Mat& map, const Vec& fixed) {
    const std::size_t m = fixed.size();
    const std::size_t k = map.empty() ? 0 : map[0].size();
    LinearProgram lp;
    lp.objective.assign(k + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) lp.objective[k + i] = 1;
    lp.lower.assign(k + m, std::nullopt);
    lp.upper.assign(k + m, std::nullopt);
    for (std::size_t i = 0; i < m; ++i) lp.lower[k + i] = Rational(0);
    for (std::size_t i = 0; i < m; ++i) {
        Vec row(k + m, Rational(0));
        for (std::size_t j = 0; j < k; ++j) row[j] = map[i][j];
        row[k + i] = -1;
        lp.ub_lhs.push_back(row);            //  (map y)_i - t_i <= -fixed_i
        lp.ub_rhs.push_back(-fixed[i]);
        for (std::size_t j = 0; j < k; ++j) row[j] = -map[i][j];
        lp.ub_lhs.push_back(std::move(row));  // -(map y)_i - t_i <=  fixed_i
        lp.ub_rhs.push_back(fixed[i]);
    }
    LpSolution sol = simplex_solve(lp);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("l1 affine LP not optimal");
    AffineMinResult r;
    r.value = sol.objective_value;
    r.y.assign(sol.primal.begin(), sol.primal.begin() + static_cast<long>(k));
    r.point.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        Rational s = fixed[i];
        for (std::size_t j = 0; j < k; ++j) s += map[i][j] * r.y[j];
        r.point[i] = s;
    }
    r.lp = std::move(sol);
    return r;
}

/// min ||fixed + map*y||_inf over free y. Single bound variable t.
inline AffineMinResult min_affine_linf(const Mat& map, const Vec& fixed) {
    const std::size_t m = fixed.size();
    const std::size_t k = map.empty() ? 0 : map[0].size();
    LinearProgram lp;
    lp.objective.assign(k + 1, Rational(0));
    lp.objective[k] = 1;
    lp.lower.assign(k + 1, std::nullopt);
    lp.upper.assign(k + 1, std::nullopt);
    lp.lower[k] = Rational(0);
    for (std::size_t i = 0; i < m; ++i) {
        Vec row(k + 1, Rational(0));
        for (std::size_t j = 0; j < k; ++j) row[j] = map[i][j];
        row[k] = -1;
        lp.ub_lhs.push_back(row);
        lp.ub_rhs.push_back(-fixed[i]);
        for (std::size_t j = 0; j < k; ++j) row[j] = -map[i][j];
        lp.ub_lhs.push_back(std::move(row));
        lp.ub_rhs.push_back(fixed[i]);
    }
    LpSolution sol = simplex_solve(lp);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("linf affine LP not optimal");
    AffineMinResult r;
    r.value = sol.objective_value;
    r.y.assign(sol.primal.begin(), sol.primal.begin() + static_cast<long>(k));
    r.point.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        Rational s = fixed[i];
        for (std::size_t j = 0; j < k; ++j) s += map[i][j] * r.y[j];
        r.point[i] = s;
    }
    r.lp = std::move(sol);
    return r;
}

}  // namespace vanish
