#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vanish/linalg.hpp"
#include "vanish/rational.hpp"

namespace vanish {

/// min objective^T x  s.t.  eq_lhs x = eq_rhs,  ub_lhs x <= ub_rhs,
/// lower <= x <= upper componentwise (lower/upper may be empty = all free).
struct LinearProgram {
    Vec objective;
    Mat eq_lhs;
    Vec eq_rhs;
    Mat ub_lhs;
    Vec ub_rhs;
    std::vector<std::optional<Rational>> lower;
    std::vector<std::optional<Rational>> upper;

    std::size_t num_vars() const { return objective.size(); }

    void validate() const {
        if (eq_lhs.size() != eq_rhs.size()) throw std::invalid_argument("LP: eq row/rhs mismatch");
        if (ub_lhs.size() != ub_rhs.size()) throw std::invalid_argument("LP: ub row/rhs mismatch");
        for (const auto& r : eq_lhs)
            if (r.size() != num_vars()) throw std::invalid_argument("LP: eq row width mismatch");
        for (const auto& r : ub_lhs)
            if (r.size() != num_vars()) throw std::invalid_argument("LP: ub row width mismatch");
        if (!lower.empty() && lower.size() != num_vars()) throw std::invalid_argument("LP: lower size mismatch");
        if (!upper.empty() && upper.size() != num_vars()) throw std::invalid_argument("LP: upper size mismatch");
        for (std::size_t j = 0; j < num_vars(); ++j) {
            auto l = lower.empty() ? std::nullopt : lower[j];
            auto u = upper.empty() ? std::nullopt : upper[j];
            if (l && u && *l > *u) throw std::invalid_argument("LP: empty bound interval");
        }
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Rational objective_value;
    Vec primal;   // original variables
    Vec dual_eq;  // u, free sign
    Vec dual_ub;  // v >= 0
};

/// Exact KKT audit of an Optimal solution: primal feasibility, dual sign and
/// complementary slackness, stationarity via reduced costs, strong duality.
/// Independent of solver internals; everything compared exactly.
inline bool audit_lp_solution(const LinearProgram& lp, const LpSolution& sol,
                              std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (sol.status != LpStatus::Optimal) return fail("not optimal");
    const std::size_t n = lp.num_vars();
    if (sol.primal.size() != n) return fail("primal size");
    if (sol.dual_eq.size() != lp.eq_lhs.size()) return fail("dual_eq size");
    if (sol.dual_ub.size() != lp.ub_lhs.size()) return fail("dual_ub size");

    auto lower_of = [&](std::size_t j) { return lp.lower.empty() ? std::nullopt : lp.lower[j]; };
    auto upper_of = [&](std::size_t j) { return lp.upper.empty() ? std::nullopt : lp.upper[j]; };

    for (std::size_t i = 0; i < lp.eq_lhs.size(); ++i)
        if (dot(lp.eq_lhs[i], sol.primal) != lp.eq_rhs[i]) return fail("eq row violated");
    Vec slack(lp.ub_lhs.size());
    for (std::size_t i = 0; i < lp.ub_lhs.size(); ++i) {
        slack[i] = lp.ub_rhs[i] - dot(lp.ub_lhs[i], sol.primal);
        if (slack[i] < 0) return fail("ub row violated");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (auto l = lower_of(j); l && sol.primal[j] < *l) return fail("lower bound violated");
        if (auto u = upper_of(j); u && sol.primal[j] > *u) return fail("upper bound violated");
    }

    for (std::size_t i = 0; i < lp.ub_lhs.size(); ++i) {
        if (sol.dual_ub[i] < 0) return fail("negative inequality dual");
        if (sol.dual_ub[i] != 0 && slack[i] != 0) return fail("complementary slackness (rows)");
    }

    // rc = c - A_eq^T u + A_ub^T v; sign forces the matching active bound.
    Rational dual_value(0);
    for (std::size_t i = 0; i < lp.eq_lhs.size(); ++i) dual_value += sol.dual_eq[i] * lp.eq_rhs[i];
    for (std::size_t i = 0; i < lp.ub_lhs.size(); ++i) dual_value -= sol.dual_ub[i] * lp.ub_rhs[i];
    for (std::size_t j = 0; j < n; ++j) {
        Rational rc = lp.objective[j];
        for (std::size_t i = 0; i < lp.eq_lhs.size(); ++i) rc -= sol.dual_eq[i] * lp.eq_lhs[i][j];
        for (std::size_t i = 0; i < lp.ub_lhs.size(); ++i) rc += sol.dual_ub[i] * lp.ub_lhs[i][j];
        if (rc > 0) {
            auto l = lower_of(j);
            if (!l || sol.primal[j] != *l) return fail("positive reduced cost off lower bound");
            dual_value += rc * *l;
        } else if (rc < 0) {
            auto u = upper_of(j);
            if (!u || sol.primal[j] != *u) return fail("negative reduced cost off upper bound");
            dual_value += rc * *u;
        }
    }

    Rational primal_value = dot(lp.objective, sol.primal);
    if (primal_value != sol.objective_value) return fail("stored objective mismatch");
    if (primal_value != dual_value) return fail("strong duality gap");
    return true;
}

namespace detail {

struct StdForm {
    Mat a;  // m x ncols
    Vec b;  // >= 0
    Vec c;  // ncols
    Rational c0{0};
    struct Col {
        int orig = -1;  // structural: original variable index
        int sign = 0;   // contribution sign
        bool slack = false;
    };
    struct Row {
        enum class Kind { Eq, Ub, Bound } kind = Kind::Eq;
        int index = -1;  // index into the original row family
        int sign = 1;    // -1 if the row was negated to make b >= 0
    };
    std::vector<Col> cols;
    std::vector<Row> rows;
    Vec shift;  // per original variable
};

inline StdForm build_standard(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    StdForm f;
    f.shift.assign(n, Rational(0));

    // Variable parts: x_j = shift_j + sum sign * z.
    std::vector<std::vector<std::size_t>> parts(n);
    struct BoundRow {
        std::size_t col;
        Rational range;
        int var;
    };
    std::vector<BoundRow> bound_rows;
    for (std::size_t j = 0; j < n; ++j) {
        auto l = lp.lower.empty() ? std::nullopt : lp.lower[j];
        auto u = lp.upper.empty() ? std::nullopt : lp.upper[j];
        if (l) {
            f.shift[j] = *l;
            parts[j].push_back(f.cols.size());
            f.cols.push_back({static_cast<int>(j), +1, false});
            if (u) bound_rows.push_back({f.cols.size() - 1, *u - *l, static_cast<int>(j)});
        } else if (u) {
            f.shift[j] = *u;
            parts[j].push_back(f.cols.size());
            f.cols.push_back({static_cast<int>(j), -1, false});
        } else {
            parts[j].push_back(f.cols.size());
            f.cols.push_back({static_cast<int>(j), +1, false});
            parts[j].push_back(f.cols.size());
            f.cols.push_back({static_cast<int>(j), -1, false});
        }
    }
    const std::size_t n_struct = f.cols.size();
    const std::size_t m = lp.eq_lhs.size() + lp.ub_lhs.size() + bound_rows.size();
    const std::size_t n_slack = lp.ub_lhs.size() + bound_rows.size();
    f.a.assign(m, Vec(n_struct + n_slack, Rational(0)));
    f.b.assign(m, Rational(0));
    f.c.assign(n_struct + n_slack, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        f.c0 += lp.objective[j] * f.shift[j];
        for (auto col : parts[j]) f.c[col] = lp.objective[j] * Rational(f.cols[col].sign);
    }
    for (std::size_t i = 0; i < n_slack; ++i) f.cols.push_back({-1, 0, true});

    std::size_t r = 0, s = n_struct;
    auto fill_row = [&](const Vec& coeffs, const Rational& rhs, StdForm::Row info, bool with_slack) {
        Rational b = rhs;
        for (std::size_t j = 0; j < n; ++j) {
            if (coeffs[j] == 0) continue;
            b -= coeffs[j] * f.shift[j];
            for (auto col : parts[j]) f.a[r][col] = coeffs[j] * Rational(f.cols[col].sign);
        }
        if (with_slack) f.a[r][s] = 1;
        f.b[r] = b;
        if (b < 0) {
            for (auto& x : f.a[r]) x = -x;
            f.b[r] = -b;
            info.sign = -1;
        }
        f.rows.push_back(info);
        ++r;
        if (with_slack) ++s;
    };
    for (std::size_t i = 0; i < lp.eq_lhs.size(); ++i)
        fill_row(lp.eq_lhs[i], lp.eq_rhs[i], {StdForm::Row::Kind::Eq, static_cast<int>(i), 1}, false);
    for (std::size_t i = 0; i < lp.ub_lhs.size(); ++i)
        fill_row(lp.ub_lhs[i], lp.ub_rhs[i], {StdForm::Row::Kind::Ub, static_cast<int>(i), 1}, true);
    for (const auto& br : bound_rows) {
        // z_col + slack = range, built directly (not an original-variable row).
        Rational rhs = br.range;
        f.a[r][br.col] = 1;
        f.a[r][s] = 1;
        f.b[r] = rhs;  // range >= 0 by validate()
        f.rows.push_back({StdForm::Row::Kind::Bound, br.var, 1});
        ++r;
        ++s;
    }
    return f;
}

}  // namespace detail

/// Exact two-phase primal simplex with Bland's rule. Deterministic; optimal
/// solutions come back with an exact dual certificate and are re-audited
/// before being returned.
inline LpSolution simplex_solve(const LinearProgram& lp) {
    lp.validate();
    detail::StdForm f = detail::build_standard(lp);
    std::size_t m = f.a.size();
    const std::size_t nz = f.c.size();  // structural + slack columns

    // Tableau: columns [z | artificials | rhs]; rows [constraints | phase2 obj | phase1 obj].
    const std::size_t width = nz + m + 1;
    Mat t(m + 2, Vec(width, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nz; ++j) t[i][j] = f.a[i][j];
        t[i][nz + i] = 1;
        t[i][width - 1] = f.b[i];
        basis[i] = nz + i;
    }
    const std::size_t obj2 = m, obj1 = m + 1;
    for (std::size_t j = 0; j < nz; ++j) {
        t[obj2][j] = f.c[j];
        Rational s(0);
        for (std::size_t i = 0; i < m; ++i) s += f.a[i][j];
        t[obj1][j] = -s;
    }
    {
        Rational s(0);
        for (std::size_t i = 0; i < m; ++i) s += f.b[i];
        t[obj1][width - 1] = -s;
    }

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        Rational inv = 1 / t[pr][pc];
        for (auto& x : t[pr]) x *= inv;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            Rational fct = t[i][pc];
            for (std::size_t j = 0; j < width; ++j)
                if (t[pr][j] != 0) t[i][j] -= fct * t[pr][j];
        }
        basis[pr] = pc;
    };

    // Bland: entering = lowest eligible column index; leaving = min-ratio row,
    // ties broken by lowest basic variable index.
    auto run = [&](std::size_t obj_row, std::size_t allowed_cols) -> LpStatus {
        for (long guard = 0; guard < 2000000; ++guard) {
            std::size_t enter = allowed_cols;
            for (std::size_t j = 0; j < allowed_cols; ++j)
                if (t[obj_row][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == allowed_cols) return LpStatus::Optimal;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][width - 1] / t[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
        throw std::logic_error("simplex: iteration guard tripped");
    };

    // Phase 1.
    if (run(obj1, nz) != LpStatus::Optimal) throw std::logic_error("phase 1 unbounded");
    if (-t[obj1][width - 1] > 0) {
        LpSolution sol;
        sol.status = LpStatus::Infeasible;
        return sol;
    }
    // Drive leftover artificials out of the basis; drop truly redundant rows.
    // art_col[r] = tableau column of the artificial that belongs to row r.
    std::vector<std::size_t> art_col(m);
    for (std::size_t i = 0; i < m; ++i) art_col[i] = nz + i;
    std::vector<bool> dead(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < nz) continue;
        std::size_t col = nz;
        for (std::size_t j = 0; j < nz; ++j)
            if (t[i][j] != 0) {
                col = j;
                break;
            }
        if (col < nz)
            pivot(i, col);
        else
            dead[i] = true;  // zero row: redundant constraint
    }
    if (std::any_of(dead.begin(), dead.end(), [](bool d) { return d; })) {
        Mat t2;
        std::vector<std::size_t> basis2, art2;
        std::vector<detail::StdForm::Row> rows2;
        for (std::size_t i = 0; i < m; ++i)
            if (!dead[i]) {
                t2.push_back(std::move(t[i]));
                basis2.push_back(basis[i]);
                art2.push_back(art_col[i]);
                rows2.push_back(f.rows[i]);
            }
        t2.push_back(std::move(t[obj2]));
        t2.push_back(std::move(t[obj1]));
        t = std::move(t2);
        basis = std::move(basis2);
        art_col = std::move(art2);
        f.rows = std::move(rows2);
        m = basis.size();
        // Artificial columns of dropped rows stay in the tableau;
        // they can never enter, so they are harmless.
    }

    // Phase 2.
    const std::size_t obj2r = m;
    LpStatus st = run(obj2r, nz);
    LpSolution sol;
    if (st == LpStatus::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    // Recover z, then x.
    Vec z(nz, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < nz) z[basis[i]] = t[i][width - 1];
    Vec x(lp.num_vars());
    for (std::size_t j = 0; j < lp.num_vars(); ++j) x[j] = f.shift[j];
    for (std::size_t col = 0; col < nz; ++col) {
        const auto& ci = f.cols[col];
        if (!ci.slack && z[col] != 0) x[static_cast<std::size_t>(ci.orig)] += Rational(ci.sign) * z[col];
    }

    // Duals: the reduced cost of row r's artificial column is exactly -y_r
    // for the live system; dropped redundant rows keep multiplier 0.
    sol.dual_eq.assign(lp.eq_lhs.size(), Rational(0));
    sol.dual_ub.assign(lp.ub_lhs.size(), Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        Rational y = -t[obj2r][art_col[r]];
        const auto& ri = f.rows[r];
        if (ri.kind == detail::StdForm::Row::Kind::Eq)
            sol.dual_eq[static_cast<std::size_t>(ri.index)] = Rational(ri.sign) * y;
        else if (ri.kind == detail::StdForm::Row::Kind::Ub)
            sol.dual_ub[static_cast<std::size_t>(ri.index)] = Rational(-ri.sign) * y;
        // Bound rows: folded into reduced-cost sign conditions, no multiplier kept.
    }

    sol.status = LpStatus::Optimal;
    sol.primal = std::move(x);
    sol.objective_value = dot(lp.objective, sol.primal);
    std::string why;
    if (!audit_lp_solution(lp, sol, &why))
        throw std::logic_error("simplex certificate failed audit: " + why);
    return sol;
}

}  // namespace vanish
