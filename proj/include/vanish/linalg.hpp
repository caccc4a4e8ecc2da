#pragma once

#include <stdexcept>
#include <vector>

#include "vanish/rational.hpp"

namespace vanish {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

inline Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
    Vec r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
        for (std::size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) r[i] += a[i][j] * x[j];
    }
    return r;
}

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct LinSolveResult {
    enum class Status { Ok, Singular };
    Status status = Status::Ok;
    Vec x;
    bool ok() const { return status == Status::Ok; }
};

/// Exact solve of a square rational system by fraction-free (Bareiss)
/// elimination on the denominator-cleared integer matrix.
/// Dimension mismatch throws; singularity is reported in the result.
inline LinSolveResult solve_linear_exact(const Mat& A, const Vec& b) {
    const std::size_t n = A.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear_exact: rhs size mismatch");
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("solve_linear_exact: matrix not square");
    if (n == 0) return {LinSolveResult::Status::Ok, {}};

    // Clear denominators row by row: identical solution set.
    std::vector<std::vector<Int>> w(n, std::vector<Int>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, rat_den(A[i][j]));
        l = boost::multiprecision::lcm(l, rat_den(b[i]));
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = A[i][j] * Rational(l);
            w[i][j] = rat_num(s);
        }
        Rational s = b[i] * Rational(l);
        w[i][n] = rat_num(s);
    }

    Int prev = 1;
    for (std::size_t k = 0; k + 1 <= n; ++k) {
        std::size_t piv = k;
        while (piv < n && w[piv][k] == 0) ++piv;
        if (piv == n) return {LinSolveResult::Status::Singular, {}};
        if (piv != k) std::swap(w[piv], w[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
            w[i][k] = 0;
        }
        prev = w[k][k];
    }

    Vec x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s(w[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) s -= Rational(w[i][j]) * x[j];
        x[i] = s / Rational(w[i][i]);
    }
    return {LinSolveResult::Status::Ok, std::move(x)};
}

struct L2MinResult {
    Rational sq_value;  // exact squared Euclidean norm at the minimum
    Vec y;              // minimizer in the affine parameterization
    Vec point;          // fixed + map*y
};

/// Exact minimum of ||fixed + map*y||_2^2 over y, via the normal equations.
/// Rank deficiency is handled (free coordinates pinned to 0); the normal
/// system is always consistent so a minimizer always exists.
inline L2MinResult min_l2sq_affine(const Mat& map, const Vec& fixed) {
    const std::size_t m = fixed.size();
    const std::size_t k = map.empty() ? 0 : map[0].size();
    if (map.size() != m && !(map.empty() && k == 0))
        throw std::invalid_argument("min_l2sq_affine: row count mismatch");
    for (const auto& row : map)
        if (row.size() != k) throw std::invalid_argument("min_l2sq_affine: ragged matrix");

    Vec y(k, Rational(0));
    if (k > 0) {
        // G y = -map^T fixed with G = map^T map, solved by Gauss-Jordan with
        // pivot skipping so semidefinite G is fine.
        Mat g(k, Vec(k + 1, Rational(0)));
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a; b < k; ++b) {
                Rational s(0);
                for (std::size_t i = 0; i < m; ++i) s += map[i][a] * map[i][b];
                g[a][b] = s;
                g[b][a] = s;
            }
            Rational s(0);
            for (std::size_t i = 0; i < m; ++i) s += map[i][a] * fixed[i];
            g[a][k] = -s;
        }
        std::vector<long> pivot_of_row(k, -1);
        std::size_t row = 0;
        for (std::size_t col = 0; col < k && row < k; ++col) {
            std::size_t piv = row;
            while (piv < k && g[piv][col] == 0) ++piv;
            if (piv == k) continue;
            std::swap(g[piv], g[row]);
            Rational inv = 1 / g[row][col];
            for (std::size_t j = col; j <= k; ++j) g[row][j] *= inv;
            for (std::size_t i = 0; i < k; ++i) {
                if (i == row || g[i][col] == 0) continue;
                Rational f = g[i][col];
                for (std::size_t j = col; j <= k; ++j) g[i][j] -= f * g[row][j];
            }
            pivot_of_row[row] = static_cast<long>(col);
            ++row;
        }
        for (std::size_t r = row; r < k; ++r)
            if (g[r][k] != 0) throw std::logic_error("normal equations inconsistent");
        for (std::size_t r = 0; r < row; ++r) {
            Rational s = g[r][k];
            for (std::size_t j = 0; j < k; ++j)
                if (static_cast<long>(j) != pivot_of_row[r] && g[r][j] != 0) s -= g[r][j] * y[j];
            y[static_cast<std::size_t>(pivot_of_row[r])] = s;
        }
    }

    Vec point(m);
    Rational val(0);
    for (std::size_t i = 0; i < m; ++i) {
        Rational s = fixed[i];
        for (std::size_t j = 0; j < k; ++j)
            if (map[i][j] != 0 && y[j] != 0) s += map[i][j] * y[j];
        point[i] = s;
        val += s * s;
    }
    return {std::move(val), std::move(y), std::move(point)};
}

}  // namespace vanish
