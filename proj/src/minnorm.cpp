#include "gameprice/minnorm.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace gameprice {

namespace {

// Gaussian elimination with partial pivoting; a is m x m row-major.
void solve_dense(std::vector<double> a, std::vector<double> b,
                 std::vector<double>& x, std::size_t m) {
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < m; ++i)
            if (std::abs(a[i * m + k]) > std::abs(a[piv * m + k])) piv = i;
        if (std::abs(a[piv * m + k]) < 1e-300)
            throw std::runtime_error("min_norm_point: singular active-set system");
        if (piv != k) {
            for (std::size_t j = 0; j < m; ++j) std::swap(a[k * m + j], a[piv * m + j]);
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            const double f = a[i * m + k] / a[k * m + k];
            for (std::size_t j = k; j < m; ++j) a[i * m + j] -= f * a[k * m + j];
            b[i] -= f * b[k];
        }
    }
    x.assign(m, 0.0);
    for (std::size_t ir = m; ir-- > 0;) {
        double s = b[ir];
        for (std::size_t j = ir + 1; j < m; ++j) s -= a[ir * m + j] * x[j];
        x[ir] = s / a[ir * m + ir];
    }
}

}  // namespace

std::vector<double> min_norm_point(const std::vector<std::vector<double>>& rows,
                                   const std::vector<double>& rhs, double tol,
                                   int max_iter) {
    const std::size_t m = rows.size();
    if (rhs.size() != m) throw std::invalid_argument("min_norm_point: size mismatch");
    if (m == 0) return {};
    const std::size_t n = rows[0].size();

    // Normalized rows make the violation tolerance scale-free. The tiny
    // ridge keeps the active-set Gram solvable when cuts become parallel.
    constexpr double kRidge = 1e-12;
    std::vector<std::vector<double>> a(m, std::vector<double>(n));
    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("min_norm_point: ragged rows");
        double nrm = 0.0;
        for (double v : rows[i]) nrm += v * v;
        nrm = std::sqrt(nrm);
        if (nrm < 1e-300) throw std::invalid_argument("min_norm_point: zero row");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j] / nrm;
        b[i] = rhs[i] / nrm;
    }

    std::vector<std::size_t> active;
    std::vector<double> lambda(m, 0.0);
    std::vector<double> x(n, 0.0);

    for (int outer = 0; outer < max_iter; ++outer) {
        // Most violated constraint outside the active set.
        double worst = tol;
        std::size_t pick = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (lambda[i] > 0.0) continue;
            double dot = 0.0;
            for (std::size_t j = 0; j < n; ++j) dot += a[i][j] * x[j];
            const double w = b[i] - dot;
            if (w > worst) {
                worst = w;
                pick = i;
            }
        }
        if (pick == m) {
            // Inactive rows are satisfied to tol; active rows carry only the
            // tiny ridge slack when the system is consistent. A large
            // residual here means the polyhedron is empty: the regularized
            // dual stalls at finite multipliers instead of diverging.
            for (std::size_t i = 0; i < m; ++i) {
                double dot = 0.0;
                for (std::size_t j = 0; j < n; ++j) dot += a[i][j] * x[j];
                if (b[i] - dot > 1e-6)
                    throw std::runtime_error(
                        "min_norm_point: constraints are infeasible");
            }
            return x;
        }
        active.push_back(pick);

        // Re-solve on the active set, stepping back whenever a multiplier
        // would turn nonpositive (Lawson-Hanson inner loop).
        for (int inner = 0;; ++inner) {
            if (inner >= max_iter)
                throw std::runtime_error("min_norm_point: inner iteration cap");
            const std::size_t k = active.size();
            std::vector<double> gram(k * k), rb(k), cand;
            for (std::size_t i = 0; i < k; ++i) {
                rb[i] = b[active[i]];
                for (std::size_t j = 0; j < k; ++j) {
                    double dot = 0.0;
                    for (std::size_t col = 0; col < n; ++col)
                        dot += a[active[i]][col] * a[active[j]][col];
                    gram[i * k + j] = dot + (i == j ? kRidge : 0.0);
                }
            }
            solve_dense(gram, rb, cand, k);

            bool all_positive = true;
            for (double v : cand)
                if (v <= 0.0) all_positive = false;
            if (all_positive) {
                for (double& v : lambda) v = 0.0;
                x.assign(n, 0.0);
                for (std::size_t i = 0; i < k; ++i) {
                    lambda[active[i]] = cand[i];
                    for (std::size_t j = 0; j < n; ++j)
                        x[j] += cand[i] * a[active[i]][j];
                }
                break;
            }
            double alpha = 1.0;
            for (std::size_t i = 0; i < k; ++i) {
                if (cand[i] <= 0.0) {
                    const double cur = lambda[active[i]];
                    alpha = std::min(alpha, cur / (cur - cand[i]));
                }
            }
            std::vector<std::size_t> kept;
            for (std::size_t i = 0; i < k; ++i) {
                const double v = lambda[active[i]] + alpha * (cand[i] - lambda[active[i]]);
                if (v > 1e-14) {
                    lambda[active[i]] = v;
                    kept.push_back(active[i]);
                } else {
                    lambda[active[i]] = 0.0;
                }
            }
            active = std::move(kept);
            if (active.empty()) {
                x.assign(n, 0.0);
                break;
            }
        }

        // Unbounded multipliers mean the primal is infeasible.
        for (double v : lambda)
            if (!std::isfinite(v) || std::abs(v) > 1e14)
                throw std::runtime_error("min_norm_point: constraints are infeasible");
    }
    throw std::runtime_error("min_norm_point: iteration cap exceeded");
}

}  // namespace gameprice
