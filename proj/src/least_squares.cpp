#include "gameprice/least_squares.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "gameprice/minnorm.hpp"

namespace gameprice {

namespace {

void check_weights(std::span<const double> t, std::size_t n) {
    if (t.size() != n) throw std::invalid_argument("least_squares: t has wrong length");
    for (double v : t)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("least_squares: t components must lie in [0, 1]");
}

void check_simplex(std::span<const double> p, std::size_t n) {
    if (p.size() != n) throw std::invalid_argument("least_squares: p has wrong length");
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= -1e-12)) throw std::invalid_argument("least_squares: p must be nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("least_squares: p must sum to 1");
}

// Denominator sum p_i (u_i + t_i d_i) of the L ratio.
double denom(const Portfolio& port, std::span<const double> p,
             std::span<const double> t) {
    double s = 0.0;
    for (std::size_t i = 0; i < port.size(); ++i)
        s += p[i] * (port.u[i] + t[i] * port.d[i]);
    return s;
}

// Enumerates all barycentric grid points k/m over the simplex.
void for_each_grid_point(std::size_t n, int m,
                         const std::function<void(const std::vector<double>&)>& fn) {
    std::vector<int> counts(n, 0);
    std::vector<double> p(n, 0.0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            counts[i] = left;
            for (std::size_t j = 0; j < n; ++j)
                p[j] = static_cast<double>(counts[j]) / m;
            fn(p);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            counts[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, m);
}

}  // namespace

int simplex_grid_subdivisions(std::size_t n) {
    if (n <= 3) return 64;
    if (n <= 6) return 16;
    return 8;
}

std::vector<double> project_to_simplex(std::vector<double> y) {
    const std::size_t n = y.size();
    std::vector<bool> free(n, true);
    std::size_t n_free = n;
    while (n_free > 0) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (free[i]) sum += y[i];
        const double shift = (sum - 1.0) / n_free;
        bool clipped = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!free[i]) continue;
            y[i] -= shift;
            if (y[i] < 0.0) {
                y[i] = 0.0;
                free[i] = false;
                --n_free;
                clipped = true;
            }
        }
        if (!clipped) break;
    }
    if (n_free == 0 && n > 0) y[0] = 1.0;  // pathological input; pick a vertex
    return y;
}

Portfolio make_portfolio(std::vector<Game> games, const Rate& rate,
                         const SolverConfig& cfg) {
    if (games.empty()) throw std::invalid_argument("make_portfolio: needs >= 1 game");
    for (std::size_t i = 1; i < games.size(); ++i)
        if (!same_distribution(games[0], games[i]))
            throw std::invalid_argument(
                "make_portfolio: games must share the same distribution");

    Portfolio port{std::move(games), rate, {}, {}};
    for (const Game& g : port.games) {
        const PricingOutcome out = price(g, rate, cfg);
        const double gap = expectation(g) / rate.growth_target - out.price;
        if (gap < -1e-9)
            throw std::logic_error(
                "make_portfolio: price exceeds the discounted expectation "
                "(solver error)");
        port.u.push_back(out.price);
        port.d.push_back(gap);
    }
    return port;
}

double price_of_mixture(const Portfolio& port, std::span<const double> p,
                        const SolverConfig& cfg) {
    check_simplex(p, port.size());
    if (port.size() == 1) return port.u[0];
    std::vector<Atom> atoms(port.games[0].size());
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        atoms[j].weight = port.games[0].atoms()[j].weight;
        double payoff = 0.0;
        for (std::size_t i = 0; i < port.size(); ++i)
            payoff += std::max(p[i], 0.0) * port.games[i].atoms()[j].payoff;
        atoms[j].payoff = payoff;
    }
    return price(Game(std::move(atoms)), port.rate, cfg).price;
}

std::pair<double, std::vector<double>> L_value(const Portfolio& port,
                                               std::span<const double> t,
                                               const LsqConfig& cfg) {
    const std::size_t n = port.size();
    check_weights(t, n);

    if (n == 1) {
        std::vector<double> vertex{1.0};
        return {port.u[0] / (port.u[0] + t[0] * port.d[0]), vertex};
    }

    auto ratio = [&](const std::vector<double>& p) {
        return price_of_mixture(port, p, cfg.solver) / denom(port, p, t);
    };

    // Dense barycentric grid.
    double best = -1.0;
    std::vector<double> best_p;
    for_each_grid_point(n, simplex_grid_subdivisions(n),
                        [&](const std::vector<double>& p) {
                            const double v = ratio(p);
                            if (v > best) {
                                best = v;
                                best_p = p;
                            }
                        });

    // Nelder-Mead refinement from the best grid point, evaluated through
    // the simplex projection.
    const double spread = 0.5 / simplex_grid_subdivisions(n);
    std::vector<std::vector<double>> pts{best_p};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> q = best_p;
        q[i] += spread;
        pts.push_back(project_to_simplex(std::move(q)));
    }
    std::vector<double> vals;
    for (const auto& q : pts) vals.push_back(-ratio(q));

    const std::size_t np = pts.size();
    for (int it = 0; it < cfg.nm_iterations; ++it) {
        std::vector<std::size_t> order(np);
        for (std::size_t i = 0; i < np; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> spts(np);
        std::vector<double> svals(np);
        for (std::size_t i = 0; i < np; ++i) {
            spts[i] = pts[order[i]];
            svals[i] = vals[order[i]];
        }
        pts = std::move(spts);
        vals = std::move(svals);

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i + 1 < np; ++i)
            for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
        for (double& c : centroid) c /= static_cast<double>(np - 1);

        auto blend = [&](double coef) {
            std::vector<double> q(n);
            for (std::size_t j = 0; j < n; ++j)
                q[j] = centroid[j] + coef * (centroid[j] - pts[np - 1][j]);
            return project_to_simplex(std::move(q));
        };

        const auto reflected = blend(1.0);
        const double fr = -ratio(reflected);
        if (fr < vals[0]) {
            const auto expanded = blend(2.0);
            const double fe = -ratio(expanded);
            if (fe < fr) {
                pts[np - 1] = expanded;
                vals[np - 1] = fe;
            } else {
                pts[np - 1] = reflected;
                vals[np - 1] = fr;
            }
        } else if (fr < vals[np - 2]) {
            pts[np - 1] = reflected;
            vals[np - 1] = fr;
        } else {
            const auto contracted = blend(-0.5);
            const double fc = -ratio(contracted);
            if (fc < vals[np - 1]) {
                pts[np - 1] = contracted;
                vals[np - 1] = fc;
            } else {
                for (std::size_t i = 1; i < np; ++i) {
                    for (std::size_t j = 0; j < n; ++j)
                        pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
                    pts[i] = project_to_simplex(std::move(pts[i]));
                    vals[i] = -ratio(pts[i]);
                }
            }
        }
    }
    for (std::size_t i = 0; i < np; ++i) {
        if (-vals[i] > best) {
            best = -vals[i];
            best_p = pts[i];
        }
    }
    return {best, best_p};
}

bool membership(const Portfolio& port, std::span<const double> t,
                const LsqConfig& cfg) {
    return L_value(port, t, cfg).first <= 1.0 + cfg.membership_tol;
}

MinNormResult least_squares_prices(const Portfolio& port, const LsqConfig& cfg) {
    const std::size_t n = port.size();
    MinNormResult res;

    // Box rows x_i >= 0 and -x_i >= -1; cut rows appended as they arrive.
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row(n, 0.0);
        row[i] = 1.0;
        rows.push_back(row);
        rhs.push_back(0.0);
        row[i] = -1.0;
        rows.push_back(row);
        rhs.push_back(-1.0);
    }

    std::vector<double> x(n, 0.0);
    for (int it = 0;; ++it) {
        auto [ell, pstar] = L_value(port, x, cfg);
        res.iterations = it;
        if (ell <= 1.0 + cfg.stop_tol || it >= cfg.max_cuts) {
            res.x.t = x;
            res.x.L_value = ell;
            res.x.worst_p = pstar;
            res.x.feasible = ell <= 1.0 + cfg.membership_tol;
            res.certificate_L = ell;
            double nrm = 0.0;
            for (double v : x) nrm += v * v;
            res.norm = std::sqrt(nrm);
            if (it >= cfg.max_cuts && ell > 1.0 + cfg.stop_tol)
                throw std::runtime_error(
                    "least_squares_prices: cut limit reached before convergence");
            return res;
        }

        // The ratio bound at p* as a half-space: it contains the feasible
        // set, so the relaxation stays valid. The constraint value is
        // re-priced exactly rather than taken from the grid.
        const double cstar = price_of_mixture(port, pstar, cfg.solver);
        std::vector<double> row(n);
        double base = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            row[i] = pstar[i] * port.d[i];
            base += pstar[i] * port.u[i];
        }
        rows.push_back(row);
        rhs.push_back(cstar - base);
        res.cuts.push_back(pstar);

        x = min_norm_point(rows, rhs);
        for (double& v : x) v = std::min(1.0, std::max(0.0, v));
        double nrm = 0.0;
        for (double v : x) nrm += v * v;
        res.norm_history.push_back(std::sqrt(nrm));
    }
}

}  // namespace gameprice
