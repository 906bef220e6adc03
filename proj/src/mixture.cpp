#include "gameprice/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gameprice {

namespace {

double fh_gap(const Game& a, const Game& b, const Rate& rate, double p) {
    const Game m = mix(a, b, p);
    return geometric_price(m, rate) - harmonic_price(m);
}

}  // namespace

std::vector<double> fh_crossings(const Game& a, const Game& b, const Rate& rate,
                                 int scan_points) {
    if (scan_points < 2)
        throw std::invalid_argument("fh_crossings: scan_points must be >= 2");
    std::vector<double> roots;
    double prev_p = 0.0;
    double prev_gap = fh_gap(a, b, rate, 0.0);
    for (int i = 1; i < scan_points; ++i) {
        const double p = static_cast<double>(i) / (scan_points - 1);
        const double gap = fh_gap(a, b, rate, p);
        if ((prev_gap < 0.0 && gap > 0.0) || (prev_gap > 0.0 && gap < 0.0)) {
            double lo = prev_p, hi = p;
            double glo = prev_gap;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                const double gm = fh_gap(a, b, rate, mid);
                if (gm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((glo < 0.0) == (gm < 0.0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_p = p;
        prev_gap = gap;
    }
    return roots;
}

MixtureCurves curves(const Game& a, const Game& b, const Rate& rate, int n_grid,
                     const SolverConfig& cfg) {
    if (n_grid < 3) throw std::invalid_argument("curves: n_grid must be >= 3");
    if (!same_distribution(a, b))
        throw std::invalid_argument("curves: games must share the same distribution");

    std::vector<double> grid(n_grid);
    for (int i = 0; i < n_grid; ++i)
        grid[i] = static_cast<double>(i) / (n_grid - 1);
    for (double root : fh_crossings(a, b, rate))
        grid.push_back(root);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double x, double y) { return std::abs(x - y) < 1e-14; }),
               grid.end());

    MixtureCurves c;
    c.grid = grid;
    for (double p : grid) {
        const Game m = mix(a, b, p);
        c.f_vals.push_back(geometric_price(m, rate));
        c.h_vals.push_back(harmonic_price(m));
        try {
            const PricingOutcome out = price(m, rate, cfg);
            c.u_vals.push_back(out.price);
            c.regime.push_back(out.regime);
            if (out.regime == Regime::Interior) {
                c.g_vals.emplace_back(out.price);
            } else {
                const auto interior = interior_price(m, rate, cfg);
                c.g_vals.emplace_back(interior ? std::optional<double>(interior->price)
                                               : std::nullopt);
            }
        } catch (const NoSolutionError& e) {
            throw NoSolutionError(std::string(e.what()) + " (at p = " +
                                  std::to_string(p) + ")");
        }
    }
    return c;
}

ConcavityReport check_concavity(const std::vector<double>& vals,
                                const std::vector<double>& grid, std::string name) {
    if (vals.size() < 3 || vals.size() != grid.size())
        throw std::invalid_argument("check_concavity: need >= 3 aligned samples");
    for (double v : vals)
        if (!std::isfinite(v))
            throw std::invalid_argument("check_concavity: values must be finite");

    ConcavityReport rep;
    rep.curve = std::move(name);
    for (std::size_t k = 1; k + 1 < vals.size(); ++k) {
        const double span = grid[k + 1] - grid[k - 1];
        if (!(span > 0.0)) continue;
        const double lam = (grid[k + 1] - grid[k]) / span;
        const double interp = lam * vals[k - 1] + (1.0 - lam) * vals[k + 1];
        const double excess = interp - vals[k];
        if (excess > rep.max_violation) {
            rep.max_violation = excess;
            rep.worst_triple = {grid[k - 1], grid[k + 1], lam};
        }
    }
    return rep;
}

std::vector<double> equivalence_points(const MixtureCurves& c, double tol) {
    std::vector<double> points;
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        if (std::abs(c.f_vals[i] - c.h_vals[i]) > tol) continue;
        if (c.g_vals[i]) {
            if (std::abs(c.f_vals[i] - *c.g_vals[i]) > 10.0 * tol ||
                std::abs(*c.g_vals[i] - c.h_vals[i]) > 10.0 * tol)
                throw std::logic_error(
                    "equivalence_points: f, g, h fail to coincide at p = " +
                    std::to_string(c.grid[i]));
        }
        points.push_back(c.grid[i]);
    }
    return points;
}

std::string to_csv(const MixtureCurves& c) {
    std::string out = "p,f,g,h,u,regime\n";
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        out += buf;
    };
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        num(c.grid[i]);
        out += ',';
        num(c.f_vals[i]);
        out += ',';
        if (c.g_vals[i]) num(*c.g_vals[i]);
        out += ',';
        num(c.h_vals[i]);
        out += ',';
        num(c.u_vals[i]);
        out += ',';
        out += to_string(c.regime[i]);
        out += '\n';
    }
    return out;
}

}  // namespace gameprice
