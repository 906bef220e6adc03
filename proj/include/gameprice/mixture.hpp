#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gameprice/game.hpp"
#include "gameprice/solver.hpp"

namespace gameprice {

// The four price curves of a two-game mixture, sampled over a p-grid.
// g is absent where the interior system has no solution.
struct MixtureCurves {
    std::vector<double> grid;
    std::vector<double> f_vals;
    std::vector<std::optional<double>> g_vals;
    std::vector<double> h_vals;
    std::vector<double> u_vals;
    std::vector<Regime> regime;
};

struct ConcavityReport {
    std::string curve;
    double max_violation = 0.0;
    // (p_left, p_right, lambda) of the worst triple, when a violation exists.
    std::optional<std::array<double, 3>> worst_triple;
};

// Roots of f - h in (0, 1), located by bisection on sign changes of a
// uniform scan; these are the regime boundaries (all four curves meet).
std::vector<double> fh_crossings(const Game& a, const Game& b, const Rate& rate,
                                 int scan_points = 257);

// Samples f, g, h, u on n_grid uniform points plus any regime-crossing
// roots. Solver failures are reported with the offending p.
MixtureCurves curves(const Game& a, const Game& b, const Rate& rate, int n_grid,
                     const SolverConfig& cfg = {});

// Largest excess of the chord interpolation over the curve across
// consecutive sample triples (0 when the sampled curve is concave). Zero
// here implies no sampled triple violates concavity.
ConcavityReport check_concavity(const std::vector<double>& vals,
                                const std::vector<double>& grid,
                                std::string name = "");

// Grid points where |f - h| <= tol. Verifies that f, g, h agree within
// 10*tol at each such point; a violation signals a solver bug.
std::vector<double> equivalence_points(const MixtureCurves& c, double tol);

// CSV with header p,f,g,h,u,regime; 12 significant digits; absent g empty.
std::string to_csv(const MixtureCurves& c);

}  // namespace gameprice
