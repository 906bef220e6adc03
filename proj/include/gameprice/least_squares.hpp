#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gameprice/game.hpp"
#include "gameprice/solver.hpp"

namespace gameprice {

// n games on a common distribution with their growth-optimal prices u_i
// and discounted-expectation gaps d_i = E_i/e^r - u_i (always >= 0).
struct Portfolio {
    std::vector<Game> games;
    Rate rate;
    std::vector<double> u;
    std::vector<double> d;

    std::size_t size() const { return games.size(); }
};

Portfolio make_portfolio(std::vector<Game> games, const Rate& rate,
                         const SolverConfig& cfg = {});

// A candidate proportion vector in [0,1]^n with its worst-case ratio.
struct PriceVector {
    std::vector<double> t;
    double L_value = 0.0;
    std::vector<double> worst_p;
    bool feasible = false;
};

struct LsqConfig {
    SolverConfig solver{};
    double stop_tol = 1e-6;       // cutting-plane termination on L - 1
    double membership_tol = 1e-8;
    int max_cuts = 100;
    int nm_iterations = 200;
};

struct MinNormResult {
    PriceVector x;
    double norm = 0.0;
    double certificate_L = 0.0;
    int iterations = 0;
    std::vector<std::vector<double>> cuts;  // accumulated simplex points
    std::vector<double> norm_history;       // min-norm value per subproblem
};

// Number of barycentric subdivisions used for the simplex grid.
int simplex_grid_subdivisions(std::size_t n);

// Michelot projection onto the probability simplex.
std::vector<double> project_to_simplex(std::vector<double> y);

// Price of the atom-wise convex combination sum_i p_i A_i.
double price_of_mixture(const Portfolio& port, std::span<const double> p,
                        const SolverConfig& cfg = {});

// max over the simplex of price(mixture) / sum p_i (u_i + t_i d_i),
// with the attaining point. Dense barycentric grid followed by
// Nelder-Mead refinement; exact to the refinement resolution only.
std::pair<double, std::vector<double>> L_value(const Portfolio& port,
                                               std::span<const double> t,
                                               const LsqConfig& cfg = {});

// L(t) <= 1 + membership tolerance.
bool membership(const Portfolio& port, std::span<const double> t,
                const LsqConfig& cfg = {});

// Minimum-norm (x_i) in the feasible set {L <= 1} intersected with [0,1]^n,
// by cutting planes over min-norm subproblems. On termination L(x) is 1 to
// within the inner maximization accuracy whenever x != 0.
MinNormResult least_squares_prices(const Portfolio& port, const LsqConfig& cfg = {});

}  // namespace gameprice
