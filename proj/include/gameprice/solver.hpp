#pragma once

#include <optional>
#include <stdexcept>

#include "gameprice/game.hpp"

namespace gameprice {

enum class Regime { FullInvestment, Interior };

const char* to_string(Regime r);

struct SolverConfig {
    double outer_tol = 1e-10;        // relative tolerance on the growth equation
    double inner_tol = 1e-12;        // tolerance on the marginal root
    int max_iter = 200;              // cap per bisection loop
    double t_ceiling_margin = 1e-9;  // keeps t below 1 (zero-payoff atoms forbid t = 1)

    void validate() const;
};

struct PricingOutcome {
    double price = 0.0;       // u
    double proportion = 0.0;  // t_u
    Regime regime = Regime::Interior;
    double growth_at_solution = 0.0;
    double growth_residual = 0.0;    // growth_at_solution - e^r
    double marginal_residual = 0.0;  // marginal at (price, proportion)
};

// The target growth e^r exceeds the attainable supremum for this game.
class NoSolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Expected geometric growth factor per round at stake u and proportion t:
// exp(sum w log(payoff*t/u - t + 1)). Throws std::domain_error if any
// atom's argument is <= 0.
double growth(const Game& g, double u, double t);

// d/dt of log growth: sum w (payoff - u) / (payoff*t - u*t + u).
// Returns -infinity exactly when t = 1 and the game has a zero-payoff atom.
double marginal(const Game& g, double u, double t);

// Root of the marginal in t for u inside (harmonic_price, expectation).
double optimal_proportion(const Game& g, double u, const SolverConfig& cfg = {});

// Solves the simultaneous equations regardless of the regime test.
// Empty when the growth equation has no root in the u bracket, i.e. the
// target already exceeds the attainable growth at the lower bracket end.
std::optional<PricingOutcome> interior_price(const Game& g, const Rate& rate,
                                             const SolverConfig& cfg = {});

// Growth-optimal price and proportion. Full investment when the game has
// no zero-payoff atom and geometric_price <= harmonic_price; otherwise the
// interior solve. Throws NoSolutionError when the target is unattainable.
PricingOutcome price(const Game& g, const Rate& rate, const SolverConfig& cfg = {});

// Closed form for the two-outcome game with payoffs a, b of weight 1/2:
// full investment gives sqrt(ab)/e^r; otherwise u = kappa*a + (1-kappa)*b
// with kappa = (1 - sqrt(1 - 1/e^{2r}))/2 (a >= b) and
// t = u(E-u)/((a-u)(u-b)). Kept free of the numeric path so the two
// routes can check each other.
PricingOutcome two_point_price(double a, double b, const Rate& rate);

}  // namespace gameprice
