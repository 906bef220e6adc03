#pragma once

#include "gameprice/game.hpp"
#include "gameprice/solver.hpp"

namespace gameprice {

// European put under a lognormal terminal stock price S e^{rT} e^X with
// X ~ N(-sigma^2 T / 2, sigma^2 T).
struct PutModel {
    double S = 0.0;      // current stock price
    double K = 0.0;      // strike
    double T = 0.0;      // horizon in years
    double sigma = 0.0;  // volatility per sqrt(year)
    double r = 0.0;      // continuously compounded rate per year

    void validate() const;
};

struct QuadratureConfig {
    int nodes_per_panel = 64;
    double half_width_sigmas = 10.0;

    void validate() const;
};

// Standard normal CDF.
double norm_cdf(double x);

// Closed-form mean payoff of the put.
double put_expectation(const PutModel& m);

// Black-Scholes put price; equals put_expectation * e^{-rT}.
double black_scholes_put(const PutModel& m);

// Discretizes the put payoff distribution into a Game: Gauss-Legendre
// panels split at the payoff kink, weights renormalized over the
// truncated support.
Game build_put_game(const PutModel& m, const QuadratureConfig& q = {});

struct PutComparison {
    double expectation = 0.0;        // closed-form E
    double growth_target = 0.0;      // e^{rT}
    PricingOutcome growth_optimal;   // price and proportion from the solver
    double bs_price = 0.0;           // Black-Scholes put price
    double bs_proportion = 0.0;      // optimal proportion at the BS price
    double bs_growth = 0.0;          // growth achieved at the BS price
};

// Prices the put game at horizon growth e^{rT} and contrasts it with the
// Black-Scholes price and the growth an investor attains there.
PutComparison demo_compare(const PutModel& m, const SolverConfig& cfg = {},
                           const QuadratureConfig& q = {});

}  // namespace gameprice
