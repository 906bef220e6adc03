#pragma once

#include <cstdint>
#include <vector>

#include "gameprice/game.hpp"
#include "gameprice/solver.hpp"

namespace gameprice {

struct SimulationSpec {
    Game game;
    double price = 0.0;       // u
    double proportion = 0.0;  // t
    std::uint64_t steps = 100000;
    std::uint64_t seed = 1;
    unsigned streams = 1;
};

struct SimulationResult {
    double geometric_mean_growth = 0.0;  // exp(mean_log)
    double mean_log = 0.0;
    double stderr_log = 0.0;
    std::vector<double> stream_means;  // mean log factor per stream
};

// Repeated fractional reinvestment: each step draws an atom by weight and
// multiplies wealth by t*payoff/u + 1 - t, accumulated in log space.
// Draws are a pure function of (seed, step index), and the reduction runs
// over fixed-size chunks in index order, so the headline statistics do not
// depend on the stream count or on how many threads execute the chunks.
// n_threads = 0 uses one worker per stream.
SimulationResult simulate(const SimulationSpec& spec, unsigned n_threads = 0);

struct VerifyReport {
    PricingOutcome outcome;
    SimulationResult sim;
    double theoretical_growth = 0.0;  // e^r
    double z = 0.0;                   // (mean_log - r) / stderr_log
};

// Prices the game, simulates at the solution, and reports how far the
// simulated mean log growth sits from r in standard errors.
VerifyReport verify_price(const Game& g, const Rate& rate,
                          std::uint64_t steps = 100000, std::uint64_t seed = 1,
                          unsigned streams = 1, const SolverConfig& cfg = {});

}  // namespace gameprice
