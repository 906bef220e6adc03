#pragma once

#include <random>
#include <vector>

#include "gameprice/game.hpp"

namespace testsupport {

// Random game with 1..max_atoms atoms, payoffs in (0.01, 100), normalized
// weights. With allow_zero, one atom occasionally pays 0.
inline gameprice::Game random_game(std::mt19937_64& rng, int max_atoms = 8,
                                   bool allow_zero = false) {
    std::uniform_int_distribution<int> n_dist(1, max_atoms);
    std::uniform_real_distribution<double> payoff(0.01, 100.0);
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    const int n = n_dist(rng);
    std::vector<gameprice::Atom> atoms(n);
    double total = 0.0;
    for (auto& a : atoms) {
        a.payoff = payoff(rng);
        a.weight = weight(rng);
        total += a.weight;
    }
    for (auto& a : atoms) a.weight /= total;
    if (allow_zero && n >= 2 && coin(rng) < 0.4) atoms[0].payoff = 0.0;
    return gameprice::Game(atoms);
}

}  // namespace testsupport
