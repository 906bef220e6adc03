#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gameprice {

// One payoff outcome together with its probability mass.
struct Atom {
    double payoff = 0.0;
    double weight = 0.0;
};

// Continuously compounded growth target per pricing horizon.
struct Rate {
    double r = 0.0;
    double growth_target = 1.0;  // exp(r)

    explicit Rate(double r_);
};

// A game: finitely many nonnegative payoff atoms whose weights sum to 1.
// Weights within 1e-9 of 1 are renormalized at construction; larger
// deviations are rejected. Immutable after construction.
class Game {
public:
    explicit Game(std::vector<Atom> atoms, std::string label = "");

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    double min_payoff() const { return min_payoff_; }
    bool has_zero_payoff() const { return min_payoff_ == 0.0; }
    const std::string& label() const { return label_; }

private:
    std::vector<Atom> atoms_;
    double min_payoff_ = 0.0;
    std::string label_;
};

// Two payoffs with weight 1/2 each.
Game two_point(double a, double b, std::string label = "");

// Mean payoff.
double expectation(const Game& g);

// exp(sum w log payoff) / e^r; exactly 0 if any atom pays 0.
double geometric_price(const Game& g, const Rate& rate);

// 1 / sum(w / payoff); exactly 0 if any atom pays 0.
double harmonic_price(const Game& g);

// Every payoff multiplied by k > 0; weights unchanged.
Game scale(const Game& g, double k);

// Atom-wise payoff p*a + (1-p)*b for games on the same distribution.
Game mix(const Game& a, const Game& b, double p);

// Same atom count and atom-by-atom equal weights (within tol).
bool same_distribution(const Game& a, const Game& b, double tol = 1e-12);

}  // namespace gameprice
