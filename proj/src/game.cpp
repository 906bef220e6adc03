#include "gameprice/game.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace gameprice {

Rate::Rate(double r_) : r(r_), growth_target(std::exp(r_)) {
    if (!std::isfinite(r_) || r_ <= 0.0)
        throw std::invalid_argument("Rate: r must be positive and finite");
}

Game::Game(std::vector<Atom> atoms, std::string label)
    : atoms_(std::move(atoms)), label_(std::move(label)) {
    if (atoms_.empty())
        throw std::invalid_argument("Game: needs at least one atom");

    double total = 0.0;
    double max_payoff = 0.0;
    min_payoff_ = std::numeric_limits<double>::infinity();
    for (const Atom& a : atoms_) {
        if (!std::isfinite(a.payoff) || a.payoff < 0.0)
            throw std::invalid_argument("Game: payoffs must be finite and nonnegative");
        if (!std::isfinite(a.weight) || a.weight <= 0.0)
            throw std::invalid_argument("Game: weights must be finite and positive");
        total += a.weight;
        min_payoff_ = std::min(min_payoff_, a.payoff);
        max_payoff = std::max(max_payoff, a.payoff);
    }
    if (max_payoff <= 0.0)
        throw std::invalid_argument("Game: at least one payoff must be positive");
    if (total <= 0.0)
        throw std::invalid_argument("Game: total weight must be positive");
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("Game: weights must sum to 1 (got " +
                                    std::to_string(total) + ")");
    for (Atom& a : atoms_) a.weight /= total;
}

Game two_point(double a, double b, std::string label) {
    return Game({{a, 0.5}, {b, 0.5}}, std::move(label));
}

double expectation(const Game& g) {
    double e = 0.0;
    for (const Atom& a : g.atoms()) e += a.payoff * a.weight;
    return e;
}

double geometric_price(const Game& g, const Rate& rate) {
    if (g.has_zero_payoff()) return 0.0;  // log integral diverges to -inf
    double s = 0.0;
    for (const Atom& a : g.atoms()) s += a.weight * std::log(a.payoff);
    return std::exp(s) / rate.growth_target;
}

double harmonic_price(const Game& g) {
    if (g.has_zero_payoff()) return 0.0;  // reciprocal integral diverges
    double s = 0.0;
    for (const Atom& a : g.atoms()) s += a.weight / a.payoff;
    return 1.0 / s;
}

Game scale(const Game& g, double k) {
    if (!std::isfinite(k) || k <= 0.0)
        throw std::invalid_argument("scale: k must be positive");
    std::vector<Atom> atoms = g.atoms();
    for (Atom& a : atoms) a.payoff *= k;
    return Game(std::move(atoms), g.label());
}

bool same_distribution(const Game& a, const Game& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a.atoms()[i].weight - b.atoms()[i].weight) > tol) return false;
    return true;
}

Game mix(const Game& a, const Game& b, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("mix: p must lie in [0, 1]");
    if (!same_distribution(a, b))
        throw std::invalid_argument("mix: games must share the same distribution");
    std::vector<Atom> atoms(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        atoms[i].payoff = p * a.atoms()[i].payoff + (1.0 - p) * b.atoms()[i].payoff;
        atoms[i].weight = a.atoms()[i].weight;
    }
    return Game(std::move(atoms));
}

}  // namespace gameprice
