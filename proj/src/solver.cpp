#include "gameprice/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gameprice {

namespace {

// Relative window around e^r inside which the lower bracket end counts as
// a root (regime boundary f = h, where the interior system degenerates).
constexpr double kRegimeTieRel = 1e-8;

// Lower bracket floor for u, relative to the expectation.
constexpr double kPriceFloorRel = 1e-8;

// Marginal root in t over [0, 1 - margin] without bracket preconditions.
// Clamps to the boundary when the sign change lies outside.
double inner_root(const Game& g, double u, const SolverConfig& cfg) {
    const double ceiling = 1.0 - cfg.t_ceiling_margin;
    if (marginal(g, u, 0.0) <= 0.0) return 0.0;
    if (marginal(g, u, ceiling) >= 0.0) return ceiling;
    double lo = 0.0, hi = ceiling;
    for (int i = 0; i < cfg.max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double v = marginal(g, u, mid);
        if (std::abs(v) <= cfg.inner_tol) return mid;
        (v > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

PricingOutcome make_outcome(const Game& g, double u, double t, Regime regime,
                            double target) {
    PricingOutcome out;
    out.price = u;
    out.proportion = t;
    out.regime = regime;
    out.growth_at_solution = growth(g, u, t);
    out.growth_residual = out.growth_at_solution - target;
    out.marginal_residual = marginal(g, u, t);
    return out;
}

}  // namespace

const char* to_string(Regime r) {
    return r == Regime::FullInvestment ? "full_investment" : "interior";
}

void SolverConfig::validate() const {
    if (!(outer_tol > 0.0) || !(inner_tol > 0.0) || !(t_ceiling_margin > 0.0))
        throw std::invalid_argument("SolverConfig: tolerances must be positive");
    if (max_iter < 10)
        throw std::invalid_argument("SolverConfig: max_iter must be >= 10");
}

double growth(const Game& g, double u, double t) {
    if (!(u > 0.0)) throw std::invalid_argument("growth: u must be positive");
    if (!(t >= 0.0)) throw std::invalid_argument("growth: t must be nonnegative");
    double s = 0.0;
    for (const Atom& a : g.atoms()) {
        const double arg = a.payoff * t / u - t + 1.0;
        if (!(arg > 0.0))
            throw std::domain_error("growth: log argument <= 0 for payoff " +
                                    std::to_string(a.payoff));
        s += a.weight * std::log(arg);
    }
    return std::exp(s);
}

double marginal(const Game& g, double u, double t) {
    if (!(u > 0.0)) throw std::invalid_argument("marginal: u must be positive");
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("marginal: t must lie in [0, 1]");
    if (t == 1.0 && g.has_zero_payoff())
        return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (const Atom& a : g.atoms()) {
        const double den = a.payoff * t - u * t + u;
        s += a.weight * (a.payoff - u) / den;
    }
    return s;
}

double optimal_proportion(const Game& g, double u, const SolverConfig& cfg) {
    cfg.validate();
    if (!(u > harmonic_price(g) && u < expectation(g)))
        throw std::invalid_argument(
            "optimal_proportion: u must lie strictly between the harmonic price "
            "and the expectation");
    return inner_root(g, u, cfg);
}

std::optional<PricingOutcome> interior_price(const Game& g, const Rate& rate,
                                             const SolverConfig& cfg) {
    cfg.validate();
    const double target = rate.growth_target;
    const double e = expectation(g);
    const double h = harmonic_price(g);
    double lo = std::max(h, kPriceFloorRel * e);
    double hi = e;
    if (!(lo < hi)) return std::nullopt;  // degenerate bracket (constant-like game)

    // The outer function growth(u, t*(u)) strictly decreases in u and equals
    // 1 at u = e; a root exists iff it still exceeds the target at lo.
    const double g_lo = growth(g, lo, inner_root(g, lo, cfg));
    if (g_lo <= target) {
        if (g_lo >= target * (1.0 - kRegimeTieRel))
            return make_outcome(g, lo, inner_root(g, lo, cfg), Regime::Interior, target);
        return std::nullopt;
    }

    int it = 0;
    for (; it < cfg.max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double gm = growth(g, mid, inner_root(g, mid, cfg));
        (gm > target ? lo : hi) = mid;
    }
    if (it >= cfg.max_iter)
        throw std::runtime_error("interior_price: no convergence within max_iter");

    const double u = 0.5 * (lo + hi);
    PricingOutcome out =
        make_outcome(g, u, inner_root(g, u, cfg), Regime::Interior, target);
    if (std::abs(out.growth_residual) > cfg.outer_tol * target)
        throw std::runtime_error("interior_price: growth equation residual " +
                                 std::to_string(out.growth_residual) +
                                 " above tolerance");
    return out;
}

PricingOutcome price(const Game& g, const Rate& rate, const SolverConfig& cfg) {
    cfg.validate();
    const double f = geometric_price(g, rate);
    if (g.min_payoff() > 0.0 && f <= harmonic_price(g))
        return make_outcome(g, f, 1.0, Regime::FullInvestment, rate.growth_target);
    auto out = interior_price(g, rate, cfg);
    if (!out)
        throw NoSolutionError("price: target growth exp(" + std::to_string(rate.r) +
                              ") exceeds the attainable supremum for game '" +
                              g.label() + "'");
    return *out;
}

PricingOutcome two_point_price(double a, double b, const Rate& rate) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("two_point_price: payoffs must be positive");
    const double target = rate.growth_target;
    const double e = 0.5 * (a + b);
    const double root_ab = std::sqrt(a * b);

    PricingOutcome out;
    if (e <= root_ab * target) {
        out.price = root_ab / target;
        out.proportion = 1.0;
        out.regime = Regime::FullInvestment;
        out.growth_at_solution = root_ab / out.price;
        const double h = 2.0 * a * b / (a + b);
        out.marginal_residual = 1.0 - out.price / h;
    } else {
        if (a < b) std::swap(a, b);
        const double kappa = 0.5 * (1.0 - std::sqrt(1.0 - 1.0 / (target * target)));
        const double u = kappa * a + (1.0 - kappa) * b;
        const double t = u * (e - u) / ((a - u) * (u - b));
        out.price = u;
        out.proportion = t;
        out.regime = Regime::Interior;
        const double da = a * t - u * t + u;
        const double db = b * t - u * t + u;
        out.growth_at_solution = std::sqrt(da * db) / u;
        out.marginal_residual = 0.5 * ((a - u) / da + (b - u) / db);
    }
    out.growth_residual = out.growth_at_solution - target;
    return out;
}

}  // namespace gameprice
