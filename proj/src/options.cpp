#include "gameprice/options.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gameprice/quadrature.hpp"

namespace gameprice {

void PutModel::validate() const {
    if (!(S > 0.0 && K > 0.0 && T > 0.0 && sigma > 0.0 && r > 0.0))
        throw std::invalid_argument("PutModel: S, K, T, sigma, r must all be positive");
}

void QuadratureConfig::validate() const {
    if (nodes_per_panel < 8)
        throw std::invalid_argument("QuadratureConfig: nodes_per_panel must be >= 8");
    if (!(half_width_sigmas > 0.0))
        throw std::invalid_argument("QuadratureConfig: half_width_sigmas must be positive");
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

namespace {

// The two N arguments shared by the expectation and the BS formula.
void put_d_args(const PutModel& m, double& neg_d2, double& neg_d1) {
    const double sd = m.sigma * std::sqrt(m.T);
    const double log_sk = std::log(m.S / m.K);
    neg_d2 = -(log_sk + (m.r - 0.5 * m.sigma * m.sigma) * m.T) / sd;
    neg_d1 = -(log_sk + (m.r + 0.5 * m.sigma * m.sigma) * m.T) / sd;
}

}  // namespace

double put_expectation(const PutModel& m) {
    m.validate();
    double neg_d2, neg_d1;
    put_d_args(m, neg_d2, neg_d1);
    return m.K * norm_cdf(neg_d2) - m.S * std::exp(m.r * m.T) * norm_cdf(neg_d1);
}

double black_scholes_put(const PutModel& m) {
    m.validate();
    double neg_d2, neg_d1;
    put_d_args(m, neg_d2, neg_d1);
    return m.K * std::exp(-m.r * m.T) * norm_cdf(neg_d2) - m.S * norm_cdf(neg_d1);
}

Game build_put_game(const PutModel& m, const QuadratureConfig& q) {
    m.validate();
    q.validate();

    const double sd = m.sigma * std::sqrt(m.T);
    const double mu = -0.5 * m.sigma * m.sigma * m.T;
    const double forward = m.S * std::exp(m.r * m.T);
    const double kink = std::log(m.K / m.S) - m.r * m.T;  // payoff reaches 0 here
    const double lo = mu - q.half_width_sigmas * sd;
    const double hi = mu + q.half_width_sigmas * sd;
    const double split = std::min(std::max(kink, lo), hi);

    const GaussLegendreRule rule = gauss_legendre(q.nodes_per_panel);
    std::vector<Atom> atoms;
    atoms.reserve(2 * static_cast<std::size_t>(q.nodes_per_panel));
    const double dens_norm = 1.0 / (sd * std::sqrt(2.0 * std::numbers::pi));

    for (const auto& [a, b] : {std::pair{lo, split}, std::pair{split, hi}}) {
        if (!(b > a)) continue;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < q.nodes_per_panel; ++i) {
            const double x = mid + half * rule.nodes[i];
            const double z = (x - mu) / sd;
            const double density = dens_norm * std::exp(-0.5 * z * z);
            atoms.push_back({std::max(m.K - forward * std::exp(x), 0.0),
                             density * rule.weights[i] * half});
        }
    }

    // Fold the truncated tail mass into the weights.
    double total = 0.0;
    for (const Atom& a : atoms) total += a.weight;
    for (Atom& a : atoms) a.weight /= total;
    return Game(std::move(atoms), "lognormal_put");
}

PutComparison demo_compare(const PutModel& m, const SolverConfig& cfg,
                           const QuadratureConfig& q) {
    PutComparison cmp;
    const Game game = build_put_game(m, q);
    const Rate horizon_rate(m.r * m.T);

    cmp.expectation = put_expectation(m);
    cmp.growth_target = horizon_rate.growth_target;
    cmp.growth_optimal = price(game, horizon_rate, cfg);
    cmp.bs_price = black_scholes_put(m);
    cmp.bs_proportion = optimal_proportion(game, cmp.bs_price, cfg);
    cmp.bs_growth = growth(game, cmp.bs_price, cmp.bs_proportion);
    return cmp;
}

}  // namespace gameprice
