#include <doctest.h>

#include <cmath>
#include <random>

#include "gameprice/least_squares.hpp"
#include "gameprice/mixture.hpp"
#include "oracle_support.hpp"

using namespace gameprice;

namespace {

Portfolio spec_portfolio() {
    return make_portfolio({two_point(19.0, 1.0), two_point(10.0, 4.0)}, Rate(0.05));
}

// Mixed-regime pair: the mixture price is strictly concave in p, so the
// min-norm point sits away from the origin.
Portfolio curved_portfolio() {
    return make_portfolio({two_point(19.0, 1.0), two_point(6.0, 5.0)}, Rate(0.05));
}

}  // namespace

TEST_CASE("make_portfolio computes prices and discounted gaps") {
    const auto port = spec_portfolio();
    CHECK(port.u[0] == doctest::Approx(7.22364102842).epsilon(1e-9));
    CHECK(port.u[1] == doctest::Approx(6.07454700947).epsilon(1e-9));
    CHECK(port.d[0] == doctest::Approx(2.28865321659).epsilon(1e-8));
    CHECK(port.d[1] == doctest::Approx(0.584058962033).epsilon(1e-8));
    for (double d : port.d) CHECK(d >= -1e-9);

    CHECK_THROWS_AS(make_portfolio({}, Rate(0.05)), std::invalid_argument);
    CHECK_THROWS_AS(
        make_portfolio({two_point(19.0, 1.0), Game({{1.0, 0.3}, {2.0, 0.7}})},
                       Rate(0.05)),
        std::invalid_argument);
}

TEST_CASE("price_of_mixture at the vertices and against the curve path") {
    const auto port = spec_portfolio();
    const std::vector<double> e1{1.0, 0.0}, e2{0.0, 1.0};
    CHECK(price_of_mixture(port, e1) == doctest::Approx(port.u[0]).epsilon(1e-12));
    CHECK(price_of_mixture(port, e2) == doctest::Approx(port.u[1]).epsilon(1e-12));

    // Identical games price the same at every p.
    const auto same = make_portfolio({two_point(19.0, 1.0), two_point(19.0, 1.0)},
                                     Rate(0.05));
    const std::vector<double> half{0.5, 0.5};
    CHECK(price_of_mixture(same, half) ==
          doctest::Approx(same.u[0]).epsilon(1e-12));

    // n = 2 reduces to the two-game mixture curve.
    const auto c = curves(port.games[0], port.games[1], port.rate, 5);
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        const std::vector<double> p{c.grid[i], 1.0 - c.grid[i]};
        CHECK(price_of_mixture(port, p) ==
              doctest::Approx(c.u_vals[i]).epsilon(1e-10));
    }

    const std::vector<double> bad{0.7, 0.7};
    CHECK_THROWS_AS(price_of_mixture(port, bad), std::invalid_argument);
}

TEST_CASE("L_value singleton and identical-pair cases") {
    const auto solo = make_portfolio({two_point(19.0, 1.0)}, Rate(0.05));
    const std::vector<double> zero1{0.0};
    auto [l0, p0] = L_value(solo, zero1);
    CHECK(l0 == 1.0);
    CHECK(p0 == std::vector<double>{1.0});
    const std::vector<double> half1{0.5};
    CHECK(L_value(solo, half1).first ==
          doctest::Approx(solo.u[0] / (solo.u[0] + 0.5 * solo.d[0])).epsilon(1e-14));

    const auto same = make_portfolio({two_point(19.0, 1.0), two_point(19.0, 1.0)},
                                     Rate(0.05));
    const std::vector<double> zero2{0.0, 0.0};
    const auto [l, p] = L_value(same, zero2);
    CHECK(std::abs(l - 1.0) <= 1e-12);
    CHECK(p.size() == 2);
    CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("L_value agrees with the dense grid oracle") {
    const oracle::TwoPointPair inst{19.0, 1.0, 6.0, 5.0, 0.05};
    const auto data = oracle::pair_data(inst);
    const auto port = curved_portfolio();

    const std::vector<double> zero{0.0, 0.0};
    const auto [l, p] = L_value(port, zero);
    const double l_oracle = oracle::grid_L(data, 0.0, 0.0);
    CHECK(l >= l_oracle - 1e-9);  // refinement can only sharpen the grid max
    CHECK(l == doctest::Approx(l_oracle).epsilon(1e-6));
    CHECK(l > 1.0);
    CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p[0] >= 0.0);
    CHECK(p[1] >= 0.0);

    // The flat instance pins L(0) to 1 (the mixture price is linear in p).
    const auto flat = spec_portfolio();
    CHECK(L_value(flat, zero).first == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("membership") {
    const auto port = curved_portfolio();
    const std::vector<double> ones{1.0, 1.0};
    const std::vector<double> zero{0.0, 0.0};
    CHECK(membership(port, ones));
    CHECK_FALSE(membership(port, zero));

    const auto solo = make_portfolio({two_point(19.0, 1.0)}, Rate(0.05));
    const std::vector<double> z1{0.0};
    CHECK(membership(solo, z1));
}

TEST_CASE("least_squares_prices: trivial cases are exact") {
    const auto solo = make_portfolio({two_point(19.0, 1.0)}, Rate(0.05));
    const auto res1 = least_squares_prices(solo);
    CHECK(res1.x.t == std::vector<double>{0.0});
    CHECK(res1.norm == 0.0);
    CHECK(res1.certificate_L == 1.0);
    CHECK(res1.iterations == 0);
    CHECK(res1.x.feasible);

    const auto same = make_portfolio({two_point(19.0, 1.0), two_point(19.0, 1.0)},
                                     Rate(0.05));
    const auto res2 = least_squares_prices(same);
    CHECK(res2.x.t == std::vector<double>({0.0, 0.0}));
    CHECK(std::abs(res2.certificate_L - 1.0) <= 1e-12);
}

TEST_CASE("least_squares_prices matches the grid projection (flat instance)") {
    const oracle::TwoPointPair inst{19.0, 1.0, 10.0, 4.0, 0.05};
    const auto data = oracle::pair_data(inst);
    const auto expected = oracle::grid_min_norm(data);

    const auto res = least_squares_prices(spec_portfolio());
    CHECK(std::abs(res.x.t[0] - expected[0]) <= 2e-3);
    CHECK(std::abs(res.x.t[1] - expected[1]) <= 2e-3);
    CHECK(std::abs(res.certificate_L - 1.0) <= 1e-4);
}

TEST_CASE("least_squares_prices matches the grid projection (curved instance)") {
    const oracle::TwoPointPair inst{19.0, 1.0, 6.0, 5.0, 0.05};
    const auto data = oracle::pair_data(inst);
    const auto expected = oracle::grid_min_norm(data);

    const auto port = curved_portfolio();
    const auto res = least_squares_prices(port);
    CHECK(res.x.t[0] > 0.0);  // genuinely away from the origin
    CHECK(std::abs(res.x.t[0] - expected[0]) <= 1e-2);
    CHECK(std::abs(res.x.t[1] - expected[1]) <= 1e-2);
    const double oracle_norm = std::sqrt(expected[0] * expected[0] +
                                         expected[1] * expected[1]);
    CHECK(std::abs(res.norm - oracle_norm) <= 2e-3);
    CHECK(std::abs(res.certificate_L - 1.0) <= 1e-4);
    CHECK(res.iterations <= 100);

    // Subproblem norms grow as cuts accumulate.
    for (std::size_t i = 1; i < res.norm_history.size(); ++i)
        CHECK(res.norm_history[i] >= res.norm_history[i - 1] - 1e-12);

    // Every cut must contain the feasible set: check at all-ones (always
    // feasible) and at the oracle projection (feasible up to grid bias).
    for (std::size_t k = 0; k < res.cuts.size(); ++k) {
        const auto& p = res.cuts[k];
        REQUIRE(p.size() == 2);
        CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-12));
        const double cut_value = price_of_mixture(port, p);
        const double at_ones = p[0] * (port.u[0] + port.d[0]) +
                               p[1] * (port.u[1] + port.d[1]);
        CHECK(at_ones >= cut_value - 1e-9);
        const double at_oracle = p[0] * (port.u[0] + expected[0] * port.d[0]) +
                                 p[1] * (port.u[1] + expected[1] * port.d[1]);
        CHECK(at_oracle >= cut_value - 1e-2);
    }

    // Slightly shrinking the solution exits the feasible set.
    const std::vector<double> shrunk{0.9 * res.x.t[0], 0.9 * res.x.t[1]};
    CHECK_FALSE(membership(port, shrunk));
}

TEST_CASE("feasible set is convex along random segments") {
    const auto port = curved_portfolio();
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LsqConfig cfg;

    std::vector<std::vector<double>> feasible;
    while (feasible.size() < 12) {
        std::vector<double> t{unit(rng), unit(rng)};
        if (L_value(port, t, cfg).first <= 1.0 + 1e-9) feasible.push_back(t);
    }
    for (int trial = 0; trial < 40; ++trial) {
        const auto& s = feasible[rng() % feasible.size()];
        const auto& e = feasible[rng() % feasible.size()];
        const double lam = unit(rng);
        const std::vector<double> combo{lam * s[0] + (1.0 - lam) * e[0],
                                        lam * s[1] + (1.0 - lam) * e[1]};
        CHECK(membership(port, combo, cfg));
    }
}

TEST_CASE("project_to_simplex") {
    auto p = project_to_simplex({0.5, 0.5});
    CHECK(p[0] == doctest::Approx(0.5));
    p = project_to_simplex({2.0, 0.0});
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(0.0));
    p = project_to_simplex({-1.0, -2.0, 0.5});
    double sum = 0.0;
    for (double v : p) {
        CHECK(v >= 0.0);
        sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}
