#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "gameprice/minnorm.hpp"
#include "gameprice/quadrature.hpp"

using namespace gameprice;

TEST_CASE("gauss_legendre reproduces known rules") {
    const auto r2 = gauss_legendre(2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));

    const auto r3 = gauss_legendre(3);
    CHECK(r3.nodes[1] == 0.0);
    CHECK(r3.nodes[2] == doctest::Approx(std::sqrt(0.6)).epsilon(1e-14));
    CHECK(r3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));

    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("gauss_legendre integrates polynomials of degree 2n-1 exactly") {
    for (int n : {4, 8, 64, 256}) {
        const auto rule = gauss_legendre(n);
        double total = 0.0, x2 = 0.0, high = 0.0;
        const int k = 2 * n - 1;  // odd power integrates to 0
        for (int i = 0; i < n; ++i) {
            total += rule.weights[i];
            x2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
            high += rule.weights[i] * std::pow(rule.nodes[i], k);
        }
        CHECK(total == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(std::abs(high) <= 1e-12);
    }
}

TEST_CASE("min_norm_point on hand-checked systems") {
    // Single half-space x1 + x2 >= 2: projection of the origin is (1, 1).
    auto x = min_norm_point({{1.0, 1.0}}, {2.0});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-10));

    // Satisfied constraints leave the origin in place.
    x = min_norm_point({{1.0, 0.0}, {0.0, 1.0}}, {-1.0, -2.0});
    CHECK(x[0] == 0.0);
    CHECK(x[1] == 0.0);

    // Two active constraints pin the corner (1, 2).
    x = min_norm_point({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 2.0});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(x[1] == doctest::Approx(2.0).epsilon(1e-10));

    // Redundant parallel cuts keep the tighter one.
    x = min_norm_point({{1.0, 1.0}, {2.0, 2.0}}, {2.0, 2.0});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(min_norm_point({{1.0}, {-1.0}}, {3.0, -1.0}), std::runtime_error);
    CHECK_THROWS_AS(min_norm_point({{1.0, 1.0}}, {2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("min_norm_point matches a grid search on random polytopes") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<double>> rows;
        std::vector<double> rhs;
        // Box [-2, 2]^2 keeps every instance feasible and bounded.
        rows.push_back({1.0, 0.0});
        rhs.push_back(-2.0);
        rows.push_back({-1.0, 0.0});
        rhs.push_back(-2.0);
        rows.push_back({0.0, 1.0});
        rhs.push_back(-2.0);
        rows.push_back({0.0, -1.0});
        rhs.push_back(-2.0);
        for (int c = 0; c < 3; ++c) {
            double a = coef(rng), b = coef(rng);
            if (std::abs(a) + std::abs(b) < 0.1) a = 1.0;
            rows.push_back({a, b});
            rhs.push_back(coef(rng));
        }
        double best = 1e300;
        const int grid = 400;
        for (int i = 0; i <= grid; ++i) {
            for (int j = 0; j <= grid; ++j) {
                const double px = -2.0 + 4.0 * i / grid;
                const double py = -2.0 + 4.0 * j / grid;
                bool ok = true;
                for (std::size_t k = 0; k < rows.size(); ++k)
                    ok = ok && rows[k][0] * px + rows[k][1] * py >= rhs[k] - 1e-9;
                if (ok) best = std::min(best, px * px + py * py);
            }
        }

        std::vector<double> x;
        bool infeasible = false;
        try {
            x = min_norm_point(rows, rhs);
        } catch (const std::runtime_error&) {
            infeasible = true;
        }
        if (infeasible) {
            CHECK(best == 1e300);  // the grid must agree nothing is feasible
            continue;
        }
        for (std::size_t k = 0; k < rows.size(); ++k)
            CHECK(rows[k][0] * x[0] + rows[k][1] * x[1] >= rhs[k] - 1e-6);
        const double got = x[0] * x[0] + x[1] * x[1];
        CHECK(got <= best + 1e-6);
        if (best < 1e300) CHECK(got >= best - 0.05);  // grid resolution slack
    }
}
