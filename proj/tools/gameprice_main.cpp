// Command-line front end: prices games, samples mixture curves, solves
// least-squares price vectors, runs reinvestment simulations, and
// reproduces the European-put comparison.
//
// Exit codes: 0 success, 1 input error, 2 no solution at the requested
// growth target, 3 internal failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gameprice/game.hpp"
#include "gameprice/io.hpp"
#include "gameprice/least_squares.hpp"
#include "gameprice/mixture.hpp"
#include "gameprice/montecarlo.hpp"
#include "gameprice/options.hpp"
#include "gameprice/solver.hpp"

namespace {

using nlohmann::ordered_json;

// All emitted numbers carry 12 significant digits.
double sig12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write file: " + out_path);
    out << payload;
}

ordered_json outcome_json(const gameprice::PricingOutcome& out) {
    return ordered_json{{"u", sig12(out.price)},
                        {"t", sig12(out.proportion)},
                        {"regime", gameprice::to_string(out.regime)},
                        {"growth", sig12(out.growth_at_solution)},
                        {"growth_residual", sig12(out.growth_residual)},
                        {"marginal_residual", sig12(out.marginal_residual)}};
}

struct CommonOpts {
    double r = 0.0;
    gameprice::SolverConfig solver{};
    std::string out_path;
};

void add_solver_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--tol-outer", opts.solver.outer_tol, "growth equation tolerance");
    cmd->add_option("--tol-inner", opts.solver.inner_tol, "marginal root tolerance");
    cmd->add_option("--max-iter", opts.solver.max_iter, "bisection iteration cap");
    cmd->add_option("--out", opts.out_path, "output file (default stdout)");
}

int run(int argc, char** argv) {
    CLI::App app{"growth-optimal game pricing"};
    app.require_subcommand(1);

    CommonOpts opts;

    // price
    auto* price_cmd = app.add_subcommand("price", "price one game");
    std::string game_path;
    price_cmd->add_option("--game", game_path, "game spec file")->required();
    price_cmd->add_option("--r", opts.r, "rate per unit horizon")->required();
    add_solver_flags(price_cmd, opts);

    // mixture
    auto* mix_cmd = app.add_subcommand("mixture", "sample two-game mixture curves");
    std::string game_a_path, game_b_path, format = "csv";
    int grid_n = 101;
    mix_cmd->add_option("--game-a", game_a_path, "first game spec file")->required();
    mix_cmd->add_option("--game-b", game_b_path, "second game spec file")->required();
    mix_cmd->add_option("--r", opts.r, "rate per unit horizon")->required();
    mix_cmd->add_option("--grid", grid_n, "uniform grid points");
    mix_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_solver_flags(mix_cmd, opts);

    // least-squares
    auto* lsq_cmd = app.add_subcommand("least-squares", "min-norm price vector");
    std::string portfolio_path;
    lsq_cmd->add_option("--portfolio", portfolio_path, "portfolio spec file")->required();
    auto* lsq_r = lsq_cmd->add_option("--r", opts.r, "override the portfolio rate");
    add_solver_flags(lsq_cmd, opts);

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "reinvestment simulation");
    double sim_u = 0.0, sim_t = 0.0;
    std::uint64_t steps = 100000, seed = 1;
    unsigned streams = 1;
    sim_cmd->add_option("--game", game_path, "game spec file")->required();
    sim_cmd->add_option("--u", sim_u, "price")->required();
    sim_cmd->add_option("--t", sim_t, "reinvested proportion")->required();
    sim_cmd->add_option("--steps", steps, "simulation steps");
    sim_cmd->add_option("--seed", seed, "RNG seed");
    sim_cmd->add_option("--streams", streams, "logical streams");
    auto* sim_r = sim_cmd->add_option("--r", opts.r, "rate for the z score");
    add_solver_flags(sim_cmd, opts);

    // option-demo
    auto* opt_cmd = app.add_subcommand("option-demo", "European put comparison");
    gameprice::PutModel model;
    gameprice::QuadratureConfig quad;
    opt_cmd->add_option("--S", model.S, "stock price")->required();
    opt_cmd->add_option("--K", model.K, "strike")->required();
    opt_cmd->add_option("--T", model.T, "horizon in years")->required();
    opt_cmd->add_option("--sigma", model.sigma, "volatility")->required();
    opt_cmd->add_option("--r", model.r, "rate per year")->required();
    opt_cmd->add_option("--nodes", quad.nodes_per_panel, "quadrature nodes per panel");
    add_solver_flags(opt_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (price_cmd->parsed()) {
        const auto doc = gameprice::read_json_file(game_path);
        const gameprice::Game game = gameprice::load_game(doc, opts.r);
        const gameprice::Rate rate(opts.r * gameprice::game_horizon(doc));
        const auto out = gameprice::price(game, rate, opts.solver);
        ordered_json j = outcome_json(out);
        j["r"] = sig12(rate.r);
        j["growth_target"] = sig12(rate.growth_target);
        emit(j.dump(2) + "\n", opts.out_path);
    } else if (mix_cmd->parsed()) {
        const gameprice::Game a = gameprice::load_game_file(game_a_path, opts.r);
        const gameprice::Game b = gameprice::load_game_file(game_b_path, opts.r);
        const gameprice::Rate rate(opts.r);
        const auto c = gameprice::curves(a, b, rate, grid_n, opts.solver);
        if (format == "csv") {
            emit(gameprice::to_csv(c), opts.out_path);
        } else {
            ordered_json j;
            for (std::size_t i = 0; i < c.grid.size(); ++i) {
                j["p"].push_back(sig12(c.grid[i]));
                j["f"].push_back(sig12(c.f_vals[i]));
                if (c.g_vals[i]) j["g"].push_back(sig12(*c.g_vals[i]));
                else j["g"].push_back(nullptr);
                j["h"].push_back(sig12(c.h_vals[i]));
                j["u"].push_back(sig12(c.u_vals[i]));
                j["regime"].push_back(gameprice::to_string(c.regime[i]));
            }
            bool g_complete = true;
            for (const auto& g : c.g_vals) g_complete = g_complete && g.has_value();
            ordered_json conc;
            conc["f"] = sig12(gameprice::check_concavity(c.f_vals, c.grid, "f").max_violation);
            conc["h"] = sig12(gameprice::check_concavity(c.h_vals, c.grid, "h").max_violation);
            conc["u"] = sig12(gameprice::check_concavity(c.u_vals, c.grid, "u").max_violation);
            if (g_complete) {
                std::vector<double> gv;
                for (const auto& g : c.g_vals) gv.push_back(*g);
                conc["g"] = sig12(gameprice::check_concavity(gv, c.grid, "g").max_violation);
            }
            j["concavity"] = conc;
            for (double p : gameprice::equivalence_points(c, 1e-8))
                j["equivalence_points"].push_back(sig12(p));
            if (!j.contains("equivalence_points"))
                j["equivalence_points"] = ordered_json::array();
            emit(j.dump(2) + "\n", opts.out_path);
        }
    } else if (lsq_cmd->parsed()) {
        std::optional<double> override_r;
        if (lsq_r->count() > 0) override_r = opts.r;
        const auto spec = gameprice::load_portfolio_file(portfolio_path, override_r);
        const gameprice::Rate rate(spec.rate);
        const auto port = gameprice::make_portfolio(spec.games, rate, opts.solver);
        gameprice::LsqConfig cfg;
        cfg.solver = opts.solver;
        const auto res = gameprice::least_squares_prices(port, cfg);
        ordered_json j;
        for (double v : res.x.t) j["x"].push_back(sig12(v));
        j["norm"] = sig12(res.norm);
        j["L"] = sig12(res.certificate_L);
        j["iterations"] = res.iterations;
        for (std::size_t i = 0; i < port.size(); ++i)
            j["per_game"].push_back(ordered_json{{"u", sig12(port.u[i])},
                                                 {"E", sig12(gameprice::expectation(port.games[i]))},
                                                 {"d", sig12(port.d[i])}});
        emit(j.dump(2) + "\n", opts.out_path);
    } else if (sim_cmd->parsed()) {
        std::optional<double> z_rate;
        if (sim_r->count() > 0) z_rate = opts.r;
        const gameprice::Game game = gameprice::load_game_file(game_path, z_rate);
        const auto res =
            gameprice::simulate({game, sim_u, sim_t, steps, seed, streams});
        ordered_json j;
        j["geometric_mean"] = sig12(res.geometric_mean_growth);
        j["mean_log"] = sig12(res.mean_log);
        j["stderr_log"] = sig12(res.stderr_log);
        if (z_rate && res.stderr_log > 0.0)
            j["z_vs"] = sig12((res.mean_log - *z_rate) / res.stderr_log);
        for (double v : res.stream_means) j["stream_means"].push_back(sig12(v));
        emit(j.dump(2) + "\n", opts.out_path);
    } else if (opt_cmd->parsed()) {
        const auto cmp = gameprice::demo_compare(model, opts.solver, quad);
        ordered_json j;
        j["expectation"] = sig12(cmp.expectation);
        j["growth_target"] = sig12(cmp.growth_target);
        j["growth_optimal"] = outcome_json(cmp.growth_optimal);
        j["black_scholes"] = ordered_json{{"u", sig12(cmp.bs_price)},
                                          {"t", sig12(cmp.bs_proportion)},
                                          {"growth", sig12(cmp.bs_growth)}};
        j["ordering"] =
            ordered_json{{"growth_optimal_price_below_bs",
                          cmp.growth_optimal.price < cmp.bs_price},
                         {"bs_growth_below_target", cmp.bs_growth < cmp.growth_target}};
        emit(j.dump(2) + "\n", opts.out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gameprice::NoSolutionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
