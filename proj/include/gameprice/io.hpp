#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gameprice/game.hpp"

namespace gameprice {

// Builds a Game from a spec document. Schemas:
//   {"type":"two_point","a":n,"b":n}
//   {"type":"discrete","atoms":[{"payoff":n,"w":n},...]}
//   {"type":"lognormal_put","S":n,"K":n,"T":n,"sigma":n}
// "label" is optional everywhere. The lognormal_put schema needs the
// per-year rate, which is supplied separately (model_rate).
Game load_game(const nlohmann::json& doc,
               std::optional<double> model_rate = std::nullopt);

Game load_game_file(const std::string& path,
                    std::optional<double> model_rate = std::nullopt);

// Pricing horizon implied by a game spec: T for lognormal_put, else 1.
double game_horizon(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::string& path);

struct PortfolioSpec {
    double rate = 0.0;
    std::vector<Game> games;
};

// {"rate": r, "games": [<game spec>, ...]}; rate_override wins when given.
PortfolioSpec load_portfolio_file(const std::string& path,
                                  std::optional<double> rate_override = std::nullopt);

}  // namespace gameprice
