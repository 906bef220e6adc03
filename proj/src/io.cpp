#include "gameprice/io.hpp"

#include <fstream>
#include <stdexcept>

#include "gameprice/options.hpp"

namespace gameprice {

namespace {

double require_number(const nlohmann::json& doc, const std::string& field) {
    if (!doc.contains(field))
        throw std::invalid_argument("game spec: missing field \"" + field + "\"");
    if (!doc[field].is_number())
        throw std::invalid_argument("game spec: field \"" + field +
                                    "\" must be a number");
    return doc[field].get<double>();
}

std::string optional_label(const nlohmann::json& doc) {
    if (!doc.contains("label")) return "";
    if (!doc["label"].is_string())
        throw std::invalid_argument("game spec: field \"label\" must be a string");
    return doc["label"].get<std::string>();
}

}  // namespace

Game load_game(const nlohmann::json& doc, std::optional<double> model_rate) {
    if (!doc.is_object())
        throw std::invalid_argument("game spec: document must be a JSON object");
    if (!doc.contains("type"))
        throw std::invalid_argument("game spec: missing field \"type\"");
    if (!doc["type"].is_string())
        throw std::invalid_argument("game spec: field \"type\" must be a string");
    const std::string type = doc["type"].get<std::string>();

    if (type == "two_point") {
        return Game({{require_number(doc, "a"), 0.5}, {require_number(doc, "b"), 0.5}},
                    optional_label(doc));
    }
    if (type == "discrete") {
        if (!doc.contains("atoms") || !doc["atoms"].is_array())
            throw std::invalid_argument("game spec: field \"atoms\" must be an array");
        std::vector<Atom> atoms;
        for (const auto& entry : doc["atoms"])
            atoms.push_back({require_number(entry, "payoff"), require_number(entry, "w")});
        return Game(std::move(atoms), optional_label(doc));
    }
    if (type == "lognormal_put") {
        if (!model_rate)
            throw std::invalid_argument(
                "game spec: lognormal_put needs the rate (pass --r)");
        PutModel m{require_number(doc, "S"), require_number(doc, "K"),
                   require_number(doc, "T"), require_number(doc, "sigma"),
                   *model_rate};
        return build_put_game(m);
    }
    throw std::invalid_argument("game spec: unknown type \"" + type + "\"");
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return doc;
}

Game load_game_file(const std::string& path, std::optional<double> model_rate) {
    return load_game(read_json_file(path), model_rate);
}

double game_horizon(const nlohmann::json& doc) {
    if (doc.is_object() && doc.contains("type") && doc["type"].is_string() &&
        doc["type"].get<std::string>() == "lognormal_put")
        return require_number(doc, "T");
    return 1.0;
}

PortfolioSpec load_portfolio_file(const std::string& path,
                                  std::optional<double> rate_override) {
    const nlohmann::json doc = read_json_file(path);
    if (!doc.is_object())
        throw std::invalid_argument("portfolio spec: document must be a JSON object");
    PortfolioSpec spec;
    if (rate_override) {
        spec.rate = *rate_override;
    } else {
        if (!doc.contains("rate") || !doc["rate"].is_number())
            throw std::invalid_argument("portfolio spec: missing numeric field \"rate\"");
        spec.rate = doc["rate"].get<double>();
    }
    if (!doc.contains("games") || !doc["games"].is_array() || doc["games"].empty())
        throw std::invalid_argument(
            "portfolio spec: field \"games\" must be a non-empty array");
    for (const auto& g : doc["games"]) spec.games.push_back(load_game(g, spec.rate));
    return spec;
}

}  // namespace gameprice
