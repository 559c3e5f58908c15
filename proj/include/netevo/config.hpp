#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "netevo/engine.hpp"

namespace netevo {

struct ParsedConfig {
    SimConfig config;
    std::vector<std::string> applied_defaults;
};

namespace detail {

template <typename T>
T require_type(const nlohmann::json& j, const std::string& key, const char* type_name)
{
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw std::runtime_error("config key '" + key + "': expected " + type_name);
    }
}

template <typename T>
void read_key(const nlohmann::json& j, const std::string& key, T& out, const char* type_name,
              std::vector<std::string>& defaults)
{
    if (j.contains(key)) {
        out = require_type<T>(j, key, type_name);
    } else {
        std::ostringstream oss;
        oss << key << " = ";
        if constexpr (std::is_same_v<T, bool>) {
            oss << (out ? "true" : "false");
        } else if constexpr (std::is_same_v<T, std::vector<int>>) {
            oss << '[';
            for (std::size_t i = 0; i < out.size(); ++i)
                oss << (i ? ", " : "") << out[i];
            oss << ']';
        } else {
            oss << out;
        }
        defaults.push_back(oss.str());
    }
}

inline LifetimeDistribution parse_lifetime(const nlohmann::json& block)
{
    if (!block.is_object())
        throw std::runtime_error("config key 'lifetime': expected object");
    const std::string kind = require_type<std::string>(block, "kind", "string");
    std::set<std::string> allowed{"kind"};
    LifetimeDistribution dist = LifetimeDistribution::power_law(80.0, 5.0);
    if (kind == "powerlaw") {
        allowed.insert({"x_min", "alpha"});
        dist = LifetimeDistribution::power_law(require_type<double>(block, "x_min", "number"),
                                               require_type<double>(block, "alpha", "number"));
    } else if (kind == "uniform") {
        allowed.insert({"a", "b"});
        dist = LifetimeDistribution::uniform(require_type<double>(block, "a", "number"),
                                             require_type<double>(block, "b", "number"));
    } else if (kind == "exponential") {
        allowed.insert({"kappa"});
        dist = LifetimeDistribution::exponential(require_type<double>(block, "kappa", "number"));
    } else if (kind == "lognormal") {
        allowed.insert({"upsilon", "phi"});
        dist = LifetimeDistribution::lognormal(require_type<double>(block, "upsilon", "number"),
                                               require_type<double>(block, "phi", "number"));
    } else {
        throw std::runtime_error("lifetime.kind must be one of powerlaw, uniform, exponential, "
                                 "lognormal");
    }
    for (const auto& [key, value] : block.items())
        if (!allowed.count(key))
            throw std::runtime_error("unknown key 'lifetime." + key + "' in config");
    return dist;
}

} // namespace detail

inline ParsedConfig parse_config_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw std::runtime_error("config root must be an object");
    static const std::set<std::string> known{
        "rows",   "cols", "initial_per_cell", "birth_death",  "lambda",         "lifetime",
        "delta",  "eta",  "gamma",            "game",         "r",              "kappa",
        "beta",   "tau",  "sigma",            "horizon",      "seed",           "record_every",
        "snapshot_steps", "reward_mode"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key))
            throw std::runtime_error("unknown key '" + key + "' in config");

    ParsedConfig parsed;
    SimConfig& c = parsed.config;
    auto& defaults = parsed.applied_defaults;
    detail::read_key(j, "rows", c.rows, "integer", defaults);
    detail::read_key(j, "cols", c.cols, "integer", defaults);
    detail::read_key(j, "initial_per_cell", c.initial_per_cell, "integer", defaults);
    detail::read_key(j, "birth_death", c.birth_death, "boolean", defaults);
    detail::read_key(j, "lambda", c.lambda, "number", defaults);
    if (j.contains("lifetime"))
        c.lifetime = detail::parse_lifetime(j.at("lifetime"));
    else
        defaults.push_back("lifetime = { kind = powerlaw, x_min = 80, alpha = 5 }");
    detail::read_key(j, "delta", c.delta, "number", defaults);
    detail::read_key(j, "eta", c.eta, "number", defaults);
    detail::read_key(j, "gamma", c.gamma, "number", defaults);
    detail::read_key(j, "game", c.game, "string", defaults);
    detail::read_key(j, "r", c.r, "number", defaults);
    detail::read_key(j, "kappa", c.kappa, "number", defaults);
    detail::read_key(j, "beta", c.beta, "number", defaults);
    detail::read_key(j, "tau", c.tau, "number", defaults);
    detail::read_key(j, "sigma", c.sigma, "number", defaults);
    detail::read_key(j, "horizon", c.horizon, "integer", defaults);
    detail::read_key(j, "seed", c.seed, "integer", defaults);
    detail::read_key(j, "record_every", c.record_every, "integer", defaults);
    detail::read_key(j, "snapshot_steps", c.snapshot_steps, "array of integers", defaults);
    detail::read_key(j, "reward_mode", c.reward_mode, "string", defaults);
    c.validate();
    return parsed;
}

inline ParsedConfig parse_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config parse error in " + path + ": " + e.what());
    }
    return parse_config_json(j);
}

// Fully resolved config echo; feeding this back through parse_config_json
// reproduces the run bit-for-bit.
inline nlohmann::json config_to_json(const SimConfig& c)
{
    nlohmann::json lifetime;
    lifetime["kind"] = c.lifetime.kind();
    std::visit(
        [&lifetime](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                lifetime["x_min"] = d.x_min;
                lifetime["alpha"] = d.alpha;
            } else if constexpr (std::is_same_v<T, Uniform>) {
                lifetime["a"] = d.a;
                lifetime["b"] = d.b;
            } else if constexpr (std::is_same_v<T, Exponential>) {
                lifetime["kappa"] = d.kappa;
            } else {
                lifetime["upsilon"] = d.upsilon;
                lifetime["phi"] = d.phi;
            }
        },
        c.lifetime.spec());
    return nlohmann::json{{"rows", c.rows},
                          {"cols", c.cols},
                          {"initial_per_cell", c.initial_per_cell},
                          {"birth_death", c.birth_death},
                          {"lambda", c.lambda},
                          {"lifetime", lifetime},
                          {"delta", c.delta},
                          {"eta", c.eta},
                          {"gamma", c.gamma},
                          {"game", c.game},
                          {"r", c.r},
                          {"kappa", c.kappa},
                          {"beta", c.beta},
                          {"tau", c.tau},
                          {"sigma", c.sigma},
                          {"horizon", c.horizon},
                          {"seed", c.seed},
                          {"record_every", c.record_every},
                          {"snapshot_steps", c.snapshot_steps},
                          {"reward_mode", c.reward_mode}};
}

} // namespace netevo
