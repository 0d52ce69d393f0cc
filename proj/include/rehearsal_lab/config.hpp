#pragma once

// Experiment configuration: a flat `key = value` file. Blank lines and lines
// starting with '#' are ignored. Command-line flags override file values.

#include "rehearsal_lab/errors.hpp"
#include "rehearsal_lab/rehearsal.hpp"
#include "rehearsal_lab/usability.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rehearsal_lab {

struct ExperimentConfig
{
    std::string scheme = "sc1";
    std::string profile = "typical";
    std::vector<double> rates; // explicit rates override `profile`
    std::string policy = "ER:1";
    double horizon = 365.0;
    WindowMode window_mode = WindowMode::StartsWithinHorizon;
    CountingMode counting_mode = CountingMode::PerCue;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 2000;
    std::string econ = "bcrypt";
    double budget = 1e6;
    std::size_t s = 3;
    std::size_t m = 100;
    std::size_t r_max = 2;

    RehearsalPolicy rehearsal_policy() const { return RehearsalPolicy::parse(policy, window_mode); }

    VisitationProfile visitation_profile() const
    {
        if (rates.empty())
            return preset_profile(profile);
        VisitationProfile p;
        p.name = "custom";
        p.rates = rates;
        return p;
    }
};

namespace detail {

inline std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_double_field(const std::string& value, std::size_t line, const std::string& key)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used == value.size())
            return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("'" + key + "' expects a number, got '" + value + "'", line, key);
}

inline std::uint64_t parse_unsigned_field(const std::string& value, std::size_t line, const std::string& key)
{
    try {
        std::size_t used = 0;
        if (!value.empty() && value[0] != '-') {
            const unsigned long long v = std::stoull(value, &used);
            if (used == value.size())
                return v;
        }
    } catch (const std::exception&) {
    }
    throw ConfigError("'" + key + "' expects a nonnegative integer, got '" + value + "'", line, key);
}

} // namespace detail

/// Applies one key/value pair; `line` is 0 for command-line values.
inline void apply_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value,
                               std::size_t line = 0)
{
    try {
        if (key == "scheme")
            cfg.scheme = value;
        else if (key == "profile")
            cfg.profile = value;
        else if (key == "rates") {
            cfg.rates.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ','))
                cfg.rates.push_back(detail::parse_double_field(detail::trim(item), line, key));
        } else if (key == "policy") {
            (void)RehearsalPolicy::parse(value);
            cfg.policy = value;
        } else if (key == "horizon") {
            cfg.horizon = detail::parse_double_field(value, line, key);
            if (!(cfg.horizon > 0.0))
                throw ConfigError("'horizon' must be positive", line, key);
        } else if (key == "window_mode" || key == "window")
            cfg.window_mode = parse_window_mode(value);
        else if (key == "counting_mode" || key == "mode")
            cfg.counting_mode = parse_counting_mode(value);
        else if (key == "seed")
            cfg.seed = detail::parse_unsigned_field(value, line, key);
        else if (key == "trials")
            cfg.trials = detail::parse_unsigned_field(value, line, key);
        else if (key == "econ")
            cfg.econ = value;
        else if (key == "budget")
            cfg.budget = detail::parse_double_field(value, line, key);
        else if (key == "s")
            cfg.s = detail::parse_unsigned_field(value, line, key);
        else if (key == "m")
            cfg.m = detail::parse_unsigned_field(value, line, key);
        else if (key == "r" || key == "r_max")
            cfg.r_max = detail::parse_unsigned_field(value, line, key);
        else
            throw ConfigError("unknown key '" + key + "'", line, key);
    } catch (const ConfigError& e) {
        if (e.line() != 0 || line == 0)
            throw;
        throw ConfigError(e.what(), line, key);
    }
}

inline ExperimentConfig read_config(std::istream& in, ExperimentConfig cfg = {})
{
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string text = detail::trim(raw);
        if (text.empty() || text[0] == '#')
            continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", line);
        const std::string key = detail::trim(text.substr(0, eq));
        const std::string value = detail::trim(text.substr(eq + 1));
        if (key.empty())
            throw ConfigError("missing key before '='", line);
        apply_config_value(cfg, key, value, line);
    }
    return cfg;
}

} // namespace rehearsal_lab
