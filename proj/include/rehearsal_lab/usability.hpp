#pragma once

// Expected extra rehearsals under Poisson visitation.
//
// Each account is visited as a Poisson process with rate lambda_i (visits per
// day). A cue is rehearsed naturally whenever any account using it is
// visited, so its natural rehearsals form a Poisson process with the summed
// rate, and a window of length L goes unsatisfied with probability
// exp(-rate * L). Summing over windows and cues gives the expected number of
// extra rehearsals.

#include "rehearsal_lab/designs.hpp"
#include "rehearsal_lab/errors.hpp"
#include "rehearsal_lab/rehearsal.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rehearsal_lab {

struct VisitationProfile
{
    std::string name;
    std::vector<double> rates; // visits per day, one per account

    std::size_t size() const noexcept { return rates.size(); }
    double total_rate() const noexcept
    {
        double sum = 0.0;
        for (double r : rates)
            sum += r;
        return sum;
    }
};

/// The visitation classes used by the presets: daily, every three days,
/// weekly, monthly, yearly.
inline constexpr std::array<double, 5> preset_rate_classes = {1.0, 1.0 / 3.0, 1.0 / 7.0, 1.0 / 31.0, 1.0 / 365.0};

namespace detail {

inline std::string normalize_name(std::string_view name)
{
    std::string out;
    for (char c : name)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

} // namespace detail

inline const std::array<std::string_view, 4>& preset_profile_names()
{
    static const std::array<std::string_view, 4> names = {"VeryActive", "Typical", "Occasional", "Infrequent"};
    return names;
}

/// Account counts per rate class for the four user types; 75 accounts each.
inline VisitationProfile preset_profile(std::string_view name)
{
    static const std::map<std::string, std::pair<std::string, std::array<int, 5>>> presets = {
        {"veryactive", {"VeryActive", {10, 10, 10, 10, 35}}},
        {"typical", {"Typical", {5, 10, 10, 10, 40}}},
        {"occasional", {"Occasional", {2, 10, 20, 20, 23}}},
        {"infrequent", {"Infrequent", {0, 2, 5, 10, 58}}},
    };
    const auto it = presets.find(detail::normalize_name(name));
    if (it == presets.end())
        throw ConfigError("unknown visitation profile '" + std::string(name) + "'");

    VisitationProfile profile;
    profile.name = it->second.first;
    for (std::size_t k = 0; k < preset_rate_classes.size(); ++k)
        profile.rates.insert(profile.rates.end(), static_cast<std::size_t>(it->second.second[k]),
                             preset_rate_classes[k]);
    return profile;
}

/// Natural rehearsal rate of every cue in a universe.
///
/// `owners` counts the accounts using each cue; cues with no owner are not
/// part of the scheme and are left out of usability totals. `session_group`
/// identifies cues that are always rehearsed together (same owning accounts).
struct CueRateMap
{
    std::vector<double> rates;
    std::vector<std::size_t> owners;
    std::vector<std::size_t> session_group;

    std::size_t size() const noexcept { return rates.size(); }

    /// Independent cues with the given rates, each used by one account.
    static CueRateMap from_rates(std::span<const double> rates)
    {
        CueRateMap map;
        map.rates.assign(rates.begin(), rates.end());
        map.owners.assign(rates.size(), 1);
        map.session_group.resize(rates.size());
        for (std::size_t i = 0; i < rates.size(); ++i)
            map.session_group[i] = i;
        return map;
    }
};

/// Checks that `assignment` (account -> set index) is injective, in range, and
/// covers exactly the profile's accounts.
inline void check_assignment(std::span<const std::size_t> assignment, std::size_t account_count,
                             std::size_t set_count)
{
    if (assignment.size() != account_count)
        throw std::invalid_argument("assignment must map every account (" + std::to_string(account_count) +
                                    " accounts, " + std::to_string(assignment.size()) + " entries)");
    std::vector<bool> used(set_count, false);
    for (std::size_t target : assignment) {
        if (target >= set_count)
            throw std::invalid_argument("assignment refers to set " + std::to_string(target) + " of " +
                                        std::to_string(set_count));
        if (used[target])
            throw std::invalid_argument("assignment is not injective: set " + std::to_string(target) +
                                        " used twice");
        used[target] = true;
    }
}

/// Rate of each cue = sum of the rates of the accounts whose assigned set
/// contains it.
inline CueRateMap cue_rates(std::span<const CueSet> account_sets, std::size_t universe_size,
                            std::span<const double> account_rates)
{
    if (account_sets.size() != account_rates.size())
        throw std::invalid_argument("cue_rates: one cue set per account required");
    CueRateMap map;
    map.rates.assign(universe_size, 0.0);
    map.owners.assign(universe_size, 0);
    std::vector<std::vector<std::size_t>> owner_lists(universe_size);

    for (std::size_t a = 0; a < account_sets.size(); ++a) {
        if (account_rates[a] < 0.0)
            throw std::invalid_argument("cue_rates: negative visitation rate");
        for (CueId c : account_sets[a]) {
            if (c >= universe_size)
                throw std::invalid_argument("cue_rates: cue outside universe");
            map.rates[c] += account_rates[a];
            ++map.owners[c];
            owner_lists[c].push_back(a);
        }
    }

    std::map<std::vector<std::size_t>, std::size_t> groups;
    map.session_group.resize(universe_size);
    for (std::size_t c = 0; c < universe_size; ++c) {
        if (owner_lists[c].empty()) {
            map.session_group[c] = universe_size + c; // never shared
            continue;
        }
        const auto [it, inserted] = groups.try_emplace(owner_lists[c], groups.size());
        map.session_group[c] = it->second;
    }
    return map;
}

inline CueRateMap cue_rates(const SharingFamily& family, std::span<const std::size_t> assignment,
                            const VisitationProfile& profile)
{
    check_assignment(assignment, profile.size(), family.size());
    std::vector<CueSet> account_sets;
    account_sets.reserve(assignment.size());
    for (std::size_t target : assignment)
        account_sets.push_back(family.sets[target]);
    return cue_rates(account_sets, family.universe_size, profile.rates);
}

/// Probability that a Poisson process with the given rate has no event in the window.
inline double miss_probability(double rate, const RehearsalWindow& window) noexcept
{
    return std::exp(-rate * window.length());
}

enum class CountingMode {
    PerCue,     // every cue's unsatisfied windows count separately
    PerSession, // cues always rehearsed together count once
};

inline std::string_view to_string(CountingMode mode) noexcept
{
    return mode == CountingMode::PerCue ? "per-cue" : "per-session";
}

inline CountingMode parse_counting_mode(std::string_view text)
{
    if (text == "per-cue" || text == "cue")
        return CountingMode::PerCue;
    if (text == "per-session" || text == "session")
        return CountingMode::PerSession;
    throw ConfigError("unknown counting mode '" + std::string(text) + "' (expected per-cue or per-session)");
}

/// Expected extra rehearsals of one cue as a function of its rate, for a
/// fixed schedule. Terms below 1e-300 are dropped.
class ExtraRehearsalCurve
{
public:
    ExtraRehearsalCurve(const RehearsalPolicy& policy, double horizon)
    {
        for (const auto& w : windows(policy, horizon))
            lengths_.push_back(w.length());
    }

    double operator()(double rate) const noexcept
    {
        constexpr double underflow_exponent = -690.0; // exp(-690) ~ 1e-300
        double sum = 0.0;
        for (double len : lengths_) {
            const double exponent = -rate * len;
            if (exponent < underflow_exponent)
                continue;
            sum += std::exp(exponent);
        }
        return sum;
    }

    std::size_t window_count() const noexcept { return lengths_.size(); }

private:
    std::vector<double> lengths_;
};

struct CueExtra
{
    std::size_t cue_id = 0;
    double rate = 0.0;
    double expected_extras = 0.0;
};

struct UsabilityReport
{
    double horizon = 0.0;
    RehearsalPolicy policy;
    CountingMode counting_mode = CountingMode::PerCue;
    std::vector<CueExtra> per_cue; // cues in use only
    std::size_t session_count = 0; // distinct rehearsal classes counted in PerSession mode
    double total = 0.0;
};

inline constexpr double session_rate_tolerance = 1e-12;

inline UsabilityReport expected_extra_rehearsals(const CueRateMap& rates, const RehearsalPolicy& policy,
                                                 double horizon, CountingMode mode = CountingMode::PerCue)
{
    if (!(horizon > 0.0))
        throw std::invalid_argument("expected_extra_rehearsals: horizon must be positive");
    for (double r : rates.rates)
        if (r < 0.0 || !std::isfinite(r))
            throw std::invalid_argument("expected_extra_rehearsals: rates must be finite and nonnegative");

    const ExtraRehearsalCurve curve(policy, horizon);
    UsabilityReport report;
    report.horizon = horizon;
    report.policy = policy;
    report.counting_mode = mode;

    struct SessionClass
    {
        std::size_t group;
        double rate;
    };
    std::vector<SessionClass> classes;

    for (std::size_t c = 0; c < rates.size(); ++c) {
        if (rates.owners[c] == 0)
            continue;
        const double value = curve(rates.rates[c]);
        report.per_cue.push_back({c, rates.rates[c], value});

        if (mode == CountingMode::PerCue) {
            report.total += value;
            continue;
        }
        const bool seen = std::any_of(classes.begin(), classes.end(), [&](const SessionClass& k) {
            const double scale = std::max({1.0, std::abs(k.rate), std::abs(rates.rates[c])});
            return k.group == rates.session_group[c] &&
                   std::abs(k.rate - rates.rates[c]) <= session_rate_tolerance * scale;
        });
        if (!seen) {
            classes.push_back({rates.session_group[c], rates.rates[c]});
            report.total += value;
        }
    }
    report.session_count = mode == CountingMode::PerSession ? classes.size() : report.per_cue.size();
    return report;
}

/// Single-cue expected extras on a sigma x lambda grid (rows: sigma).
inline std::vector<std::vector<double>> tabulate(std::span<const double> sigmas, std::span<const double> lambdas,
                                                 ScheduleKind kind, double horizon,
                                                 WindowMode mode = WindowMode::StartsWithinHorizon)
{
    std::vector<std::vector<double>> grid;
    grid.reserve(sigmas.size());
    for (double sigma : sigmas) {
        const ExtraRehearsalCurve curve(RehearsalPolicy(kind, sigma, mode), horizon);
        std::vector<double> row;
        row.reserve(lambdas.size());
        for (double lambda : lambdas)
            row.push_back(curve(lambda));
        grid.push_back(std::move(row));
    }
    return grid;
}

} // namespace rehearsal_lab
