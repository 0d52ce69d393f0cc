#pragma once

// Toy-scale guessing game used to check the offline security bound
// empirically. Each trial draws fresh uniform associations for every cue,
// leaks r account passwords to the adversary, and lets it make at most Q
// guesses at a target account's password.

#include "rehearsal_lab/designs.hpp"
#include "rehearsal_lab/errors.hpp"
#include "rehearsal_lab/random.hpp"
#include "rehearsal_lab/security.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace rehearsal_lab {

inline constexpr std::uint64_t game_max_assoc_space = 256;
inline constexpr std::size_t game_max_ell = 4;
inline constexpr std::size_t game_max_accounts = 12;
inline constexpr std::uint64_t game_max_random_guesses = 1'000'000;

enum class GameStrategy {
    UniformRandom,      // Q distinct random passwords for the target, leaks ignored
    LeakThenEnumerate,  // leak the accounts overlapping the target most, enumerate the rest
};

inline std::string_view to_string(GameStrategy s) noexcept
{
    return s == GameStrategy::UniformRandom ? "uniform-random" : "leak-then-enumerate";
}

inline GameStrategy parse_game_strategy(std::string_view text)
{
    if (text == "uniform-random" || text == "uniform")
        return GameStrategy::UniformRandom;
    if (text == "leak-then-enumerate" || text == "leak")
        return GameStrategy::LeakThenEnumerate;
    throw ConfigError("unknown game strategy '" + std::string(text) + "'");
}

struct GameSetup
{
    std::vector<CueSet> account_sets;
    std::size_t universe_size = 0;
    std::uint64_t assoc_space = 0;
    std::size_t r = 0;
    std::uint64_t Q = 0;
    GameStrategy strategy = GameStrategy::LeakThenEnumerate;
};

struct GamePlan
{
    std::size_t target = 0;
    std::vector<std::size_t> leaked;
    std::vector<CueId> unknown_cues; // target cues not covered by a leak
};

struct GameResult
{
    std::size_t trials = 0;
    std::size_t wins = 0;
    double win_rate = 0.0;
    double standard_error = 0.0;
    double analytic_bound = 1.0;
    GamePlan plan;
};

namespace detail {

inline void check_game_setup(const GameSetup& g)
{
    if (g.account_sets.empty())
        throw std::invalid_argument("game: no accounts");
    if (g.assoc_space < 2 || g.assoc_space > game_max_assoc_space)
        throw GuardViolation("game: association space " + std::to_string(g.assoc_space) + " outside [2, " +
                             std::to_string(game_max_assoc_space) + "]");
    if (g.account_sets.size() > game_max_accounts)
        throw GuardViolation("game: " + std::to_string(g.account_sets.size()) + " accounts exceeds " +
                             std::to_string(game_max_accounts));
    for (const auto& s : g.account_sets) {
        if (s.empty() || s.size() > game_max_ell)
            throw GuardViolation("game: passwords must have between 1 and " + std::to_string(game_max_ell) + " cues");
        for (CueId c : s)
            if (c >= g.universe_size)
                throw std::invalid_argument("game: cue outside universe");
    }
    if (g.r >= g.account_sets.size())
        throw std::invalid_argument("game: r must leave at least one account uncompromised");
}

inline std::size_t uncovered_count(const CueSet& target, const std::vector<bool>& known)
{
    std::size_t n = 0;
    for (CueId c : target)
        if (!known[c])
            ++n;
    return n;
}

} // namespace detail

/// Chooses the target and r leaked accounts greedily: each leak is the
/// account covering the most still-unknown target cues (lowest index on
/// ties), and the target is the account left with the fewest unknown cues.
inline GamePlan plan_leaks(const GameSetup& g)
{
    detail::check_game_setup(g);
    GamePlan best;
    bool have_best = false;
    for (std::size_t target = 0; target < g.account_sets.size(); ++target) {
        GamePlan plan;
        plan.target = target;
        std::vector<bool> known(g.universe_size, false);
        std::vector<bool> leaked(g.account_sets.size(), false);
        leaked[target] = true;
        for (std::size_t k = 0; k < g.r; ++k) {
            std::size_t pick = g.account_sets.size();
            std::size_t pick_gain = 0;
            for (std::size_t j = 0; j < g.account_sets.size(); ++j) {
                if (leaked[j])
                    continue;
                std::size_t gain = 0;
                for (CueId c : g.account_sets[j])
                    if (!known[c] && std::find(g.account_sets[target].begin(), g.account_sets[target].end(), c) !=
                                         g.account_sets[target].end())
                        ++gain;
                if (pick == g.account_sets.size() || gain > pick_gain) {
                    pick = j;
                    pick_gain = gain;
                }
            }
            leaked[pick] = true;
            plan.leaked.push_back(pick);
            for (CueId c : g.account_sets[pick])
                known[c] = true;
        }
        for (CueId c : g.account_sets[target])
            if (!known[c])
                plan.unknown_cues.push_back(c);
        if (!have_best || plan.unknown_cues.size() < best.unknown_cues.size()) {
            best = std::move(plan);
            have_best = true;
        }
    }
    return best;
}

/// Plays the game for the given number of trials and reports the win rate
/// next to the offline bound for (Q, |AS|, l, gamma, r).
inline GameResult game_oracle(const GameSetup& g, std::size_t trials, std::uint64_t seed, unsigned threads = 0)
{
    detail::check_game_setup(g);
    if (trials == 0)
        throw std::invalid_argument("game: trials must be positive");

    GameResult result;
    result.trials = trials;
    result.plan = plan_leaks(g);
    const CueSet& target = g.account_sets[result.plan.target];

    const FamilyProfile profile = verify_family(g.account_sets, g.universe_size);
    SecurityParams p;
    p.Q = static_cast<double>(g.Q);
    p.assoc_space = static_cast<double>(g.assoc_space);
    p.ell = profile.ell_min;
    p.gamma = profile.gamma_observed;
    p.r = g.r;
    p.h = 1;
    result.analytic_bound = delta_offline_bound(p).delta;

    // Size of the password space the adversary must search.
    const std::size_t searched = g.strategy == GameStrategy::UniformRandom ? target.size() : result.plan.unknown_cues.size();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < searched; ++i)
        space *= g.assoc_space;
    if (g.strategy == GameStrategy::UniformRandom && g.Q < space && g.Q > game_max_random_guesses)
        throw GuardViolation("game: uniform-random strategy limited to " + std::to_string(game_max_random_guesses) +
                             " guesses");

    std::vector<unsigned char> won(trials, 0);
    parallel_for_index(
        trials,
        [&](std::size_t t) {
            auto rng = substream(seed, t);
            std::uniform_int_distribution<std::uint64_t> assoc(0, g.assoc_space - 1);
            std::vector<std::uint64_t> associations(g.universe_size);
            for (auto& a : associations)
                a = assoc(rng);

            // Mixed-radix index of the true password within the searched space.
            std::uint64_t secret = 0;
            if (g.strategy == GameStrategy::UniformRandom) {
                for (CueId c : target)
                    secret = secret * g.assoc_space + associations[c];
                if (g.Q >= space) {
                    won[t] = 1;
                    return;
                }
                // Floyd's sampling of Q distinct guesses.
                std::unordered_set<std::uint64_t> guesses;
                for (std::uint64_t j = space - g.Q; j < space; ++j) {
                    const std::uint64_t x = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
                    if (!guesses.insert(x).second)
                        guesses.insert(j);
                }
                won[t] = guesses.count(secret) != 0;
            } else {
                for (CueId c : result.plan.unknown_cues)
                    secret = secret * g.assoc_space + associations[c];
                // Guesses enumerate the residual space in index order.
                won[t] = secret < g.Q;
            }
        },
        threads);

    for (unsigned char w : won)
        result.wins += w;
    result.win_rate = static_cast<double>(result.wins) / static_cast<double>(trials);
    result.standard_error =
        std::sqrt(result.win_rate * (1.0 - result.win_rate) / static_cast<double>(trials));
    return result;
}

} // namespace rehearsal_lab
