#pragma once

// Assigning accounts to public cue sets so that expected extra rehearsals are
// small. The exact problem is NP-hard; greedy_map is the heuristic used when
// generating schemes, exact_min_rehearsal is a brute-force reference for tiny
// instances.

#include "rehearsal_lab/designs.hpp"
#include "rehearsal_lab/errors.hpp"
#include "rehearsal_lab/rehearsal.hpp"
#include "rehearsal_lab/usability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace rehearsal_lab {

inline constexpr std::size_t exact_assignment_max_sets = 9;

struct Assignment
{
    std::vector<std::size_t> set_of_account; // account index -> set index
    double objective = 0.0;                  // expected extra rehearsals, per cue, over the whole universe
};

namespace detail {

inline void check_assignment_inputs(std::span<const double> account_rates, std::span<const CueSet> sets,
                                    std::size_t universe_size)
{
    if (account_rates.size() > sets.size())
        throw std::invalid_argument("more accounts (" + std::to_string(account_rates.size()) + ") than cue sets (" +
                                    std::to_string(sets.size()) + ")");
    for (double r : account_rates)
        if (r < 0.0 || !std::isfinite(r))
            throw std::invalid_argument("visitation rates must be finite and nonnegative");
    for (const auto& s : sets)
        for (CueId c : s)
            if (c >= universe_size)
                throw std::invalid_argument("cue set refers to a cue outside the universe");
}

// Sum over all cues in index order of curve(rate); a cue no account uses
// contributes curve(0). Shared by every objective evaluation so that equal
// assignments give equal bits.
template <typename Curve>
double objective_from_rates(std::span<const double> rates, Curve&& curve)
{
    double total = 0.0;
    for (double rate : rates)
        total += curve(rate);
    return total;
}

} // namespace detail

/// Expected extra rehearsals (per-cue counting) of a concrete assignment.
inline double assignment_objective(std::span<const double> account_rates, std::span<const CueSet> sets,
                                   std::size_t universe_size, std::span<const std::size_t> set_of_account,
                                   const RehearsalPolicy& policy, double horizon)
{
    detail::check_assignment_inputs(account_rates, sets, universe_size);
    check_assignment(set_of_account, account_rates.size(), sets.size());

    std::vector<double> rates(universe_size, 0.0);
    for (std::size_t a = 0; a < account_rates.size(); ++a)
        for (CueId c : sets[set_of_account[a]])
            rates[c] += account_rates[a];
    const ExtraRehearsalCurve curve(policy, horizon);
    return detail::objective_from_rates(rates, curve);
}

/// Greedy assignment: visit accounts by decreasing rate (ties by index) and
/// give each the unused set whose cues gain the largest reduction in expected
/// extra rehearsals from the account's visits. Ties go to the lowest set index.
inline Assignment greedy_map(std::span<const double> account_rates, std::span<const CueSet> sets,
                             std::size_t universe_size, const RehearsalPolicy& policy, double horizon)
{
    detail::check_assignment_inputs(account_rates, sets, universe_size);

    std::vector<std::size_t> order(account_rates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return account_rates[a] > account_rates[b]; });

    const ExtraRehearsalCurve curve(policy, horizon);
    std::vector<double> accumulated(universe_size, 0.0);
    std::vector<double> current_extras(universe_size, curve(0.0));
    std::vector<bool> used(sets.size(), false);

    Assignment result;
    result.set_of_account.assign(account_rates.size(), 0);

    for (std::size_t account : order) {
        const double lambda = account_rates[account];
        std::size_t best = sets.size();
        double best_gain = 0.0;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (used[j])
                continue;
            double gain = 0.0;
            for (CueId c : sets[j])
                gain += current_extras[c] - curve(accumulated[c] + lambda);
            if (best == sets.size() || gain > best_gain) {
                best = j;
                best_gain = gain;
            }
        }
        used[best] = true;
        result.set_of_account[account] = best;
        for (CueId c : sets[best]) {
            accumulated[c] += lambda;
            current_extras[c] = curve(accumulated[c]);
        }
    }

    result.objective = assignment_objective(account_rates, sets, universe_size, result.set_of_account, policy, horizon);
    return result;
}

/// Minimum-objective injective assignment by exhaustive enumeration. The
/// first minimizer in lexicographic order of (set of account 0, set of
/// account 1, ...) is returned.
inline Assignment exact_min_rehearsal(std::span<const double> account_rates, std::span<const CueSet> sets,
                                      std::size_t universe_size, const RehearsalPolicy& policy, double horizon)
{
    detail::check_assignment_inputs(account_rates, sets, universe_size);
    if (sets.size() > exact_assignment_max_sets)
        throw GuardViolation("exact_min_rehearsal: " + std::to_string(sets.size()) + " sets exceeds the limit of " +
                             std::to_string(exact_assignment_max_sets));

    const ExtraRehearsalCurve curve(policy, horizon);
    std::unordered_map<std::uint64_t, double> memo;
    auto cached_curve = [&](double rate) {
        const auto key = std::bit_cast<std::uint64_t>(rate);
        const auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        const double value = curve(rate);
        memo.emplace(key, value);
        return value;
    };

    const std::size_t accounts = account_rates.size();
    std::vector<double> rates(universe_size, 0.0);
    std::vector<bool> used(sets.size(), false);
    std::vector<std::size_t> current(accounts, 0);

    Assignment best;
    bool found = false;

    // Rates are rebuilt from scratch at each leaf so that they are summed in
    // account order, exactly as assignment_objective does.
    auto evaluate_leaf = [&] {
        std::fill(rates.begin(), rates.end(), 0.0);
        for (std::size_t a = 0; a < accounts; ++a)
            for (CueId c : sets[current[a]])
                rates[c] += account_rates[a];
        const double value = detail::objective_from_rates(rates, cached_curve);
        if (!found || value < best.objective) {
            found = true;
            best.objective = value;
            best.set_of_account = current;
        }
    };

    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == accounts) {
            evaluate_leaf();
            return;
        }
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (used[j])
                continue;
            used[j] = true;
            current[depth] = j;
            self(self, depth + 1);
            used[j] = false;
        }
    };
    recurse(recurse, 0);
    return best;
}

} // namespace rehearsal_lab
