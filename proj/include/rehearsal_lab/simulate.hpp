#pragma once

// Monte Carlo estimate of extra rehearsals: sample every account's visits as
// a Poisson process, mark the windows of each cue that some owning account
// hits, and count the rest.

#include "rehearsal_lab/random.hpp"
#include "rehearsal_lab/rehearsal.hpp"
#include "rehearsal_lab/usability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace rehearsal_lab {

/// Accounts with visitation rates and the cues each one rehearses.
struct VisitModel
{
    std::vector<double> account_rates;
    std::vector<std::vector<std::size_t>> account_cues;
    std::size_t cue_count = 0;

    /// One account per cue in use, carrying that cue's rate.
    static VisitModel from_cue_rates(const CueRateMap& rates)
    {
        VisitModel model;
        model.cue_count = rates.size();
        for (std::size_t c = 0; c < rates.size(); ++c) {
            if (rates.owners[c] == 0)
                continue;
            model.account_rates.push_back(rates.rates[c]);
            model.account_cues.push_back({c});
        }
        return model;
    }

    static VisitModel from_accounts(std::span<const CueSet> account_sets, std::size_t universe_size,
                                    std::span<const double> account_rates)
    {
        if (account_sets.size() != account_rates.size())
            throw std::invalid_argument("VisitModel: one cue set per account required");
        VisitModel model;
        model.cue_count = universe_size;
        model.account_rates.assign(account_rates.begin(), account_rates.end());
        for (const auto& s : account_sets)
            model.account_cues.emplace_back(s.begin(), s.end());
        return model;
    }
};

struct SimulationResult
{
    std::size_t trials = 0;
    double mean = 0.0;
    double standard_error = 0.0;
    std::vector<double> per_cue_mean; // 0 for cues no account uses
};

inline SimulationResult simulate_extra_rehearsals(const VisitModel& model, const RehearsalPolicy& policy,
                                                  double horizon, std::size_t trials, std::uint64_t seed,
                                                  unsigned threads = 0)
{
    if (trials == 0)
        throw std::invalid_argument("simulate_extra_rehearsals: trials must be at least 1");
    for (double r : model.account_rates)
        if (r < 0.0 || !std::isfinite(r))
            throw std::invalid_argument("simulate_extra_rehearsals: rates must be finite and nonnegative");

    const auto schedule = windows(policy, horizon);
    std::vector<double> starts;
    starts.reserve(schedule.size());
    for (const auto& w : schedule)
        starts.push_back(w.start);
    const double end_of_schedule = schedule.empty() ? 0.0 : schedule.back().end;

    std::vector<bool> in_use(model.cue_count, false);
    for (const auto& cues : model.account_cues)
        for (std::size_t c : cues) {
            if (c >= model.cue_count)
                throw std::invalid_argument("simulate_extra_rehearsals: cue outside universe");
            in_use[c] = true;
        }
    std::vector<std::size_t> used_cues;
    for (std::size_t c = 0; c < model.cue_count; ++c)
        if (in_use[c])
            used_cues.push_back(c);

    const std::size_t window_count = schedule.size();
    // Per-trial, per-used-cue miss counts, reduced in trial order afterwards.
    std::vector<std::uint32_t> misses(trials * used_cues.size(), 0);
    std::vector<std::size_t> slot_of(model.cue_count, 0);
    for (std::size_t k = 0; k < used_cues.size(); ++k)
        slot_of[used_cues[k]] = k;

    parallel_for_index(
        trials,
        [&](std::size_t trial) {
            auto rng = substream(seed, trial);
            std::vector<char> hit(used_cues.size() * window_count, 0);
            for (std::size_t a = 0; a < model.account_rates.size(); ++a) {
                const double rate = model.account_rates[a];
                if (rate <= 0.0 || model.account_cues[a].empty())
                    continue;
                std::exponential_distribution<double> gap(rate);
                // Only the first visit in a window matters; by memorylessness
                // the next relevant visit is a fresh gap after the window ends.
                double t = gap(rng);
                while (t < end_of_schedule) {
                    const auto it = std::upper_bound(starts.begin(), starts.end(), t);
                    const std::size_t w = static_cast<std::size_t>(it - starts.begin()) - 1;
                    for (std::size_t c : model.account_cues[a])
                        hit[slot_of[c] * window_count + w] = 1;
                    t = schedule[w].end + gap(rng);
                }
            }
            for (std::size_t k = 0; k < used_cues.size(); ++k) {
                std::uint32_t count = 0;
                for (std::size_t w = 0; w < window_count; ++w)
                    count += hit[k * window_count + w] == 0;
                misses[trial * used_cues.size() + k] = count;
            }
        },
        threads);

    SimulationResult result;
    result.trials = trials;
    result.per_cue_mean.assign(model.cue_count, 0.0);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        double total = 0.0;
        for (std::size_t k = 0; k < used_cues.size(); ++k) {
            const double v = misses[trial * used_cues.size() + k];
            result.per_cue_mean[used_cues[k]] += v;
            total += v;
        }
        sum += total;
        sum_sq += total * total;
    }
    const double n = static_cast<double>(trials);
    for (double& v : result.per_cue_mean)
        v /= n;
    result.mean = sum / n;
    if (trials > 1) {
        const double variance = std::max(0.0, (sum_sq - n * result.mean * result.mean) / (n - 1.0));
        result.standard_error = std::sqrt(variance / n);
    }
    return result;
}

inline SimulationResult simulate_extra_rehearsals(const CueRateMap& rates, const RehearsalPolicy& policy,
                                                  double horizon, std::size_t trials, std::uint64_t seed,
                                                  unsigned threads = 0)
{
    return simulate_extra_rehearsals(VisitModel::from_cue_rates(rates), policy, horizon, trials, seed, threads);
}

} // namespace rehearsal_lab
