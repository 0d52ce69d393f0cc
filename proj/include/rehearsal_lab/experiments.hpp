#pragma once

// Seeded random instances for comparing greedy_map with the exact optimum.

#include "rehearsal_lab/assignment.hpp"
#include "rehearsal_lab/random.hpp"
#include "rehearsal_lab/usability.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace rehearsal_lab {

struct AssignmentInstance
{
    std::size_t universe_size = 0;
    std::vector<CueSet> sets;
    std::vector<double> rates;
    RehearsalPolicy policy;
    double horizon = 365.0;
};

/// Instance `index` of the sweep: 5 to 9 distinct sets of 2 or 3 cues over 4
/// to 8 cues, up to 8 accounts with rates from the preset classes, and a
/// random CR/ER/SQ policy.
inline AssignmentInstance random_assignment_instance(std::uint64_t seed, std::uint64_t index,
                                                     std::size_t max_accounts = 8)
{
    auto rng = substream(seed, index);
    auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };

    AssignmentInstance inst;
    inst.universe_size = uniform(4, 8);
    const std::size_t ell = uniform(2, 3);
    std::size_t target_sets = uniform(5, exact_assignment_max_sets);

    std::vector<CueId> cues(inst.universe_size);
    for (std::size_t c = 0; c < cues.size(); ++c)
        cues[c] = static_cast<CueId>(c);
    std::set<CueSet> seen;
    for (std::size_t attempt = 0; inst.sets.size() < target_sets && attempt < 1000; ++attempt) {
        std::shuffle(cues.begin(), cues.end(), rng);
        CueSet s(cues.begin(), cues.begin() + static_cast<std::ptrdiff_t>(ell));
        std::sort(s.begin(), s.end());
        if (seen.insert(s).second)
            inst.sets.push_back(std::move(s));
    }

    const std::size_t accounts = uniform(1, std::min(max_accounts, inst.sets.size()));
    for (std::size_t a = 0; a < accounts; ++a)
        inst.rates.push_back(preset_rate_classes[uniform(0, preset_rate_classes.size() - 1)]);

    static const ScheduleKind kinds[] = {ScheduleKind::Constant, ScheduleKind::Expanding, ScheduleKind::Squared};
    static const double sigmas[] = {0.5, 1.0, 2.0};
    const ScheduleKind kind = kinds[uniform(0, 2)];
    // Constant schedules at small sigma have hundreds of windows; keep them coarse.
    const double sigma = kind == ScheduleKind::Constant ? 7.0 * sigmas[uniform(0, 2)] : sigmas[uniform(0, 2)];
    inst.policy = RehearsalPolicy(kind, sigma);
    return inst;
}

struct OptimizerComparison
{
    std::uint64_t index = 0;
    std::size_t accounts = 0;
    std::size_t sets = 0;
    double greedy = 0.0;
    double exact = 0.0;

    double ratio() const noexcept { return exact > 0.0 ? greedy / exact : (greedy > 0.0 ? INFINITY : 1.0); }
};

inline std::vector<OptimizerComparison> compare_optimizers(std::size_t count, std::uint64_t seed,
                                                           std::size_t max_accounts = 8)
{
    std::vector<OptimizerComparison> out(count);
    parallel_for_index(count, [&](std::size_t i) {
        const AssignmentInstance inst = random_assignment_instance(seed, i, max_accounts);
        OptimizerComparison& row = out[i];
        row.index = i;
        row.accounts = inst.rates.size();
        row.sets = inst.sets.size();
        row.greedy = greedy_map(inst.rates, inst.sets, inst.universe_size, inst.policy, inst.horizon).objective;
        row.exact = exact_min_rehearsal(inst.rates, inst.sets, inst.universe_size, inst.policy, inst.horizon).objective;
    });
    return out;
}

} // namespace rehearsal_lab
