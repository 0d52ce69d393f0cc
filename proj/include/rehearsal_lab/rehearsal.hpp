#pragma once

// Rehearsal schedules. A schedule is a gap-free sequence of windows
// [t_i, t_{i+1}) starting at t_0 = 0; a cue must be rehearsed at least once in
// each window to be retained. The window lengths are
//
//   CR (constant):  sigma
//   ER (expanding): 2^(i * sigma)
//   SQ (squared):   (2i + 1) * sigma, i.e. t_i = i^2 * sigma

#include "rehearsal_lab/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rehearsal_lab {

enum class ScheduleKind { Constant, Expanding, Squared };

/// Which windows a finite horizon t keeps.
enum class WindowMode {
    StartsWithinHorizon, // t_i <= t
    CompleteWindowsOnly, // t_{i+1} <= t
    UnitStrengthCount,   // as many windows as the same kind has at sigma = 1 (StartsWithinHorizon)
};

inline constexpr std::size_t max_window_count = 50'000'000;

inline std::string_view to_string(ScheduleKind kind) noexcept
{
    switch (kind) {
    case ScheduleKind::Constant: return "CR";
    case ScheduleKind::Expanding: return "ER";
    case ScheduleKind::Squared: return "SQ";
    }
    return "?";
}

inline std::string_view to_string(WindowMode mode) noexcept
{
    switch (mode) {
    case WindowMode::StartsWithinHorizon: return "starts-within-horizon";
    case WindowMode::CompleteWindowsOnly: return "complete-windows-only";
    case WindowMode::UnitStrengthCount: return "unit-strength-count";
    }
    return "?";
}

inline ScheduleKind parse_schedule_kind(std::string_view text)
{
    if (text == "CR" || text == "cr")
        return ScheduleKind::Constant;
    if (text == "ER" || text == "er")
        return ScheduleKind::Expanding;
    if (text == "SQ" || text == "sq")
        return ScheduleKind::Squared;
    throw ConfigError("unknown rehearsal kind '" + std::string(text) + "' (expected CR, ER or SQ)");
}

inline WindowMode parse_window_mode(std::string_view text)
{
    if (text == "starts" || text == "starts-within-horizon")
        return WindowMode::StartsWithinHorizon;
    if (text == "complete" || text == "complete-windows-only")
        return WindowMode::CompleteWindowsOnly;
    if (text == "unit" || text == "unit-strength-count")
        return WindowMode::UnitStrengthCount;
    throw ConfigError("unknown window mode '" + std::string(text) + "' (expected starts, complete or unit)");
}

struct RehearsalWindow
{
    double start = 0.0; // inclusive, days
    double end = 0.0;   // exclusive, days

    double length() const noexcept { return end - start; }
};

struct RehearsalPolicy
{
    ScheduleKind kind = ScheduleKind::Expanding;
    double sigma = 1.0;
    WindowMode window_mode = WindowMode::StartsWithinHorizon;

    RehearsalPolicy() = default;
    RehearsalPolicy(ScheduleKind k, double s, WindowMode mode = WindowMode::StartsWithinHorizon)
        : kind(k), sigma(s), window_mode(mode)
    {
        if (!(s > 0.0) || !std::isfinite(s))
            throw std::invalid_argument("rehearsal policy: sigma must be positive and finite");
    }

    /// Parses `KIND:sigma`, e.g. `ER:1.0`.
    static RehearsalPolicy parse(std::string_view text, WindowMode mode = WindowMode::StartsWithinHorizon)
    {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos)
            throw ConfigError("rehearsal policy '" + std::string(text) + "' must look like KIND:sigma");
        const ScheduleKind kind = parse_schedule_kind(text.substr(0, colon));
        double sigma = 0.0;
        try {
            std::size_t used = 0;
            const std::string number(text.substr(colon + 1));
            sigma = std::stod(number, &used);
            if (used != number.size())
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ConfigError("rehearsal policy '" + std::string(text) + "' has a malformed sigma");
        }
        if (!(sigma > 0.0))
            throw ConfigError("rehearsal policy '" + std::string(text) + "' needs sigma > 0");
        return RehearsalPolicy(kind, sigma, mode);
    }

    std::string label() const
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s:%g", std::string(to_string(kind)).c_str(), sigma);
        return buf;
    }
};

/// Length of window i (0-based).
inline double window_length(const RehearsalPolicy& policy, std::size_t i) noexcept
{
    const double x = static_cast<double>(i);
    switch (policy.kind) {
    case ScheduleKind::Constant: return policy.sigma;
    case ScheduleKind::Expanding: return std::exp2(x * policy.sigma);
    case ScheduleKind::Squared: return (2.0 * x + 1.0) * policy.sigma;
    }
    return policy.sigma;
}

namespace detail {

inline std::vector<RehearsalWindow> windows_by_horizon(const RehearsalPolicy& policy, double horizon,
                                                       bool require_complete)
{
    std::vector<RehearsalWindow> out;
    double start = 0.0;
    for (std::size_t i = 0;; ++i) {
        const double end = start + window_length(policy, i);
        if (require_complete ? end > horizon : start > horizon)
            break;
        if (out.size() >= max_window_count)
            throw GuardViolation("rehearsal schedule produces more than " + std::to_string(max_window_count) +
                                 " windows");
        out.push_back({start, end});
        start = end;
    }
    return out;
}

} // namespace detail

/// Expands a policy into its windows over the horizon [0, t].
inline std::vector<RehearsalWindow> windows(const RehearsalPolicy& policy, double horizon)
{
    if (!(horizon > 0.0))
        throw std::invalid_argument("windows: horizon must be positive");

    switch (policy.window_mode) {
    case WindowMode::StartsWithinHorizon:
        return detail::windows_by_horizon(policy, horizon, false);
    case WindowMode::CompleteWindowsOnly:
        return detail::windows_by_horizon(policy, horizon, true);
    case WindowMode::UnitStrengthCount: {
        const RehearsalPolicy unit(policy.kind, 1.0, WindowMode::StartsWithinHorizon);
        const std::size_t count = detail::windows_by_horizon(unit, horizon, false).size();
        std::vector<RehearsalWindow> out;
        out.reserve(count);
        double start = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const double end = start + window_length(policy, i);
            out.push_back({start, end});
            start = end;
        }
        return out;
    }
    }
    return {};
}

} // namespace rehearsal_lab
