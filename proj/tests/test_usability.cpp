#include "rehearsal_lab/usability.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <algorithm>

using namespace rehearsal_lab;

namespace {

// Direct closed form for one cue under a constant schedule that keeps
// `count` windows.
double constant_oracle(double lambda, double sigma, std::size_t count)
{
    return static_cast<double>(count) * std::exp(-lambda * sigma);
}

double expanding_oracle(double lambda, double sigma, std::size_t count)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        sum += std::exp(-lambda * std::pow(2.0, static_cast<double>(i) * sigma));
    return sum;
}

} // namespace

TEST(Profiles, PresetsHaveSeventyFiveAccounts)
{
    for (auto name : preset_profile_names()) {
        const auto p = preset_profile(name);
        EXPECT_EQ(p.size(), 75u) << name;
    }
    const auto va = preset_profile("very-active");
    EXPECT_EQ(va.name, "VeryActive");
    EXPECT_EQ(std::count(va.rates.begin(), va.rates.end(), 1.0), 10);
    EXPECT_EQ(std::count(va.rates.begin(), va.rates.end(), 1.0 / 365.0), 35);
    EXPECT_EQ(preset_profile("Infrequent").rates.front(), 1.0 / 3.0);
    EXPECT_THROW(preset_profile("sloth"), ConfigError);
}

TEST(Curve, ConstantScheduleMatchesOracle)
{
    for (double sigma : {1.0, 3.0, 7.0, 31.0})
        for (double lambda : {2.0, 1.0, 1.0 / 3.0, 1.0 / 7.0, 1.0 / 31.0}) {
            const ExtraRehearsalCurve curve(RehearsalPolicy(ScheduleKind::Constant, sigma), 365.0);
            const auto count = static_cast<std::size_t>(std::floor(365.0 / sigma)) + 1;
            EXPECT_NEAR(curve(lambda), constant_oracle(lambda, sigma, count), 1e-9 * count);
        }
}

TEST(Curve, ExpandingScheduleMatchesOracle)
{
    const ExtraRehearsalCurve curve(RehearsalPolicy(ScheduleKind::Expanding, 1.0), 365.0);
    for (double lambda : {2.0, 1.0, 0.1, 0.0})
        EXPECT_NEAR(curve(lambda), expanding_oracle(lambda, 1.0, 9), 1e-12);
    const ExtraRehearsalCurve unit(RehearsalPolicy(ScheduleKind::Expanding, 0.5, WindowMode::UnitStrengthCount), 365.0);
    EXPECT_NEAR(unit(1.0), expanding_oracle(1.0, 0.5, 9), 1e-12);
}

TEST(Curve, PublishedSingleCueValues)
{
    EXPECT_NEAR(ExtraRehearsalCurve(RehearsalPolicy(ScheduleKind::Constant, 1.0), 365.0)(1.0), 134.644, 1e-3);
    EXPECT_NEAR(ExtraRehearsalCurve(RehearsalPolicy(ScheduleKind::Constant, 3.0), 365.0)(1.0), 6.074, 1e-3);
    EXPECT_NEAR(ExtraRehearsalCurve(RehearsalPolicy(ScheduleKind::Constant, 31.0), 365.0)(1.0 / 31.0), 4.4146, 1e-4);
    EXPECT_NEAR(ExtraRehearsalCurve(RehearsalPolicy(ScheduleKind::Expanding, 1.0, WindowMode::UnitStrengthCount),
                                    365.0)(1.0),
                0.521866, 1e-6);
}

TEST(Curve, MonotoneInRateAndZeroRateCountsEveryWindow)
{
    const RehearsalPolicy p(ScheduleKind::Squared, 1.0);
    const ExtraRehearsalCurve curve(p, 365.0);
    EXPECT_DOUBLE_EQ(curve(0.0), static_cast<double>(curve.window_count()));
    double prev = curve(0.0);
    for (double lambda = 0.01; lambda < 5.0; lambda *= 1.5) {
        const double v = curve(lambda);
        EXPECT_LE(v, prev);
        prev = v;
    }
    EXPECT_EQ(curve(1e6), 0.0);
}

TEST(CueRates, SumsOwnerRates)
{
    const std::vector<CueSet> sets = {{0, 1}, {1, 2}};
    const std::vector<double> rates = {0.5, 0.25};
    const auto map = cue_rates(sets, 4, rates);
    EXPECT_DOUBLE_EQ(map.rates[0], 0.5);
    EXPECT_DOUBLE_EQ(map.rates[1], 0.75);
    EXPECT_DOUBLE_EQ(map.rates[2], 0.25);
    EXPECT_EQ(map.owners[3], 0u);
    EXPECT_NE(map.session_group[0], map.session_group[1]);
    EXPECT_THROW(cue_rates(sets, 2, rates), std::invalid_argument);
}

TEST(Assignment, CheckRejectsNonInjective)
{
    const std::vector<std::size_t> dup = {0, 0};
    EXPECT_THROW(check_assignment(dup, 2, 3), std::invalid_argument);
    const std::vector<std::size_t> out = {0, 5};
    EXPECT_THROW(check_assignment(out, 2, 3), std::invalid_argument);
    const std::vector<std::size_t> ok = {2, 0};
    EXPECT_NO_THROW(check_assignment(ok, 2, 3));
    EXPECT_THROW(check_assignment(ok, 3, 3), std::invalid_argument);
}

TEST(Expected, PerCueSumsCurveOverCuesInUse)
{
    const std::vector<CueSet> sets = {{0, 1}, {1, 2}};
    const std::vector<double> rates = {0.5, 0.25};
    const auto map = cue_rates(sets, 5, rates);
    const RehearsalPolicy p(ScheduleKind::Expanding, 1.0);
    const auto report = expected_extra_rehearsals(map, p, 365.0);
    const double oracle = expanding_oracle(0.5, 1, 9) + expanding_oracle(0.75, 1, 9) + expanding_oracle(0.25, 1, 9);
    EXPECT_NEAR(report.total, oracle, 1e-12);
    EXPECT_EQ(report.per_cue.size(), 3u);
}

TEST(Expected, PerSessionCountsSharedPasswordsOnce)
{
    // SRI-style: four private cues per account. Per session, each account counts once.
    const std::vector<double> rates = {1.0, 1.0 / 7.0, 1.0 / 365.0};
    std::vector<CueSet> sets;
    for (CueId a = 0; a < 3; ++a)
        sets.push_back({static_cast<CueId>(4 * a), static_cast<CueId>(4 * a + 1), static_cast<CueId>(4 * a + 2),
                        static_cast<CueId>(4 * a + 3)});
    const auto map = cue_rates(sets, 12, rates);
    const RehearsalPolicy p(ScheduleKind::Constant, 1.0, WindowMode::CompleteWindowsOnly);
    const auto cue = expected_extra_rehearsals(map, p, 365.0, CountingMode::PerCue);
    const auto session = expected_extra_rehearsals(map, p, 365.0, CountingMode::PerSession);
    double oracle = 0.0;
    for (double r : rates)
        oracle += 365.0 * std::exp(-r);
    EXPECT_NEAR(session.total, oracle, 1e-9);
    EXPECT_NEAR(cue.total, 4.0 * oracle, 1e-9);
    EXPECT_EQ(session.session_count, 3u);
}

TEST(Expected, SriTypicalConstantMatchesPublishedCell)
{
    const auto profile = preset_profile("Typical");
    std::vector<CueSet> sets;
    for (std::size_t a = 0; a < profile.size(); ++a)
        sets.push_back({static_cast<CueId>(4 * a), static_cast<CueId>(4 * a + 1), static_cast<CueId>(4 * a + 2),
                        static_cast<CueId>(4 * a + 3)});
    const auto map = cue_rates(sets, 4 * profile.size(), profile.rates);
    const RehearsalPolicy p(ScheduleKind::Constant, 1.0, WindowMode::CompleteWindowsOnly);
    const double total = expected_extra_rehearsals(map, p, 365.0, CountingMode::PerSession).total;
    const double oracle = 365.0 * (5 * std::exp(-1.0) + 10 * std::exp(-1.0 / 3) + 10 * std::exp(-1.0 / 7) +
                                   10 * std::exp(-1.0 / 31) + 40 * std::exp(-1.0 / 365));
    EXPECT_NEAR(total, oracle, 1e-8);
    EXPECT_NEAR(total, 24545, 0.003 * 24545);
}

TEST(Expected, RejectsBadInput)
{
    const RehearsalPolicy p(ScheduleKind::Constant, 1.0);
    auto map = CueRateMap::from_rates(std::vector<double>{1.0});
    EXPECT_THROW(expected_extra_rehearsals(map, p, 0.0), std::invalid_argument);
    map.rates[0] = -1.0;
    EXPECT_THROW(expected_extra_rehearsals(map, p, 10.0), std::invalid_argument);
    EXPECT_THROW(parse_counting_mode("per-person"), ConfigError);
}

TEST(Tabulate, GridShape)
{
    const std::vector<double> sigmas = {1.0, 2.0};
    const std::vector<double> lambdas = {1.0, 0.5, 0.25};
    const auto grid = tabulate(sigmas, lambdas, ScheduleKind::Constant, 365.0);
    ASSERT_EQ(grid.size(), 2u);
    ASSERT_EQ(grid[0].size(), 3u);
    EXPECT_NEAR(grid[1][2], constant_oracle(0.25, 2.0, 183), 1e-9);
}
