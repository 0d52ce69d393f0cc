// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "rehearsal_lab/rehearsal_lab.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace rehearsal_lab;

namespace {

constexpr double strength_rel_tol = 1e-3;      // criteria 1 and 2
constexpr double sri_cr_rel_tol = 3e-3;        // criterion 3
constexpr double lifehacker_cr_rel_tol = 1e-2; // criterion 3
constexpr double security_rel_tol = 0.05;      // criterion 4
constexpr std::size_t security_min_matches = 16;
constexpr double mc_sigma = 3.0;               // criteria 7 and 8
constexpr std::size_t mc_instances = 50;
constexpr std::size_t mc_trials = 5000;
constexpr std::size_t game_configs = 24;
constexpr std::size_t game_trials = 4000;
constexpr std::size_t optimizer_instances = 100;
// Worst greedy/exact ratio measured over the 100 pinned instances (3.51579),
// rounded up; a larger value means greedy_map regressed.
constexpr double optimizer_ratio_bound = 3.52;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

double rel_err(double got, double want)
{
    return std::abs(got - want) / std::abs(want);
}

std::string fmt(double v)
{
    return format_number(v);
}

// Criterion 1: expanding-schedule strength grid.
Outcome criterion_1()
{
    const auto& sigmas = t5_sigmas();
    const auto& lambdas = strength_table_lambdas();
    const auto& paper = paper_t5();
    const auto grid = tabulate(sigmas, lambdas, ScheduleKind::Expanding, 365.0, t5_window_mode);
    const auto starts = tabulate(sigmas, lambdas, ScheduleKind::Expanding, 365.0, WindowMode::StartsWithinHorizon);
    double worst = 0.0;
    std::size_t ok = 0, starts_ok = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            const double e = rel_err(grid[i][j], paper[i][j]);
            worst = std::max(worst, e);
            ok += e <= strength_rel_tol;
            starts_ok += rel_err(starts[i][j], paper[i][j]) <= strength_rel_tol;
        }
    std::ostringstream d;
    d << ok << "/20 cells within " << strength_rel_tol * 100 << "% (worst " << fmt(worst * 100)
      << "%) with windows=unit-strength-count; starts-within-horizon matches " << starts_ok << "/20";
    return {ok == 20, d.str()};
}

// Criterion 2: constant-schedule strength grid.
Outcome criterion_2()
{
    const auto& sigmas = t6_sigmas();
    const auto& lambdas = strength_table_lambdas();
    const auto& paper = paper_t6();
    const auto& decimals = paper_t6_decimals();
    const auto grid = tabulate(sigmas, lambdas, ScheduleKind::Constant, 365.0, t6_window_mode);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            ok += matches_paper(grid[i][j], PaperValue{paper[i][j], strength_rel_tol, decimals[i][j]});
    std::ostringstream d;
    d << ok << "/20 cells within " << strength_rel_tol * 100
      << "% or to the printed digit; sigma=3 lambda=1 -> " << fmt(grid[1][1]) << ", sigma=31 lambda=1/31 -> "
      << fmt(grid[3][4]);
    return {ok == 20, d.str()};
}

// Criterion 3: baseline usability.
Outcome criterion_3()
{
    const RehearsalPolicy cr(ScheduleKind::Constant, 1.0, WindowMode::CompleteWindowsOnly);
    const RehearsalPolicy er(ScheduleKind::Expanding, 1.0, WindowMode::StartsWithinHorizon);
    const double paper_sri[] = {23396, 24545, 24652, 26751};
    bool pass = true;
    std::ostringstream d;
    std::size_t p = 0;
    for (auto name : preset_profile_names()) {
        const auto profile = preset_profile(name);
        const auto sri = baseline_scheme(SchemeKind::StrongRandomIndependent, profile);
        const auto lh = baseline_scheme(SchemeKind::Lifehacker, profile);
        const double sri_cr = scheme_usability(sri, cr, 365.0, CountingMode::PerSession);
        const double sri_er = scheme_usability(sri, er, 365.0, CountingMode::PerSession);
        const double lh_er = scheme_usability(lh, er, 365.0, CountingMode::PerSession);
        pass = pass && rel_err(sri_cr, paper_sri[p]) <= sri_cr_rel_tol && lh_er < sri_er;
        d << name << " SRI CR " << fmt(sri_cr) << ", ER Lifehacker " << fmt(lh_er) << " < SRI " << fmt(sri_er) << "; ";
        if (name == "Infrequent") {
            const double lh_cr = scheme_usability(lh, cr, 365.0, CountingMode::PerSession);
            pass = pass && rel_err(lh_cr, 56.7) <= lifehacker_cr_rel_tol;
            d << "Infrequent Lifehacker CR " << fmt(lh_cr) << "; ";
        }
        ++p;
    }
    d << "conventions: CR complete-windows-only, ER starts-within-horizon, per-session";
    return {pass, d.str()};
}

// Criterion 4: security grid.
Outcome criterion_4()
{
    const auto grid = security_grid();
    const auto& paper = paper_security_grid();
    std::size_t ok = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t c = 0; c < 6; ++c) {
            const double v = c < 3 ? grid[i].online[c].delta : grid[i].offline[c - 3].delta;
            ok += rel_err(v, paper[i][c]) <= security_rel_tol;
        }
    const double flagged = grid[0].online[1].delta;
    const bool flagged_ok = std::abs(flagged - 300.0 / 19600.0) < 1e-12;
    std::ostringstream d;
    d << ok << "/18 cells within " << security_rel_tol * 100 << "%; (n,4,3) h=0 r=1 emitted as " << fmt(flagged)
      << " (paper 0.011); (n,4,1) r=1 h>0 -> " << fmt(grid[1].offline[1].delta) << "; (n,5,1) r=0 h>0 -> "
      << fmt(grid[2].offline[0].delta);
    return {ok >= security_min_matches && flagged_ok, d.str()};
}

double round_sig(double v, int digits)
{
    const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(v)))));
    return std::round(v * scale) / scale;
}

// Criterion 5: economics.
Outcome criterion_5()
{
    const double bcrypt = guess_budget(econ_preset("bcrypt", 1e6));
    // 10^6 / 1.94e-5 = 10^13 / 194 in integer arithmetic.
    const std::uint64_t oracle = 10'000'000'000'000ULL / 194ULL;
    const double md5 = guess_budget(econ_preset("md5", 1e6));
    const double sha1 = guess_budget(econ_preset("sha1", 1e6));
    const bool pass = bcrypt == static_cast<double>(oracle) && round_sig(bcrypt, 4) == 5.155e10 &&
                      round_sig(md5 / 1e6, 2) == 9.1e9 && round_sig(sha1 / 1e6, 2) == 1e10;
    std::ostringstream d;
    d.precision(12);
    d << "BCRYPT Q=" << bcrypt << " (5.155e10 at 4 significant figures), MD5 per dollar " << fmt(md5 / 1e6)
      << ", SHA1 per dollar " << fmt(sha1 / 1e6);
    return {pass, d.str()};
}

// Criterion 6: constructions.
Outcome criterion_6()
{
    const std::array<std::uint64_t, 4> moduli = {9, 10, 11, 13};
    const bool crt1 = verify_family(crt_family(90, moduli)).is_sharing(43, 4, 1);
    const bool crt2 = verify_family(crt_family(990, moduli)).is_sharing(43, 4, 2);
    std::ostringstream d;
    d << "crt(90) (43,4,1): " << (crt1 ? "yes" : "no") << ", crt(990) (43,4,2): " << (crt2 ? "yes" : "no")
      << "; bounds:";
    bool bounds = true;
    for (const auto& row : construction_rows()) {
        const BigInt b = family_size_bound(row.n, row.ell, row.gamma);
        const bool match = b == row.paper_bound;
        bounds = bounds && match;
        d << " (" << row.n << "," << row.ell << "," << row.gamma << ")=" << b;
        if (!match)
            d << "[paper " << row.paper_bound << "]";
    }
    const std::size_t g943 = greedy_family(9, 4, 3).size();
    const std::size_t g1641 = greedy_family(16, 4, 1).size();
    d << "; greedy(9,4,3)=" << g943 << "; greedy(16,4,1)=" << g1641 << " lexicographic vs paper 16";
    return {crt1 && crt2 && bounds && g943 == 126 && g1641 >= 13, d.str()};
}

// Criterion 7: Monte Carlo against the closed form.
Outcome criterion_7()
{
    const auto start = std::chrono::steady_clock::now();
    std::size_t ok = 0;
    double worst_z = 0.0;
    for (std::size_t k = 0; k < mc_instances; ++k) {
        auto rng = substream(7007, k);
        auto uniform = [&](std::size_t lo, std::size_t hi) {
            return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
        };
        const std::size_t cues = uniform(2, 10);
        const std::size_t accounts = uniform(1, 6);
        std::vector<CueSet> sets;
        std::vector<double> rates;
        for (std::size_t a = 0; a < accounts; ++a) {
            std::vector<CueId> all(cues);
            for (std::size_t c = 0; c < cues; ++c)
                all[c] = static_cast<CueId>(c);
            std::shuffle(all.begin(), all.end(), rng);
            CueSet s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(uniform(1, std::min<std::size_t>(4, cues))));
            std::sort(s.begin(), s.end());
            sets.push_back(std::move(s));
            rates.push_back(preset_rate_classes[uniform(0, 4)] * (0.5 + std::uniform_real_distribution<double>()(rng)));
        }
        const ScheduleKind kinds[] = {ScheduleKind::Constant, ScheduleKind::Expanding, ScheduleKind::Squared};
        const ScheduleKind kind = kinds[uniform(0, 2)];
        const double sigma = kind == ScheduleKind::Constant ? 1.0 + 6.0 * uniform(0, 5) : 0.5 * uniform(1, 4);
        const WindowMode mode = uniform(0, 1) ? WindowMode::StartsWithinHorizon : WindowMode::CompleteWindowsOnly;
        const RehearsalPolicy policy(kind, sigma, mode);
        const double horizon = 365.0;

        const double closed = expected_extra_rehearsals(cue_rates(sets, cues, rates), policy, horizon).total;
        const auto sim = simulate_extra_rehearsals(VisitModel::from_accounts(sets, cues, rates), policy, horizon,
                                                   mc_trials, 1000 + k);
        const double z = sim.standard_error > 0 ? std::abs(sim.mean - closed) / sim.standard_error
                                                : (std::abs(sim.mean - closed) < 1e-12 ? 0.0 : INFINITY);
        worst_z = std::max(worst_z, z);
        ok += z <= mc_sigma;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << ok << "/" << mc_instances << " instances within " << mc_sigma << " SE (" << mc_trials
      << " trials each, worst |z| " << fmt(worst_z) << ", " << fmt(seconds) << " s)";
    return {ok == mc_instances && seconds <= 60.0, d.str()};
}

// Criterion 8: security game soundness.
Outcome criterion_8()
{
    const auto start = std::chrono::steady_clock::now();
    std::size_t sound = 0, covered = 0, covered_won = 0;
    for (std::size_t k = 0; k < game_configs; ++k) {
        auto rng = substream(8008, k);
        auto uniform = [&](std::size_t lo, std::size_t hi) {
            return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
        };
        GameSetup g;
        switch (k % 3) {
        case 0: {
            const std::array<std::uint64_t, 2> moduli = {2, 3};
            const auto f = crt_family(6, moduli);
            g.account_sets = f.sets;
            g.universe_size = f.universe_size;
            break;
        }
        case 1: {
            const std::array<std::uint64_t, 3> moduli = {2, 3, 5};
            const auto f = crt_family(uniform(4, 12), moduli);
            g.account_sets = f.sets;
            g.universe_size = f.universe_size;
            break;
        }
        default: {
            const auto f = all_subsets_family(5, uniform(2, 3));
            g.account_sets.assign(f.sets.begin(), f.sets.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(f.size(), 10)));
            g.universe_size = f.universe_size;
            break;
        }
        }
        g.assoc_space = std::uint64_t{1} << uniform(1, 4);
        g.r = uniform(0, 2);
        g.Q = uniform(0, 40);
        g.strategy = k % 2 ? GameStrategy::UniformRandom : GameStrategy::LeakThenEnumerate;
        const auto res = game_oracle(g, game_trials, 9000 + k);
        sound += res.win_rate <= res.analytic_bound + mc_sigma * res.standard_error + 1e-12;
        if (g.strategy == GameStrategy::LeakThenEnumerate && res.plan.unknown_cues.empty() && g.Q >= 1) {
            ++covered;
            covered_won += res.win_rate == 1.0;
        }
    }
    // A configuration where two leaks cover the target.
    GameSetup cover;
    cover.account_sets = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    cover.universe_size = 4;
    cover.assoc_space = 16;
    cover.r = 2;
    cover.Q = 1;
    const auto res = game_oracle(cover, game_trials, 1);
    ++covered;
    covered_won += res.win_rate == 1.0;

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << sound << "/" << game_configs << " configurations with win rate <= delta + " << mc_sigma << " SE; "
      << covered_won << "/" << covered << " fully covered targets won every trial (" << fmt(seconds) << " s)";
    return {sound == game_configs && covered_won == covered && seconds <= 120.0, d.str()};
}

// Criterion 9: greedy vs exact optimizer.
Outcome criterion_9()
{
    const auto start = std::chrono::steady_clock::now();
    const auto rows = compare_optimizers(optimizer_instances, 9009, 8);
    std::size_t ok = 0;
    double worst = 1.0;
    for (const auto& r : rows) {
        ok += r.exact <= r.greedy;
        worst = std::max(worst, r.ratio());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << ok << "/" << rows.size() << " instances with exact <= greedy; worst greedy/exact ratio " << fmt(worst)
      << " (regression bound " << fmt(optimizer_ratio_bound) << ", " << fmt(seconds) << " s)";
    return {ok == rows.size() && worst <= optimizer_ratio_bound && seconds <= 120.0, d.str()};
}

// Criterion 10: baseline identities.
Outcome criterion_10()
{
    const RehearsalPolicy cr(ScheduleKind::Constant, 1.0, WindowMode::CompleteWindowsOnly);
    const RehearsalPolicy er(ScheduleKind::Expanding, 1.0);
    bool equal = true;
    for (auto name : preset_profile_names()) {
        const auto profile = preset_profile(name);
        const auto weak = baseline_scheme(SchemeKind::ReuseWeak, profile);
        const auto strong = baseline_scheme(SchemeKind::ReuseStrong, profile);
        for (const auto& p : {cr, er})
            equal = equal && scheme_usability(weak, p, 365.0, CountingMode::PerSession) ==
                                 scheme_usability(strong, p, 365.0, CountingMode::PerSession);
    }
    const auto sri = baseline_scheme(SchemeKind::StrongRandomIndependent, preset_profile("Typical"));
    const auto report = scheme_security_report(sri, econ_preset("bcrypt", 1e6), 3, 5, 100);
    bool flat = true;
    for (const auto& row : report.rows)
        flat = flat && row.offline.delta == report.rows.front().offline.delta;
    const double delta = report.rows.front().offline.delta;
    const bool value = round_sig(delta, 3) == 3.22e-7;
    std::ostringstream d;
    d << "ReuseStrong == ReuseWeak per-session on all presets: " << (equal ? "yes" : "no")
      << "; SRI delta over r=0..5 constant: " << (flat ? "yes" : "no") << ", delta = " << fmt(delta);
    return {equal && flat && value, d.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"expanding-schedule strength grid", criterion_1},
        {"constant-schedule strength grid", criterion_2},
        {"baseline usability", criterion_3},
        {"security grid", criterion_4},
        {"guess budgets", criterion_5},
        {"constructions and bounds", criterion_6},
        {"simulation vs closed form", criterion_7},
        {"security game soundness", criterion_8},
        {"greedy vs exact assignment", criterion_9},
        {"baseline identities", criterion_10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
