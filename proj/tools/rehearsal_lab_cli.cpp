// rehearsal-lab: command-line front end for the rehearsal_lab library.
//
// Exit codes: 0 success, 1 failed verification, 2 configuration error,
// 3 guard violation.

#include "rehearsal_lab/rehearsal_lab.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rl = rehearsal_lab;

namespace {

constexpr int exit_failed_check = 1;
constexpr int exit_config_error = 2;
constexpr int exit_guard_violation = 3;

struct Common
{
    std::string format = "markdown";
    rl::OutputFormat output() const { return rl::parse_output_format(format); }
};

std::vector<std::uint64_t> parse_moduli(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(item, &used);
            if (used != item.size() || item.empty() || item[0] == '-')
                throw std::invalid_argument("bad");
            out.push_back(v);
        } catch (const std::exception&) {
            throw rl::ConfigError("--moduli: '" + item + "' is not a positive integer", 0, "moduli");
        }
    }
    if (out.empty())
        throw rl::ConfigError("--moduli must list at least one modulus", 0, "moduli");
    return out;
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw rl::ConfigError("cannot write '" + path + "'");
    out << text;
}

rl::Table profile_table(const rl::FamilyProfile& p)
{
    rl::Table t;
    t.title = "family profile";
    t.columns = {"n", "l_min", "l_max", "gamma", "m"};
    t.add_row({std::to_string(p.n_effective), std::to_string(p.ell_min), std::to_string(p.ell_max),
               std::to_string(p.gamma_observed), std::to_string(p.m)});
    return t;
}

// ---------------------------------------------------------------- gen-family

struct GenFamilyArgs
{
    std::string construction;
    std::size_t m = 0, n = 0, l = 0, gamma = 0;
    std::string moduli;
    std::string order = "lex";
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = rl::default_enumeration_budget;
    std::string out;
};

int cmd_gen_family(const GenFamilyArgs& a, const Common& common)
{
    rl::SharingFamily family;
    if (a.construction == "crt") {
        const auto moduli = parse_moduli(a.moduli);
        family = rl::crt_family(a.m, moduli);
    } else if (a.construction == "greedy") {
        rl::EnumerationOrder order = rl::EnumerationOrder::Lexicographic;
        if (a.order == "random") {
            if (!a.seed)
                throw rl::ConfigError("greedy --order random requires --seed", 0, "seed");
            order = rl::EnumerationOrder::SeededRandom;
        } else if (a.order != "lex") {
            throw rl::ConfigError("--order must be lex or random", 0, "order");
        }
        family = rl::greedy_family(a.n, a.l, a.gamma, order, a.seed.value_or(0), a.budget);
    } else if (a.construction == "subsets") {
        family = rl::all_subsets_family(a.n, a.l, a.budget);
    } else if (a.construction == "composed") {
        const auto moduli = parse_moduli(a.moduli);
        std::vector<rl::SharingFamily> blocks;
        for (auto width : moduli)
            blocks.push_back(rl::greedy_family(width, moduli.size(), a.gamma, rl::EnumerationOrder::Lexicographic, 0,
                                               a.budget));
        family = rl::composed_family(moduli, blocks, a.gamma);
    } else {
        throw rl::ConfigError("unknown construction '" + a.construction + "' (expected crt, greedy, subsets, composed)",
                              0, "construction");
    }

    std::ostringstream text;
    rl::write_family(text, family);
    write_output(a.out, text.str());
    std::ostream& info = (a.out.empty() || a.out == "-") ? std::cerr : std::cout;
    rl::render(info, profile_table(rl::verify_family(family)), common.output());
    for (const auto& d : family.diagnostics)
        info << "note: " << d << '\n';
    return 0;
}

// ------------------------------------------------------------- verify-family

struct VerifyArgs
{
    std::string file;
    std::optional<std::size_t> n, l, gamma;
};

int cmd_verify_family(const VerifyArgs& a, const Common& common)
{
    std::ifstream in(a.file);
    if (!in)
        throw rl::ConfigError("cannot read '" + a.file + "'");
    const rl::SharingFamily family = rl::read_family(in);
    const rl::FamilyProfile p = rl::verify_family(family);
    rl::render(std::cout, profile_table(p), common.output());
    if (a.n || a.l || a.gamma) {
        const std::size_t n = a.n.value_or(p.n_effective);
        const std::size_t l = a.l.value_or(p.ell_max);
        const std::size_t g = a.gamma.value_or(p.gamma_observed);
        const bool ok = p.is_sharing(n, l, g);
        std::cout << "(" << n << "," << l << "," << g << ")-sharing: " << (ok ? "yes" : "no") << '\n';
        return ok ? 0 : exit_failed_check;
    }
    return 0;
}

// --------------------------------------------------------------------- table

int cmd_table(const std::string& id, std::uint64_t budget, const Common& common)
{
    rl::render(std::cout, rl::make_table(id, budget), common.output());
    return 0;
}

// ------------------------------------------- usability / simulate / security

struct ExperimentArgs
{
    std::string config_file;
    std::map<std::string, std::string> overrides;
    std::string out;
};

rl::ExperimentConfig load_config(const ExperimentArgs& a)
{
    rl::ExperimentConfig cfg;
    if (!a.config_file.empty()) {
        std::ifstream in(a.config_file);
        if (!in)
            throw rl::ConfigError("cannot read config '" + a.config_file + "'");
        cfg = rl::read_config(in);
    }
    for (const auto& [key, value] : a.overrides)
        rl::apply_config_value(cfg, key, value);
    return cfg;
}

rl::Inventory inventory_or_synthetic(bool needs_inventory)
{
    if (needs_inventory)
        return rl::load_inventory();
    rl::Inventory inv;
    inv.words = rl::synthetic_dictionary();
    return inv;
}

bool is_shared_cues(const std::string& scheme)
{
    return rl::detail::normalize_name(scheme).rfind("sc", 0) == 0;
}

// Structure-only schemes: associations are irrelevant to usability and the
// security bounds, so a fixed internal seed is used.
rl::Scheme structural_scheme(const rl::ExperimentConfig& cfg)
{
    std::mt19937_64 rng(0);
    const rl::Inventory inv = inventory_or_synthetic(is_shared_cues(cfg.scheme));
    return rl::make_scheme(cfg.scheme, cfg.visitation_profile(), cfg.rehearsal_policy(), cfg.horizon, rng, inv);
}

std::vector<std::string> convention_footer(const rl::ExperimentConfig& cfg)
{
    return {"policy " + cfg.rehearsal_policy().label() + ", windows=" + std::string(rl::to_string(cfg.window_mode)) +
                ", counting=" + std::string(rl::to_string(cfg.counting_mode)) +
                ", horizon=" + rl::format_number(cfg.horizon),
            "profile " + cfg.visitation_profile().name + " (" + std::to_string(cfg.visitation_profile().size()) +
                " accounts)"};
}

int cmd_usability(const ExperimentArgs& a, const Common& common)
{
    const rl::ExperimentConfig cfg = load_config(a);
    const rl::Scheme scheme = structural_scheme(cfg);
    const auto report =
        rl::expected_extra_rehearsals(scheme.cue_rate_map(), cfg.rehearsal_policy(), cfg.horizon, cfg.counting_mode);
    rl::Table t;
    t.title = "expected extra rehearsals";
    t.columns = {"scheme", "profile", "policy", "cues in use", "counted", "expected extra rehearsals"};
    t.add_row({scheme.name, cfg.visitation_profile().name, cfg.rehearsal_policy().label(),
               std::to_string(report.per_cue.size()), std::to_string(report.session_count),
               rl::format_number(report.total)});
    t.footer = convention_footer(cfg);
    rl::render(std::cout, t, common.output());
    return 0;
}

int cmd_simulate(const ExperimentArgs& a, const Common& common)
{
    const rl::ExperimentConfig cfg = load_config(a);
    if (!cfg.seed)
        throw rl::ConfigError("simulate requires --seed", 0, "seed");
    const rl::Scheme scheme = structural_scheme(cfg);
    const rl::RehearsalPolicy policy = cfg.rehearsal_policy();
    const auto model = rl::VisitModel::from_accounts(scheme.account_cue_sets, scheme.cue_count, scheme.profile.rates);
    const auto sim = rl::simulate_extra_rehearsals(model, policy, cfg.horizon, cfg.trials, *cfg.seed);
    const auto closed =
        rl::expected_extra_rehearsals(scheme.cue_rate_map(), policy, cfg.horizon, rl::CountingMode::PerCue);
    const double z = sim.standard_error > 0.0 ? (sim.mean - closed.total) / sim.standard_error : 0.0;

    rl::Table t;
    t.title = "Monte Carlo vs closed form";
    t.columns = {"scheme", "trials", "simulated mean", "standard error", "closed form", "z"};
    t.add_row({scheme.name, std::to_string(sim.trials), rl::format_number(sim.mean),
               rl::format_number(sim.standard_error), rl::format_number(closed.total), rl::format_number(z)});
    t.footer = convention_footer(cfg);
    t.footer.back() += "; both columns count per cue, seed " + std::to_string(*cfg.seed);
    rl::render(std::cout, t, common.output());
    return 0;
}

int cmd_security(const ExperimentArgs& a, const Common& common)
{
    const rl::ExperimentConfig cfg = load_config(a);
    const rl::Scheme scheme = structural_scheme(cfg);
    const rl::EconModel econ = rl::econ_preset(cfg.econ, cfg.budget);
    const auto report = rl::scheme_security_report(scheme, econ, cfg.s, cfg.r_max, cfg.m);

    rl::Table t;
    t.title = "security of " + scheme.name;
    t.columns = {"r", "delta h=0", "delta h>0", "note"};
    for (const auto& row : report.rows)
        t.add_row({std::to_string(row.r), rl::format_number(row.online.delta), rl::format_number(row.offline.delta),
                   row.note});
    t.footer = {"Q = " + rl::format_number(report.Q) + " (" + econ.label + ", budget $" +
                    rl::format_number(cfg.budget) + ")",
                "|AS| = " + std::to_string(scheme.uniform_assoc_space()) + ", l = " + std::to_string(scheme.ell) +
                    ", gamma = " + std::to_string(scheme.gamma) + ", s = " + std::to_string(cfg.s) +
                    ", m = " + std::to_string(cfg.m)};
    rl::render(std::cout, t, common.output());
    return 0;
}

int cmd_gen_scheme(const ExperimentArgs& a, const Common&)
{
    const rl::ExperimentConfig cfg = load_config(a);
    if (!cfg.seed)
        throw rl::ConfigError("gen-scheme requires --seed", 0, "seed");
    std::mt19937_64 rng(*cfg.seed);
    const rl::Inventory inv = rl::load_inventory();
    const rl::Scheme scheme =
        rl::make_scheme(cfg.scheme, cfg.visitation_profile(), cfg.rehearsal_policy(), cfg.horizon, rng, inv);
    std::ostringstream text;
    rl::write_scheme(text, scheme);
    write_output(a.out, text.str());
    return 0;
}

// ------------------------------------------------------------------- compare

int cmd_compare(std::size_t instances, std::optional<std::uint64_t> seed, std::size_t max_accounts,
                const Common& common)
{
    if (!seed)
        throw rl::ConfigError("compare requires --seed", 0, "seed");
    if (max_accounts == 0 || max_accounts > rl::exact_assignment_max_sets)
        throw rl::ConfigError("--max-accounts must be between 1 and " +
                                  std::to_string(rl::exact_assignment_max_sets),
                              0, "max-accounts");
    const auto rows = rl::compare_optimizers(instances, *seed, max_accounts);
    rl::Table t;
    t.title = "greedy_map vs exact minimum";
    t.columns = {"instance", "accounts", "sets", "greedy", "exact", "ratio"};
    double worst = 1.0;
    for (const auto& r : rows) {
        t.add_row({std::to_string(r.index), std::to_string(r.accounts), std::to_string(r.sets),
                   rl::format_number(r.greedy), rl::format_number(r.exact), rl::format_number(r.ratio())});
        worst = std::max(worst, r.ratio());
    }
    t.footer = {"worst ratio " + rl::format_number(worst) + " over " + std::to_string(rows.size()) + " instances"};
    rl::render(std::cout, t, common.output());
    return 0;
}

void add_experiment_options(CLI::App* cmd, ExperimentArgs& a, bool with_out)
{
    cmd->add_option("--config", a.config_file, "flat key = value config file");
    auto flag = [&](const std::string& name, const std::string& key, const std::string& help) {
        cmd->add_option_function<std::string>(name, [&a, key](const std::string& v) { a.overrides[key] = v; }, help);
    };
    flag("--scheme", "scheme", "reuse-weak, reuse-strong, lifehacker, sri, sc0, sc1, sc2");
    flag("--profile", "profile", "VeryActive, Typical, Occasional or Infrequent");
    flag("--rates", "rates", "explicit comma-separated visit rates (overrides --profile)");
    flag("--policy", "policy", "rehearsal policy KIND:sigma, e.g. ER:1");
    flag("--horizon", "horizon", "horizon in days");
    flag("--window", "window_mode", "starts, complete or unit");
    flag("--mode", "counting_mode", "per-cue or per-session");
    flag("--seed", "seed", "random seed");
    flag("--trials", "trials", "Monte Carlo trials");
    flag("--econ", "econ", "bcrypt, md5 or sha1");
    flag("--budget", "budget", "adversary budget in dollars");
    flag("--s", "s", "online guesses per account");
    flag("--m", "m", "number of accounts for the online bound");
    flag("--r", "r_max", "largest number of plaintext leaks to report");
    if (with_out)
        cmd->add_option("--out", a.out, "output file (default stdout)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rehearsal-lab: usability and security models for password schemes"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "markdown (default) or csv")->capture_default_str();

    GenFamilyArgs gen;
    auto* gen_cmd = app.add_subcommand("gen-family", "build a sharing set family");
    gen_cmd->add_option("construction", gen.construction, "crt, greedy, subsets or composed")->required();
    gen_cmd->add_option("--m", gen.m, "number of sets (crt)");
    gen_cmd->add_option("--moduli", gen.moduli, "comma-separated moduli (crt, composed)");
    gen_cmd->add_option("--n", gen.n, "universe size");
    gen_cmd->add_option("--l", gen.l, "set size");
    gen_cmd->add_option("--gamma", gen.gamma, "overlap bound");
    gen_cmd->add_option("--order", gen.order, "lex or random (greedy)");
    gen_cmd->add_option("--seed", gen.seed, "seed for --order random");
    gen_cmd->add_option("--budget", gen.budget, "enumeration budget");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    VerifyArgs verify;
    std::size_t vn = 0, vl = 0, vg = 0;
    auto* verify_cmd = app.add_subcommand("verify-family", "profile a family file");
    verify_cmd->add_option("file", verify.file, "family file")->required();
    auto* vn_opt = verify_cmd->add_option("--n", vn, "expected universe size");
    auto* vl_opt = verify_cmd->add_option("--l", vl, "expected set size");
    auto* vg_opt = verify_cmd->add_option("--gamma", vg, "expected overlap bound");

    std::string table_id;
    std::uint64_t table_budget = rl::default_enumeration_budget;
    auto* table_cmd = app.add_subcommand("table", "reproduce a table (T2 ... T10)");
    table_cmd->add_option("id", table_id, "table id")->required();
    table_cmd->add_option("--budget", table_budget, "enumeration budget for T8");

    ExperimentArgs usability, simulate, security, scheme;
    auto* usability_cmd = app.add_subcommand("usability", "expected extra rehearsals of a scheme");
    add_experiment_options(usability_cmd, usability, false);
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo check of expected extra rehearsals");
    add_experiment_options(simulate_cmd, simulate, false);
    auto* security_cmd = app.add_subcommand("security", "security bounds over r");
    add_experiment_options(security_cmd, security, false);
    auto* scheme_cmd = app.add_subcommand("gen-scheme", "generate and dump a scheme");
    add_experiment_options(scheme_cmd, scheme, true);

    std::size_t instances = 100;
    std::size_t max_accounts = 8;
    std::optional<std::uint64_t> compare_seed;
    auto* compare_cmd = app.add_subcommand("compare", "greedy_map vs exact minimum on random instances");
    compare_cmd->add_option("--instances", instances, "number of instances");
    compare_cmd->add_option("--seed", compare_seed, "random seed");
    compare_cmd->add_option("--max-accounts", max_accounts, "accounts per instance at most");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config_error;
    }

    try {
        if (gen_cmd->parsed())
            return cmd_gen_family(gen, common);
        if (verify_cmd->parsed()) {
            if (vn_opt->count())
                verify.n = vn;
            if (vl_opt->count())
                verify.l = vl;
            if (vg_opt->count())
                verify.gamma = vg;
            return cmd_verify_family(verify, common);
        }
        if (table_cmd->parsed())
            return cmd_table(table_id, table_budget, common);
        if (usability_cmd->parsed())
            return cmd_usability(usability, common);
        if (simulate_cmd->parsed())
            return cmd_simulate(simulate, common);
        if (security_cmd->parsed())
            return cmd_security(security, common);
        if (scheme_cmd->parsed())
            return cmd_gen_scheme(scheme, common);
        if (compare_cmd->parsed())
            return cmd_compare(instances, compare_seed, max_accounts, common);
    } catch (const rl::GuardViolation& e) {
        std::cerr << "guard violation: " << e.what() << '\n';
        return exit_guard_violation;
    } catch (const rl::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    }
    return 0;
}
