#pragma once

// Security bounds for the guessing game: an adversary with Q offline guesses
// (after a hash leak) or s online guesses per account, who has seen r
// plaintext passwords, tries to recover the password of another account.

#include "rehearsal_lab/errors.hpp"
#include "rehearsal_lab/schemes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rehearsal_lab {

struct SecurityParams
{
    double Q = 0.0;              // offline guess budget
    double assoc_space = 0.0;    // |AS|, associations per cue
    std::size_t ell = 1;         // cues per password
    std::size_t gamma = 0;       // max cues shared by two passwords
    std::size_t r = 0;           // plaintext leaks
    std::size_t h = 0;           // hash leaks
    std::size_t s = 3;           // online guesses per account
    std::size_t m = 100;         // accounts
};

struct DeltaBound
{
    double delta = 1.0;
    double log10_delta = 0.0; // before clamping at 1
    bool vacuous = false;     // l - gamma*r <= 0: leaks may cover a whole password
    bool flagged = false;     // online bound requested with h != 0
};

struct EconModel
{
    std::string label = "custom";
    double budget = 0.0;         // dollars
    double cost_per_guess = 0.0; // dollars per guess
    double guesses_per_hour = 0.0;
    double dollars_per_hour = 0.0;
};

/// Cost presets. C_Q is stored directly; f_H and C_GHz are informational.
inline EconModel econ_preset(std::string_view name, double budget)
{
    std::string key;
    for (char c : name)
        if (std::isalnum(static_cast<unsigned char>(c)))
            key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));

    EconModel e;
    e.budget = budget;
    e.dollars_per_hour = 0.06;
    if (key == "BCRYPT" || key == "BCRYPTL12") {
        e.label = "BCRYPT-L12";
        e.cost_per_guess = 1.94e-5;
        e.guesses_per_hour = 31e3;
    } else if (key == "MD5") {
        e.label = "MD5";
        e.cost_per_guess = 1.1e-10;
        e.guesses_per_hour = 561e6;
    } else if (key == "SHA1") {
        e.label = "SHA1";
        e.cost_per_guess = 1e-10;
        e.guesses_per_hour = 576e6;
    } else {
        throw ConfigError("unknown economics preset '" + std::string(name) + "' (expected bcrypt, md5 or sha1)");
    }
    return e;
}

/// Q = floor(B / C_Q).
inline double guess_budget(const EconModel& econ)
{
    if (!(econ.cost_per_guess > 0.0))
        throw std::invalid_argument("guess_budget: cost per guess must be positive");
    if (econ.budget < 0.0)
        throw std::invalid_argument("guess_budget: budget must be nonnegative");
    return std::floor(econ.budget / econ.cost_per_guess);
}

namespace detail {

inline void check_security_params(const SecurityParams& p)
{
    if (p.assoc_space < 2.0)
        throw std::invalid_argument("security bound: association space must have at least 2 elements");
    if (p.ell == 0)
        throw std::invalid_argument("security bound: ell must be at least 1");
    if (p.Q < 0.0 || !std::isfinite(p.Q))
        throw std::invalid_argument("security bound: Q must be finite and nonnegative");
}

// min(1, numerator / |AS|^(l - gamma r)) evaluated in log space.
inline DeltaBound bounded_ratio(double numerator, const SecurityParams& p)
{
    DeltaBound out;
    const long long exponent = static_cast<long long>(p.ell) - static_cast<long long>(p.gamma * p.r);
    if (exponent <= 0) {
        out.vacuous = true;
        out.delta = 1.0;
        out.log10_delta = 0.0;
        return out;
    }
    if (numerator <= 0.0) {
        out.delta = 0.0;
        out.log10_delta = -std::numeric_limits<double>::infinity();
        return out;
    }
    out.log10_delta = std::log10(numerator) - static_cast<double>(exponent) * std::log10(p.assoc_space);
    out.delta = out.log10_delta >= 0.0 ? 1.0 : std::pow(10.0, out.log10_delta);
    return out;
}

} // namespace detail

/// delta <= Q / |AS|^(l - gamma r), clamped at 1.
inline DeltaBound delta_offline_bound(const SecurityParams& p)
{
    detail::check_security_params(p);
    return detail::bounded_ratio(p.Q, p);
}

/// delta <= s m / |AS|^(l - gamma r), valid only when no hashes leaked.
inline DeltaBound delta_online_bound(const SecurityParams& p)
{
    detail::check_security_params(p);
    DeltaBound out = detail::bounded_ratio(static_cast<double>(p.s) * static_cast<double>(p.m), p);
    out.flagged = p.h != 0;
    return out;
}

struct SecurityRow
{
    std::size_t r = 0;
    DeltaBound online;  // h = 0
    DeltaBound offline; // h > 0
    std::string note;
};

struct SecurityReport
{
    std::string scheme;
    double Q = 0.0;
    std::size_t s = 3;
    std::size_t m = 100;
    std::vector<SecurityRow> rows;
};

namespace detail {

inline DeltaBound plain_bound(double delta)
{
    DeltaBound b;
    b.delta = std::min(1.0, delta);
    b.log10_delta = delta > 0.0 ? std::log10(delta) : -std::numeric_limits<double>::infinity();
    return b;
}

} // namespace detail

/// delta over r = 0..r_max for a scheme; the h = 0 column uses the online
/// bound with the given s and m, the h > 0 column the offline bound.
inline SecurityReport scheme_security_report(const Scheme& scheme, const EconModel& econ, std::size_t s,
                                             std::size_t r_max, std::size_t m)
{
    SecurityReport report;
    report.scheme = scheme.name;
    report.Q = guess_budget(econ);
    report.s = s;
    report.m = m;

    if (scheme.kind == SchemeKind::Lifehacker) {
        // Three words and one of the derivation rules; a single leak reveals
        // the words and leaves only the rule to guess.
        double word_space = 1.0;
        double rule_space = 1.0;
        for (std::size_t c = 0; c < scheme.cue_count; ++c)
            (scheme.cue_labels[c] == "rule" ? rule_space : word_space) *= static_cast<double>(scheme.assoc_space[c]);
        const double full = word_space * rule_space;
        for (std::size_t r = 0; r <= r_max; ++r) {
            SecurityRow row;
            row.r = r;
            if (r == 0) {
                row.offline = detail::plain_bound(report.Q / full);
                row.online = detail::plain_bound(static_cast<double>(s) * static_cast<double>(m) / full);
            } else {
                const double remaining = m > r ? static_cast<double>(m - r) : 0.0;
                row.offline = detail::plain_bound(report.Q / rule_space);
                row.online = detail::plain_bound(remaining * static_cast<double>(s) / rule_space);
                row.note = "residual space " + std::to_string(static_cast<long long>(rule_space)) + " after a leak";
            }
            report.rows.push_back(row);
        }
        return report;
    }

    SecurityParams p;
    p.Q = report.Q;
    p.assoc_space = static_cast<double>(scheme.uniform_assoc_space());
    p.ell = scheme.ell;
    p.gamma = scheme.gamma;
    p.s = s;
    p.m = m;
    for (std::size_t r = 0; r <= r_max; ++r) {
        p.r = r;
        SecurityRow row;
        row.r = r;
        p.h = 0;
        row.online = delta_online_bound(p);
        p.h = 1;
        row.offline = delta_offline_bound(p);
        if (row.offline.vacuous)
            row.note = "bound vacuous: leaks may cover the password";
        report.rows.push_back(row);
    }
    return report;
}

} // namespace rehearsal_lab
