#pragma once

// Password management schemes: four baselines built from dictionary words and
// the Shared Cues family, which derives each account's password from the
// person-action-object stories attached to its public cues.

#include "rehearsal_lab/assignment.hpp"
#include "rehearsal_lab/designs.hpp"
#include "rehearsal_lab/errors.hpp"
#include "rehearsal_lab/inventory.hpp"
#include "rehearsal_lab/rehearsal.hpp"
#include "rehearsal_lab/usability.hpp"

#include <cstdint>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rehearsal_lab {

enum class SchemeKind { ReuseWeak, ReuseStrong, Lifehacker, StrongRandomIndependent, SharedCues };

inline constexpr std::size_t lifehacker_rule_count = 50;

enum class Role { Act, Obj };

struct CueHalf
{
    std::size_t image = 0;
    std::size_t person = 0;
    Role role = Role::Act;
};

/// A public cue showing two people: the first paired with an action, the
/// second with an object.
struct SplitCue
{
    CueHalf act;
    CueHalf obj;
};

struct PaoStory
{
    std::size_t person = 0;
    std::size_t action = 0;
    std::size_t object = 0;
};

struct PaoStories
{
    std::vector<PaoStory> stories;
    std::vector<SplitCue> cues;
    std::vector<std::pair<std::size_t, std::size_t>> associations; // (action, object) per cue
};

/// Samples one random action and object per person, then pairs person i's
/// action with person i+1's object (cyclically). Every association is uniform
/// over actions x objects and independent of the others.
template <typename Rng>
PaoStories create_pao_stories(std::size_t n, Rng& rng, std::span<const std::string> images,
                              std::span<const std::string> names, std::size_t action_count,
                              std::size_t object_count)
{
    if (n == 0)
        throw std::invalid_argument("create_pao_stories: n must be at least 1");
    if (images.size() != n || names.size() != n)
        throw std::invalid_argument("create_pao_stories: need exactly n images and n names (n = " +
                                    std::to_string(n) + ")");
    if (action_count == 0 || object_count == 0)
        throw std::invalid_argument("create_pao_stories: empty action or object list");

    std::uniform_int_distribution<std::size_t> pick_action(0, action_count - 1);
    std::uniform_int_distribution<std::size_t> pick_object(0, object_count - 1);

    PaoStories out;
    out.stories.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t action = pick_action(rng);
        const std::size_t object = pick_object(rng);
        out.stories.push_back({i, action, object});
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = (i + 1) % n;
        out.cues.push_back({{i, i, Role::Act}, {next, next, Role::Obj}});
        out.associations.emplace_back(out.stories[i].action, out.stories[next].object);
    }
    return out;
}

struct Scheme
{
    SchemeKind kind = SchemeKind::SharedCues;
    std::string name;
    std::size_t cue_count = 0;
    std::vector<CueSet> account_cue_sets;     // public cues of each account
    std::vector<std::size_t> assignment;      // account -> index of its set in the source family
    std::vector<std::uint64_t> associations;  // secret association id per cue
    std::vector<std::uint64_t> assoc_space;   // number of possible associations per cue
    std::vector<std::string> cue_labels;
    std::vector<std::string> association_labels;
    std::size_t ell = 0;   // cues per password
    std::size_t gamma = 0; // max cues shared by two accounts
    VisitationProfile profile;
    std::vector<SplitCue> split_cues; // Shared Cues only
    std::vector<std::string> diagnostics;

    std::size_t account_count() const noexcept { return account_cue_sets.size(); }

    /// Associations of the account's cues, by ascending cue id.
    std::vector<std::uint64_t> password(std::size_t account) const
    {
        std::vector<std::uint64_t> out;
        for (CueId c : account_cue_sets.at(account))
            out.push_back(associations[c]);
        return out;
    }

    /// Largest per-cue association space; all cues share it for the built-in schemes.
    std::uint64_t uniform_assoc_space() const noexcept
    {
        std::uint64_t out = 0;
        for (auto v : assoc_space)
            out = std::max(out, v);
        return out;
    }

    CueRateMap cue_rate_map() const
    {
        return cue_rates(account_cue_sets, cue_count, profile.rates);
    }
};

namespace detail {

template <typename Rng>
std::size_t draw_index(Rng& rng, std::size_t size)
{
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

inline void require_dictionary(const Dictionary& dictionary)
{
    if (dictionary.empty())
        throw std::invalid_argument("scheme generation needs a nonempty dictionary");
}

inline void require_accounts(const VisitationProfile& profile)
{
    if (profile.size() == 0)
        throw std::invalid_argument("scheme generation needs at least one account");
}

// Every account uses every cue in [0, cue_count).
inline std::vector<CueSet> shared_by_all(std::size_t accounts, std::size_t cue_count)
{
    CueSet all(cue_count);
    for (std::size_t c = 0; c < cue_count; ++c)
        all[c] = static_cast<CueId>(c);
    return std::vector<CueSet>(accounts, all);
}

inline std::vector<std::size_t> identity(std::size_t n)
{
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = i;
    return out;
}

template <typename Rng>
void add_word_cue(Scheme& scheme, const Dictionary& dictionary, Rng& rng, std::string label)
{
    const std::size_t w = draw_index(rng, dictionary.size());
    scheme.associations.push_back(w);
    scheme.assoc_space.push_back(dictionary.size());
    scheme.cue_labels.push_back(std::move(label));
    scheme.association_labels.push_back(dictionary[w]);
}

} // namespace detail

/// One random word reused for every account.
template <typename Rng>
Scheme gen_reuse_weak(const Dictionary& dictionary, const VisitationProfile& profile, Rng& rng)
{
    detail::require_dictionary(dictionary);
    detail::require_accounts(profile);
    Scheme s;
    s.kind = SchemeKind::ReuseWeak;
    s.name = "ReuseWeak";
    s.profile = profile;
    s.cue_count = 1;
    detail::add_word_cue(s, dictionary, rng, "word");
    s.account_cue_sets = detail::shared_by_all(profile.size(), 1);
    s.assignment = detail::identity(profile.size());
    s.ell = 1;
    s.gamma = 1;
    return s;
}

/// Four random words, the same four for every account.
template <typename Rng>
Scheme gen_reuse_strong(const Dictionary& dictionary, const VisitationProfile& profile, Rng& rng)
{
    detail::require_dictionary(dictionary);
    detail::require_accounts(profile);
    Scheme s;
    s.kind = SchemeKind::ReuseStrong;
    s.name = "ReuseStrong";
    s.profile = profile;
    s.cue_count = 4;
    for (int j = 1; j <= 4; ++j)
        detail::add_word_cue(s, dictionary, rng, "word" + std::to_string(j));
    s.account_cue_sets = detail::shared_by_all(profile.size(), 4);
    s.assignment = detail::identity(profile.size());
    s.ell = 4;
    s.gamma = 4;
    return s;
}

/// Three shared words plus one shared derivation rule applied to the account
/// name. Rules are opaque ids; only their count matters to the models.
template <typename Rng>
Scheme gen_lifehacker(const Dictionary& dictionary, std::size_t rule_count, const VisitationProfile& profile,
                      Rng& rng, bool strict = true)
{
    detail::require_dictionary(dictionary);
    detail::require_accounts(profile);
    if (rule_count == 0)
        throw std::invalid_argument("lifehacker: rule set is empty");
    Scheme s;
    if (rule_count != lifehacker_rule_count) {
        const std::string msg = "lifehacker: rule set has " + std::to_string(rule_count) + " rules, expected " +
                                std::to_string(lifehacker_rule_count);
        if (strict)
            throw std::invalid_argument(msg);
        s.diagnostics.push_back(msg);
    }
    s.kind = SchemeKind::Lifehacker;
    s.name = "Lifehacker";
    s.profile = profile;
    s.cue_count = 4;
    for (int j = 1; j <= 3; ++j)
        detail::add_word_cue(s, dictionary, rng, "word" + std::to_string(j));
    const std::size_t rule = detail::draw_index(rng, rule_count);
    s.associations.push_back(rule);
    s.assoc_space.push_back(rule_count);
    s.cue_labels.emplace_back("rule");
    s.association_labels.push_back("rule#" + std::to_string(rule));
    s.account_cue_sets = detail::shared_by_all(profile.size(), 4);
    s.assignment = detail::identity(profile.size());
    s.ell = 4;
    s.gamma = 4;
    return s;
}

/// Four fresh random words per account; nothing is shared.
template <typename Rng>
Scheme gen_sri(const Dictionary& dictionary, const VisitationProfile& profile, Rng& rng)
{
    detail::require_dictionary(dictionary);
    detail::require_accounts(profile);
    Scheme s;
    s.kind = SchemeKind::StrongRandomIndependent;
    s.name = "SRI";
    s.profile = profile;
    s.cue_count = 4 * profile.size();
    for (std::size_t i = 0; i < profile.size(); ++i) {
        CueSet cues;
        for (std::size_t j = 0; j < 4; ++j) {
            cues.push_back(static_cast<CueId>(4 * i + j));
            detail::add_word_cue(s, dictionary, rng,
                                 "account" + std::to_string(i) + "/word" + std::to_string(j + 1));
        }
        s.account_cue_sets.push_back(std::move(cues));
    }
    s.assignment = detail::identity(profile.size());
    s.ell = 4;
    s.gamma = 0;
    return s;
}

/// Shared Cues over a sharing family: one PAO-derived cue per universe
/// element, accounts mapped onto family sets with greedy_map.
template <typename Rng>
Scheme shared_cues_generate(const SharingFamily& family, const VisitationProfile& profile,
                            const RehearsalPolicy& policy, double horizon, Rng& rng, const Inventory& inventory,
                            std::string name = "SharedCues")
{
    detail::require_accounts(profile);
    if (family.size() < profile.size())
        throw std::invalid_argument("shared cues: family has " + std::to_string(family.size()) + " sets but " +
                                    std::to_string(profile.size()) + " accounts need one each");
    const FamilyProfile verified = verify_family(family);
    if (verified.ell_min != verified.ell_max)
        throw std::invalid_argument("shared cues: family sets must all have the same size");

    const std::size_t n = family.universe_size;
    if (inventory.images.size() < n || inventory.names.size() < n)
        throw std::invalid_argument("shared cues: inventory has too few images or names for " + std::to_string(n) +
                                    " cues");

    const auto images = std::span<const std::string>(inventory.images).first(n);
    const auto names = std::span<const std::string>(inventory.names).first(n);
    const auto stories =
        create_pao_stories(n, rng, images, names, inventory.actions.size(), inventory.objects.size());

    Scheme s;
    s.kind = SchemeKind::SharedCues;
    s.name = std::move(name);
    s.profile = profile;
    s.cue_count = n;
    s.split_cues = stories.cues;
    s.ell = verified.ell_max;
    s.gamma = verified.gamma_observed;
    s.diagnostics = family.diagnostics;
    const std::uint64_t space = inventory.actions.size() * inventory.objects.size();
    for (std::size_t c = 0; c < n; ++c) {
        const auto [action, object] = stories.associations[c];
        s.associations.push_back(action * inventory.objects.size() + object);
        s.assoc_space.push_back(space);
        const auto& cue = stories.cues[c];
        s.cue_labels.push_back(inventory.names[cue.act.person] + "@" + inventory.images[cue.act.image] + "/Act+" +
                               inventory.names[cue.obj.person] + "@" + inventory.images[cue.obj.image] + "/Obj");
        s.association_labels.push_back(inventory.actions[action] + " " + inventory.objects[object]);
    }

    const Assignment pi = greedy_map(profile.rates, family.sets, n, policy, horizon);
    s.assignment = pi.set_of_account;
    for (std::size_t target : s.assignment)
        s.account_cue_sets.push_back(family.sets[target]);
    return s;
}

/// Families behind the SC-0, SC-1 and SC-2 presets.
inline SharingFamily shared_cues_family(int variant)
{
    switch (variant) {
    case 0: return all_subsets_family(9, 4);
    case 1: {
        const std::uint64_t moduli[] = {9, 10, 11, 13};
        return crt_family(90, moduli);
    }
    case 2: {
        const std::uint64_t moduli[] = {9, 10, 11, 13, 17};
        return crt_family(90, moduli);
    }
    default: throw std::invalid_argument("unknown Shared Cues variant SC-" + std::to_string(variant));
    }
}

/// Scheme dump: a versioned header, one line per account
/// (`account: cue ids | association ids`), then the cue/association inventory.
inline void write_scheme(std::ostream& out, const Scheme& s)
{
    out << "# scheme v1 name=" << s.name << " n=" << s.cue_count << " m=" << s.account_count()
        << " as=" << s.uniform_assoc_space() << '\n';
    for (std::size_t a = 0; a < s.account_count(); ++a) {
        out << a << ": ";
        const auto& cues = s.account_cue_sets[a];
        for (std::size_t i = 0; i < cues.size(); ++i)
            out << (i ? "," : "") << cues[i];
        out << " | ";
        for (std::size_t i = 0; i < cues.size(); ++i)
            out << (i ? "," : "") << s.associations[cues[i]];
        out << '\n';
    }
    out << "# associations\n";
    for (std::size_t c = 0; c < s.cue_count; ++c)
        out << c << ": " << s.cue_labels[c] << " => " << s.association_labels[c] << '\n';
}

/// Builds a scheme by name: reuse-weak, reuse-strong, lifehacker, sri,
/// sc0, sc1 or sc2 (case and punctuation ignored).
template <typename Rng>
Scheme make_scheme(std::string_view name, const VisitationProfile& profile, const RehearsalPolicy& policy,
                   double horizon, Rng& rng, const Inventory& inventory)
{
    const std::string key = detail::normalize_name(name);
    if (key == "reuseweak")
        return gen_reuse_weak(inventory.words, profile, rng);
    if (key == "reusestrong")
        return gen_reuse_strong(inventory.words, profile, rng);
    if (key == "lifehacker")
        return gen_lifehacker(inventory.words, lifehacker_rule_count, profile, rng);
    if (key == "sri")
        return gen_sri(inventory.words, profile, rng);
    for (int v = 0; v <= 2; ++v)
        if (key == "sc" + std::to_string(v))
            return shared_cues_generate(shared_cues_family(v), profile, policy, horizon, rng, inventory,
                                        "SC-" + std::to_string(v));
    throw ConfigError("unknown scheme '" + std::string(name) +
                      "' (expected reuse-weak, reuse-strong, lifehacker, sri, sc0, sc1 or sc2)");
}

} // namespace rehearsal_lab
