#include "rehearsal_lab/schemes.hpp"
#include "rehearsal_lab/tables.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace rehearsal_lab;

namespace {

Inventory small_inventory()
{
    Inventory inv;
    inv.words = synthetic_dictionary(100);
    for (int i = 0; i < 70; ++i) {
        inv.names.push_back("name" + std::to_string(i));
        inv.images.push_back("image" + std::to_string(i));
    }
    for (int i = 0; i < 12; ++i) {
        inv.actions.push_back("act" + std::to_string(i));
        inv.objects.push_back("obj" + std::to_string(i));
    }
    return inv;
}

} // namespace

TEST(Pao, CyclicPairing)
{
    std::mt19937_64 rng(1);
    const std::vector<std::string> images = {"a", "b", "c"};
    const std::vector<std::string> names = {"x", "y", "z"};
    const auto pao = create_pao_stories(3, rng, images, names, 5, 7);
    ASSERT_EQ(pao.cues.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t next = (i + 1) % 3;
        EXPECT_EQ(pao.cues[i].act.person, i);
        EXPECT_EQ(pao.cues[i].act.role, Role::Act);
        EXPECT_EQ(pao.cues[i].obj.person, next);
        EXPECT_EQ(pao.cues[i].obj.role, Role::Obj);
        EXPECT_EQ(pao.associations[i].first, pao.stories[i].action);
        EXPECT_EQ(pao.associations[i].second, pao.stories[next].object);
        EXPECT_LT(pao.associations[i].first, 5u);
        EXPECT_LT(pao.associations[i].second, 7u);
    }
    EXPECT_THROW(create_pao_stories(4, rng, images, names, 5, 7), std::invalid_argument);
    EXPECT_THROW(create_pao_stories(3, rng, images, names, 0, 7), std::invalid_argument);
}

TEST(Pao, AssociationsAreRoughlyUniform)
{
    std::mt19937_64 rng(3);
    std::vector<std::string> labels(2, "p");
    std::map<std::pair<std::size_t, std::size_t>, int> counts;
    const int draws = 9000;
    for (int t = 0; t < draws; ++t) {
        const auto pao = create_pao_stories(2, rng, labels, labels, 3, 3);
        ++counts[pao.associations[0]];
    }
    ASSERT_EQ(counts.size(), 9u);
    for (const auto& [pair, c] : counts)
        EXPECT_NEAR(c, draws / 9.0, 5 * std::sqrt(draws / 9.0));
}

TEST(Baselines, Structure)
{
    const auto profile = preset_profile("Typical");
    const Dictionary dict = synthetic_dictionary(50);
    std::mt19937_64 rng(5);

    const auto weak = gen_reuse_weak(dict, profile, rng);
    EXPECT_EQ(weak.cue_count, 1u);
    EXPECT_EQ(weak.account_count(), 75u);
    EXPECT_EQ(weak.password(0), weak.password(74));

    const auto strong = gen_reuse_strong(dict, profile, rng);
    EXPECT_EQ(strong.cue_count, 4u);
    EXPECT_EQ(strong.password(3).size(), 4u);

    const auto lh = gen_lifehacker(dict, lifehacker_rule_count, profile, rng);
    EXPECT_EQ(lh.cue_count, 4u);
    EXPECT_EQ(lh.assoc_space.back(), 50u);
    EXPECT_EQ(lh.cue_labels.back(), "rule");
    EXPECT_THROW(gen_lifehacker(dict, 49, profile, rng), std::invalid_argument);
    const auto lenient = gen_lifehacker(dict, 49, profile, rng, false);
    EXPECT_FALSE(lenient.diagnostics.empty());

    const auto sri = gen_sri(dict, profile, rng);
    EXPECT_EQ(sri.cue_count, 300u);
    EXPECT_EQ(sri.gamma, 0u);
    for (std::size_t a = 1; a < sri.account_count(); ++a) {
        std::vector<CueId> common;
        std::set_intersection(sri.account_cue_sets[0].begin(), sri.account_cue_sets[0].end(),
                              sri.account_cue_sets[a].begin(), sri.account_cue_sets[a].end(),
                              std::back_inserter(common));
        EXPECT_TRUE(common.empty());
    }
    EXPECT_THROW(gen_sri(Dictionary{}, profile, rng), std::invalid_argument);
}

TEST(Baselines, ReuseStrongSessionUsabilityEqualsReuseWeak)
{
    const RehearsalPolicy cr(ScheduleKind::Constant, 1.0, WindowMode::CompleteWindowsOnly);
    const RehearsalPolicy er(ScheduleKind::Expanding, 1.0);
    for (auto name : preset_profile_names()) {
        const auto profile = preset_profile(name);
        const auto weak = baseline_scheme(SchemeKind::ReuseWeak, profile);
        const auto strong = baseline_scheme(SchemeKind::ReuseStrong, profile);
        for (const auto& p : {cr, er}) {
            EXPECT_EQ(scheme_usability(weak, p, 365.0, CountingMode::PerSession),
                      scheme_usability(strong, p, 365.0, CountingMode::PerSession));
            EXPECT_DOUBLE_EQ(4.0 * scheme_usability(weak, p, 365.0, CountingMode::PerCue),
                             scheme_usability(strong, p, 365.0, CountingMode::PerCue));
        }
    }
}

TEST(SharedCues, UsesGreedyAssignmentOnFamily)
{
    const Inventory inv = small_inventory();
    const auto family = shared_cues_family(1);
    const auto profile = preset_profile("VeryActive");
    const RehearsalPolicy p(ScheduleKind::Expanding, 1.0);
    std::mt19937_64 rng(8);
    const auto s = shared_cues_generate(family, profile, p, 365.0, rng, inv);
    EXPECT_EQ(s.cue_count, 43u);
    EXPECT_EQ(s.account_count(), 75u);
    EXPECT_EQ(s.ell, 4u);
    EXPECT_EQ(s.gamma, 1u);
    EXPECT_EQ(s.uniform_assoc_space(), 144u);
    const auto greedy = greedy_map(profile.rates, family.sets, family.universe_size, p, 365.0);
    EXPECT_EQ(s.assignment, greedy.set_of_account);
    for (std::size_t a = 0; a < s.account_count(); ++a)
        EXPECT_EQ(s.account_cue_sets[a], family.sets[s.assignment[a]]);
    for (std::size_t c = 0; c < s.cue_count; ++c)
        EXPECT_LT(s.associations[c], 144u);
}

TEST(SharedCues, RejectsUndersizedInputs)
{
    Inventory inv = small_inventory();
    const RehearsalPolicy p(ScheduleKind::Expanding, 1.0);
    std::mt19937_64 rng(1);
    const auto family = shared_cues_family(1);
    VisitationProfile many;
    many.rates.assign(91, 1.0);
    EXPECT_THROW(shared_cues_generate(family, many, p, 365.0, rng, inv), std::invalid_argument);
    inv.names.resize(10);
    EXPECT_THROW(shared_cues_generate(family, preset_profile("Typical"), p, 365.0, rng, inv), std::invalid_argument);
}

TEST(SharedCues, PresetFamilies)
{
    EXPECT_TRUE(verify_family(shared_cues_family(0)).is_sharing(9, 4, 3));
    EXPECT_TRUE(verify_family(shared_cues_family(1)).is_sharing(43, 4, 1));
    EXPECT_TRUE(verify_family(shared_cues_family(2)).is_sharing(60, 5, 1));
    EXPECT_THROW(shared_cues_family(3), std::invalid_argument);
}

TEST(SharedCues, SameSeedSameScheme)
{
    const Inventory inv = small_inventory();
    const auto profile = preset_profile("Occasional");
    const RehearsalPolicy p(ScheduleKind::Expanding, 1.0);
    std::mt19937_64 a(21), b(21);
    std::ostringstream x, y;
    write_scheme(x, make_scheme("sc1", profile, p, 365.0, a, inv));
    write_scheme(y, make_scheme("SC-1", profile, p, 365.0, b, inv));
    EXPECT_EQ(x.str(), y.str());
    std::mt19937_64 c(22);
    EXPECT_THROW(make_scheme("sc9", profile, p, 365.0, c, inv), ConfigError);
}

TEST(Dump, FormatHeaderAndLines)
{
    const auto profile = preset_profile("Typical");
    const auto s = baseline_scheme(SchemeKind::StrongRandomIndependent, profile, 3);
    std::ostringstream out;
    write_scheme(out, s);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "# scheme v1 name=SRI n=300 m=75 as=20000");
    std::getline(in, line);
    EXPECT_EQ(line.rfind("0: 0,1,2,3 | ", 0), 0u);
}
