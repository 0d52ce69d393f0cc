#pragma once

// (n, l, gamma)-sharing set families: m subsets of an n-element cue universe,
// each of size l, pairwise intersecting in at most gamma elements.

#include "rehearsal_lab/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rehearsal_lab {

using CueId = std::uint32_t;
using CueSet = std::vector<CueId>; // sorted ascending, distinct
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t default_enumeration_budget = 10'000'000;

struct SharingFamily
{
    std::size_t universe_size = 0;
    std::vector<CueSet> sets;
    std::size_t set_size = 0;
    std::size_t overlap_bound = 0; // claimed, not necessarily verified
    bool covering = false;         // union of sets == [0, universe_size)
    std::vector<std::string> diagnostics;

    std::size_t size() const noexcept { return sets.size(); }
};

struct FamilyProfile
{
    std::size_t n_effective = 0;
    std::size_t ell_min = 0;
    std::size_t ell_max = 0;
    std::size_t gamma_observed = 0;
    std::size_t m = 0;

    bool is_sharing(std::size_t n, std::size_t ell, std::size_t gamma) const noexcept
    {
        return n_effective == n && ell_min == ell && ell_max == ell && gamma_observed <= gamma;
    }
};

enum class EnumerationOrder { Lexicographic, SeededRandom };

namespace detail {

inline std::size_t intersection_size(const CueSet& a, const CueSet& b) noexcept
{
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

inline bool pairwise_coprime(std::span<const std::uint64_t> values) noexcept
{
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (std::gcd(values[i], values[j]) != 1)
                return false;
    return true;
}

inline CueSet mask_to_set(std::uint64_t mask)
{
    CueSet out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        out.push_back(static_cast<CueId>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

// Steps `idx` (a strictly increasing l-tuple over [0, n)) to its lexicographic
// successor. Returns false after the last tuple.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) noexcept
{
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline void check_enumeration_budget(std::size_t n, std::size_t ell, std::uint64_t budget);

} // namespace detail

/// Exact binomial coefficient.
inline BigInt binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline void detail::check_enumeration_budget(std::size_t n, std::size_t ell, std::uint64_t budget)
{
    const BigInt count = binomial(n, ell);
    if (count > budget) {
        std::ostringstream msg;
        msg << "C(" << n << "," << ell << ") = " << count << " subsets exceeds the enumeration budget of "
            << budget;
        throw GuardViolation(msg.str());
    }
}

/// Exhaustively measures a family: union size, cardinality range and the
/// largest pairwise intersection over all O(m^2) pairs.
inline FamilyProfile verify_family(std::span<const CueSet> sets, std::size_t universe_size)
{
    if (sets.empty())
        throw std::invalid_argument("verify_family: empty family");

    std::vector<CueSet> normalized;
    normalized.reserve(sets.size());
    std::vector<bool> seen(universe_size, false);
    FamilyProfile profile;
    profile.m = sets.size();
    profile.ell_min = std::numeric_limits<std::size_t>::max();

    for (const auto& s : sets) {
        CueSet copy = s;
        std::sort(copy.begin(), copy.end());
        copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
        for (CueId c : copy) {
            if (c >= universe_size)
                throw std::invalid_argument("verify_family: cue " + std::to_string(c) +
                                            " outside universe of size " + std::to_string(universe_size));
            if (!seen[c]) {
                seen[c] = true;
                ++profile.n_effective;
            }
        }
        profile.ell_min = std::min(profile.ell_min, copy.size());
        profile.ell_max = std::max(profile.ell_max, copy.size());
        normalized.push_back(std::move(copy));
    }

    for (std::size_t i = 0; i < normalized.size(); ++i)
        for (std::size_t j = i + 1; j < normalized.size(); ++j)
            profile.gamma_observed =
                std::max(profile.gamma_observed, detail::intersection_size(normalized[i], normalized[j]));
    return profile;
}

inline FamilyProfile verify_family(const SharingFamily& family)
{
    return verify_family(family.sets, family.universe_size);
}

namespace detail {

inline void finalize_coverage(SharingFamily& family)
{
    std::vector<bool> seen(family.universe_size, false);
    std::size_t covered = 0;
    for (const auto& s : family.sets)
        for (CueId c : s)
            if (c < seen.size() && !seen[c]) {
                seen[c] = true;
                ++covered;
            }
    family.covering = covered == family.universe_size;
}

} // namespace detail

/// Chinese-remainder construction. Account i (1-based) receives the cue
/// (i mod n_j) + N_j from every block j, where N_j is the prefix sum of the
/// preceding moduli. With pairwise co-prime increasing moduli and
/// m <= n_1 * ... * n_{gamma+1}, any two sets share at most gamma cues.
inline SharingFamily crt_family(std::size_t m, std::span<const std::uint64_t> moduli)
{
    if (m == 0)
        throw std::invalid_argument("crt_family: m must be positive");
    if (moduli.empty())
        throw std::invalid_argument("crt_family: at least one modulus is required");
    if (std::find(moduli.begin(), moduli.end(), 0u) != moduli.end())
        throw std::invalid_argument("crt_family: moduli must be positive");

    SharingFamily family;
    family.set_size = moduli.size();

    std::vector<std::uint64_t> offsets(moduli.size(), 0);
    for (std::size_t j = 1; j < moduli.size(); ++j)
        offsets[j] = offsets[j - 1] + moduli[j - 1];
    family.universe_size = static_cast<std::size_t>(offsets.back() + moduli.back());

    const bool coprime = detail::pairwise_coprime(moduli);
    const bool increasing = std::adjacent_find(moduli.begin(), moduli.end(), std::greater_equal<>()) == moduli.end();
    if (!coprime)
        family.diagnostics.emplace_back("moduli are not pairwise co-prime; the overlap guarantee does not apply");
    if (!increasing)
        family.diagnostics.emplace_back("moduli are not strictly increasing; the overlap guarantee does not apply");

    family.sets.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) {
        CueSet s;
        s.reserve(moduli.size());
        for (std::size_t j = 0; j < moduli.size(); ++j)
            s.push_back(static_cast<CueId>(i % moduli[j] + offsets[j]));
        family.sets.push_back(std::move(s));
    }

    // Claimed gamma: smallest g with m <= prod_{i<=g+1} n_i when the CRT overlap argument applies.
    family.overlap_bound = moduli.size();
    if (coprime && increasing) {
        std::uint64_t product = 1;
        for (std::size_t g = 0; g < moduli.size(); ++g) {
            product = detail::saturating_mul(product, moduli[g]);
            if (m <= product) {
                family.overlap_bound = g;
                break;
            }
        }
    }
    detail::finalize_coverage(family);
    return family;
}

/// Upper bound on the size of any (n, l, gamma)-sharing family:
/// floor(C(n, gamma+1) / C(l, gamma+1)), in exact arithmetic.
inline BigInt family_size_bound(std::size_t n, std::size_t ell, std::size_t gamma)
{
    if (ell == 0 || ell > n)
        throw std::invalid_argument("family_size_bound: requires 0 < l <= n");
    if (gamma >= ell)
        throw std::invalid_argument("family_size_bound: requires gamma < l");
    return binomial(n, gamma + 1) / binomial(ell, gamma + 1);
}

/// Scans every l-subset of [0, n) in the given order and keeps it iff it
/// meets every kept subset in at most gamma elements. Requires n <= 64.
inline SharingFamily greedy_family(std::size_t n, std::size_t ell, std::size_t gamma,
                                   EnumerationOrder order = EnumerationOrder::Lexicographic,
                                   std::uint64_t seed = 0,
                                   std::uint64_t budget = default_enumeration_budget)
{
    if (ell == 0 || ell > n)
        throw std::invalid_argument("greedy_family: requires 0 < l <= n");
    if (n > 64)
        throw std::invalid_argument("greedy_family: universe larger than 64 cues is not supported");
    detail::check_enumeration_budget(n, ell, budget);

    std::vector<std::uint64_t> admitted;
    auto consider = [&](std::uint64_t candidate) {
        for (std::uint64_t kept : admitted)
            if (static_cast<std::size_t>(std::popcount(kept & candidate)) > gamma)
                return;
        admitted.push_back(candidate);
    };

    std::vector<std::size_t> idx(ell);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto mask_of = [&] {
        std::uint64_t mask = 0;
        for (std::size_t v : idx)
            mask |= std::uint64_t{1} << v;
        return mask;
    };

    if (order == EnumerationOrder::Lexicographic) {
        do {
            consider(mask_of());
        } while (detail::next_combination(idx, n));
    } else {
        std::vector<std::uint64_t> all;
        all.reserve(static_cast<std::size_t>(binomial(n, ell)));
        do {
            all.push_back(mask_of());
        } while (detail::next_combination(idx, n));
        std::mt19937_64 rng(seed);
        std::shuffle(all.begin(), all.end(), rng);
        for (std::uint64_t mask : all)
            consider(mask);
    }

    SharingFamily family;
    family.universe_size = n;
    family.set_size = ell;
    family.overlap_bound = gamma;
    family.sets.reserve(admitted.size());
    for (std::uint64_t mask : admitted)
        family.sets.push_back(detail::mask_to_set(mask));
    detail::finalize_coverage(family);
    return family;
}

/// Every l-subset of [0, n), in lexicographic order; (n, l, l-1)-sharing.
inline SharingFamily all_subsets_family(std::size_t n, std::size_t ell,
                                        std::uint64_t budget = default_enumeration_budget)
{
    if (ell == 0 || ell > n)
        throw std::invalid_argument("all_subsets_family: requires 0 < l <= n");
    detail::check_enumeration_budget(n, ell, budget);

    SharingFamily family;
    family.universe_size = n;
    family.set_size = ell;
    family.overlap_bound = ell - 1;

    std::vector<std::size_t> idx(ell);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
        family.sets.emplace_back(idx.begin(), idx.end());
    } while (detail::next_combination(idx, n));
    detail::finalize_coverage(family);
    return family;
}

/// Union of a CRT base family of size n_1 * ... * n_{gamma+1} with one
/// (n_i, l, gamma)-sharing family per block, each shifted into its block of
/// the universe. Block families may be empty.
inline SharingFamily composed_family(std::span<const std::uint64_t> moduli,
                                     std::span<const SharingFamily> block_families, std::size_t gamma)
{
    const std::size_t ell = moduli.size();
    if (ell == 0)
        throw std::invalid_argument("composed_family: at least one modulus is required");
    if (gamma >= ell)
        throw std::invalid_argument("composed_family: requires gamma < l");
    if (!detail::pairwise_coprime(moduli))
        throw std::invalid_argument("composed_family: moduli must be pairwise co-prime");
    if (block_families.size() != ell)
        throw std::invalid_argument("composed_family: need one block family per modulus");

    std::uint64_t base_size = 1;
    for (std::size_t i = 0; i <= gamma; ++i)
        base_size = detail::saturating_mul(base_size, moduli[i]);

    SharingFamily family = crt_family(static_cast<std::size_t>(base_size), moduli);
    family.overlap_bound = gamma;

    std::uint64_t offset = 0;
    for (std::size_t b = 0; b < ell; ++b) {
        const SharingFamily& block = block_families[b];
        if (!block.sets.empty()) {
            for (const auto& s : block.sets) {
                if (s.size() != ell)
                    throw std::invalid_argument("composed_family: block " + std::to_string(b) +
                                                " has a set of the wrong size");
                for (CueId c : s)
                    if (c >= moduli[b])
                        throw std::invalid_argument("composed_family: block " + std::to_string(b) +
                                                    " uses cue " + std::to_string(c) + " beyond width " +
                                                    std::to_string(moduli[b]));
            }
            if (verify_family(block.sets, moduli[b]).gamma_observed > gamma)
                throw std::invalid_argument("composed_family: block " + std::to_string(b) +
                                            " exceeds the overlap bound");
            for (const auto& s : block.sets) {
                CueSet shifted;
                shifted.reserve(s.size());
                for (CueId c : s)
                    shifted.push_back(static_cast<CueId>(c + offset));
                std::sort(shifted.begin(), shifted.end());
                family.sets.push_back(std::move(shifted));
            }
        }
        offset += moduli[b];
    }
    detail::finalize_coverage(family);
    return family;
}

} // namespace rehearsal_lab
