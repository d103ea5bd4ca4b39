// Copyright 2026 The oakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "oakit/search/search.hpp"
#include "oracles.hpp"

using namespace oakit;

namespace {

SearchSpec spec_of(std::size_t r, std::vector<Level> levels, std::size_t k, std::size_t w = 0) {
    SearchSpec s;
    s.runs = r;
    s.levels = std::move(levels);
    s.strength = k;
    s.min_distance = w;
    return s;
}

// Orbit key: smallest sorted row list over equal-level column permutations and all
// per-column symbol relabellings.
oracle::Rows orbit_key(const MixedArray &a) {
    const std::size_t n = a.cols();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<oracle::Rows> best;
    do {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j) ok = ok && a.level(perm[j]) == a.level(j);
        if (!ok) continue;
        std::vector<std::vector<std::uint32_t>> relabel(n);
        for (std::size_t j = 0; j < n; ++j) {
            relabel[j].resize(a.level(j));
            std::iota(relabel[j].begin(), relabel[j].end(), 0);
        }
        // odometer over the relabellings of each column
        while (true) {
            oracle::Rows rows;
            for (std::size_t i = 0; i < a.runs(); ++i) {
                std::vector<std::uint32_t> row(n);
                for (std::size_t j = 0; j < n; ++j) row[j] = relabel[j][a(i, perm[j])];
                rows.push_back(row);
            }
            std::sort(rows.begin(), rows.end());
            if (!best || rows < *best) best = rows;
            std::size_t j = 0;
            while (j < n && !std::next_permutation(relabel[j].begin(), relabel[j].end())) ++j;
            if (j == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

void expect_every_orbit_kept(const SearchSpec &spec) {
    SearchSpec full = spec;
    full.symmetry_breaking = false;
    auto all = search_all(full);
    auto reduced = search_all(spec);
    ASSERT_TRUE(all.complete);
    ASSERT_TRUE(reduced.complete);
    ASSERT_FALSE(all.arrays.empty());
    std::set<oracle::Rows> all_orbits, kept_orbits;
    for (const auto &a : all.arrays) {
        EXPECT_TRUE(oracle::naive_strength(a, spec.strength));
        all_orbits.insert(orbit_key(a));
    }
    for (const auto &a : reduced.arrays) kept_orbits.insert(orbit_key(a));
    EXPECT_EQ(all_orbits, kept_orbits);
    EXPECT_LT(reduced.arrays.size(), all.arrays.size());
}

}  // namespace

TEST(Search, FindsThreeByTwoFourSeed) {
    auto t0 = std::chrono::steady_clock::now();
    auto res = search_moa(spec_of(12, {3, 2, 2, 2, 2}, 2));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ASSERT_EQ(res.outcome, SearchOutcome::Found);
    EXPECT_TRUE(oracle::naive_strength(*res.array, 2));
    EXPECT_LT(secs, 5.0);
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ((*res.array)(0, j), 0u);
}

TEST(Search, FindsAmeSeed) {
    auto res = search_moa(spec_of(6, {6, 3, 2}, 1, 2));
    ASSERT_EQ(res.outcome, SearchOutcome::Found);
    EXPECT_TRUE(oracle::naive_strength(*res.array, 1));
    EXPECT_GE(oracle::naive_min_distance(*res.array), 2u);
}

TEST(Search, FullFactorialCannotBeatDistanceOne) {
    // 18 runs of strength 2 over 3, 3, 2: each (a, b) pair appears twice, differing only in c.
    EXPECT_EQ(search_moa(spec_of(18, {3, 3, 2}, 2, 2)).outcome, SearchOutcome::ProvedNonexistent);
}

TEST(Search, DivisibilityFailureIsInfeasible) {
    auto res = search_moa(spec_of(4, {2, 2, 2}, 3));
    EXPECT_EQ(res.outcome, SearchOutcome::Infeasible);
    EXPECT_FALSE(res.array);
    EXPECT_NE(res.detail.find("does not divide"), std::string::npos);
}

TEST(Search, ExhaustsSmallImpossibleSpace) {
    // Five binary columns of strength 2 need 8 | r; with r = 8 and MD 3 the space is empty
    // (three columns give only 8 patterns but the array would need MD >= 3 on 5 columns).
    auto res = search_moa(spec_of(8, {2, 2, 2, 2, 2}, 2, 4));
    EXPECT_EQ(res.outcome, SearchOutcome::ProvedNonexistent);
}

TEST(Search, BudgetIsReportedDistinctly) {
    auto spec = spec_of(36, {3, 3, 3, 3, 2, 2}, 2, 4);
    spec.node_budget = 1000;
    auto res = search_moa(spec);
    EXPECT_EQ(res.outcome, SearchOutcome::NotFoundWithinBudget);
    EXPECT_LE(res.nodes, 1000u);
}

TEST(Search, Deterministic) {
    auto a = search_moa(spec_of(8, {4, 2, 2, 2, 2}, 2));
    auto b = search_moa(spec_of(8, {4, 2, 2, 2, 2}, 2));
    ASSERT_EQ(a.outcome, SearchOutcome::Found);
    EXPECT_EQ(*a.array, *b.array);
    EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Search, FoundArraysMatchOracleAcrossSpecs) {
    const std::vector<SearchSpec> specs = {
        spec_of(8, {4, 2, 2}, 2), spec_of(12, {6, 2, 2}, 2), spec_of(9, {3, 3, 3, 3}, 2, 3),
        spec_of(16, {2, 2, 2, 2, 2}, 3), spec_of(18, {3, 3, 2}, 2), spec_of(6, {6, 3, 3}, 1, 2), spec_of(8, {2, 2, 2, 2}, 3),
    };
    for (const auto &s : specs) {
        auto res = search_moa(s);
        ASSERT_EQ(res.outcome, SearchOutcome::Found) << s.runs << " " << profile_string(s.levels) << " k=" << s.strength << " -> " << to_string(res.outcome);
        EXPECT_TRUE(oracle::naive_strength(*res.array, s.strength));
        if (s.min_distance) {
            EXPECT_GE(oracle::naive_min_distance(*res.array), s.min_distance);
        }
    }
}

TEST(SearchSymmetry, KeepsEveryOrbitBinaryStrengthTwo) { expect_every_orbit_kept(spec_of(4, {2, 2, 2}, 2)); }

TEST(SearchSymmetry, KeepsEveryOrbitMixedStrengthOne) { expect_every_orbit_kept(spec_of(6, {3, 2, 2}, 1)); }

TEST(SearchSymmetry, KeepsEveryOrbitEightRuns) { expect_every_orbit_kept(spec_of(8, {2, 2, 2}, 2)); }

TEST(SearchSymmetry, KeepsEveryOrbitWithDistanceFloor) { expect_every_orbit_kept(spec_of(4, {2, 2, 2, 2}, 1, 2)); }

TEST(SearchSymmetry, KeepsEveryOrbitMixedDistanceFloor) { expect_every_orbit_kept(spec_of(6, {3, 3, 2}, 1, 2)); }

TEST(SearchPartition, RecoversSchemeBlocks) {
    auto ds = DifferenceScheme(MixedArray::from_rows({3, 3, 3}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}), AdditiveGroup::cyclic(3), 2);
    auto p = search_partition(ds.expanded(), 3);
    ASSERT_TRUE(p);
    validate_partition(*p);
    EXPECT_EQ(p->block_count(), 3u);
}

TEST(SearchPartition, NineRunOaHasThreeBlocks) {
    auto oa = MixedArray::from_rows({3, 3, 3}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {1, 1, 2}, {1, 2, 0}, {2, 0, 2}, {2, 1, 0}, {2, 2, 1}});
    auto p = search_partition(oa, 3);
    ASSERT_TRUE(p);
    for (std::size_t b = 0; b < 3; ++b) EXPECT_TRUE(oracle::naive_strength(p->block(b), 1));
}

TEST(SearchPartition, DivisibilityErrors) {
    auto oa = MixedArray::from_rows({2, 2}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 0}, {1, 1}});
    EXPECT_THROW(search_partition(oa, 4), ParameterError);
    EXPECT_THROW(search_partition(oa, 6), ParameterError);  // block size 1 vs level 2
}

TEST(SearchPartition, ReportsMissingPartition) {
    // Strength 1, but each 2-row block would need two rows differing in every column.
    auto a = MixedArray::from_rows({2, 2, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    EXPECT_FALSE(search_partition(a, 2));
}

TEST(Nonexistence, CountingPrefilter) {
    auto res = exhaustive_nonexistence(spec_of(12, {3, 2, 2, 2, 2}, 2), 2);
    EXPECT_EQ(res.verdict, NonexistenceVerdict::ProvedNonexistent);
    EXPECT_NE(res.reason.find("counting"), std::string::npos);
}

TEST(Nonexistence, FindsExistingSeed) {
    auto res = exhaustive_nonexistence(spec_of(6, {6, 3, 2}, 1), 1);
    EXPECT_EQ(res.verdict, NonexistenceVerdict::FoundCounterexample);
    ASSERT_TRUE(res.counterexample);
    EXPECT_GE(oracle::naive_min_distance(*res.counterexample), 2u);
}

TEST(Nonexistence, SearchAgreesWithCountingOnSmallImpossibleCases) {
    // Bypass the prefilter by searching directly at the smallest admissible run count.
    for (std::vector<Level> levels : {std::vector<Level>{3, 2, 2, 2, 2}, std::vector<Level>{2, 2, 3, 3, 3}}) {
        auto verdict = feasibility_5col(levels);
        ASSERT_EQ(verdict.verdict, Feasibility::Impossible);
        auto res = search_moa(spec_of(verdict.run_multiple, levels, 2, 3));
        EXPECT_EQ(res.outcome, SearchOutcome::ProvedNonexistent);
    }
}

TEST(Nonexistence, BudgetGivesInconclusive) {
    auto spec = spec_of(18, {2, 3, 3, 3, 3}, 2);
    spec.node_budget = 100;
    auto res = exhaustive_nonexistence(spec, 2);
    EXPECT_EQ(res.verdict, NonexistenceVerdict::Inconclusive);
}
