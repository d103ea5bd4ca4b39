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

// Randomized property checks. Generators are seeded so failures reproduce.

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oakit/io/text_format.hpp"
#include "oakit/quantum/density.hpp"
#include "oracles.hpp"

using namespace oakit;
using namespace oakit::gen;

TEST(Property, UniformityEqualsStrengthAndDistance) {
    const auto arrays = corpus(2024);
    ASSERT_GE(arrays.size(), 200u);
    std::size_t disagreements = 0, positives = 0, negatives = 0;
    for (const auto &a : arrays) {
        ASSERT_LE(a.runs(), 72u);
        ASSERT_LE(a.cols(), 12u);
        for (std::size_t k = 1; k <= 3 && k < a.cols(); ++k) {
            const bool uniform = verify_k_uniform(a, k).holds;
            const bool combinatorial = oracle::naive_strength(a, k) && oracle::naive_min_distance(a) >= k + 1;
            disagreements += uniform != combinatorial;
            (uniform ? positives : negatives) += 1;
        }
    }
    EXPECT_EQ(disagreements, 0u);
    EXPECT_GT(positives, 50u);
    EXPECT_GT(negatives, 50u);
}

TEST(Property, UniformityMatchesDenseStateWhenSmall) {
    const auto arrays = corpus(7);
    std::size_t checked = 0;
    for (const auto &a : arrays) {
        std::uint64_t dim = 1;
        for (auto d : a.levels()) dim = saturating_mul(dim, d);
        if (dim > 4096) continue;
        for (std::size_t k = 1; k <= 3 && k < a.cols(); ++k) {
            ASSERT_EQ(verify_k_uniform(a, k).holds, oracle::dense_k_uniform(a, k));
            ++checked;
        }
    }
    EXPECT_GT(checked, 20u);
}

TEST(Property, IrredundancyCriteriaAgree) {
    const auto arrays = corpus(99);
    std::size_t disagreements = 0;
    for (const auto &a : arrays)
        for (std::size_t k = 1; k < a.cols() && k <= 4; ++k) {
            const bool md = is_irredundant(a, k, IrredundancyCheck::MinDistance).holds;
            const bool direct = is_irredundant(a, k, IrredundancyCheck::DirectEnumeration).holds;
            disagreements += (md != direct) + (md != oracle::naive_irredundant(a, k));
        }
    EXPECT_EQ(disagreements, 0u);
}

TEST(Property, VerdictsInvariantUnderRelabelling) {
    std::mt19937_64 rng(5);
    for (const auto &a : corpus(5)) {
        // full-width scramble: same array up to row order, column order and symbol names
        MixedArray b = scramble(rng, a, a.cols());
        for (std::size_t k = 1; k <= 3 && k < a.cols(); ++k) {
            EXPECT_EQ(verify_k_uniform(a, k).holds, verify_k_uniform(b, k).holds);
            EXPECT_EQ(verify_strength(a, k).holds, verify_strength(b, k).holds);
        }
        EXPECT_EQ(min_distance(a), min_distance(b));
    }
}

TEST(Property, StrengthAndUniformityAreMonotone) {
    for (const auto &a : corpus(31)) {
        for (std::size_t k = 2; k <= 3 && k < a.cols(); ++k) {
            if (verify_strength(a, k).holds) {
                EXPECT_TRUE(verify_strength(a, k - 1).holds);
            }
            if (verify_k_uniform(a, k).holds) {
                EXPECT_TRUE(verify_k_uniform(a, k - 1).holds);
            }
        }
    }
}

TEST(Property, TextRoundTrip) {
    for (const auto &a : corpus(3)) {
        ArrayHeader h;
        h.strength = 1;
        auto parsed = parse_moa(serialize(a, h));
        EXPECT_EQ(parsed.array, a);
        EXPECT_EQ(parsed.header, h);
    }
}

TEST(Property, JuxtapositionDistanceOnRandomSeeds) {
    std::mt19937_64 rng(77);
    struct Case {
        MixedArray seed;
        DifferenceScheme scheme;
    };
    std::vector<Case> cases;
    for (int i = 0; i < 12; ++i) {
        cases.push_back({scramble(rng, bush_oa(3, 2), 2), ds_linear(3, 2)});
        cases.push_back({scramble(rng, detail::searched_seed(12, {3, 2, 2, 2, 2}, 2), 2), hadamard_scheme(hadamard01(12))});
        cases.push_back({scramble(rng, bush_oa(4, 2), 2), hadamard_scheme(hadamard01(16))});
    }
    for (const auto &c : cases) {
        auto out = lemma1_juxtapose(c.seed, c.scheme);
        const std::size_t r = c.scheme.rows(), d = c.scheme.order();
        EXPECT_EQ(oracle::naive_min_distance(out.array), std::min(r, oracle::naive_min_distance(c.seed) + r - r / d));
        EXPECT_TRUE(verify_strength(out.array, 2).holds);
    }
}

TEST(Property, ReplacementPreservesStrength) {
    std::mt19937_64 rng(8);
    const std::vector<std::pair<MixedArray, std::vector<std::vector<Level>>>> hosts = {
        {bush_oa(4, 2), {{2, 2}}},
        {trivial_moa({6, 6}), {{2, 3}, {3, 2}}},
        {thm7_base(2, {3, 4}).array, {{4, 3}, {2, 6}, {2, 2, 3}}},
    };
    for (const auto &[host, groupings] : hosts)
        for (int t = 0; t < 6; ++t) {
            const auto &g = groupings[rng() % groupings.size()];
            const std::size_t col = rng() % host.cols();
            auto c = expansive_replace(host, {2, {{col, trivial_moa(g), std::nullopt, true}}});
            EXPECT_TRUE(oracle::naive_strength(c.array, 2));
            EXPECT_EQ(c.array.cols(), host.cols() - 1 + g.size());
            if (c.certificate.claims_irredundant) {
                EXPECT_GE(oracle::naive_min_distance(c.array), 3u);
            }
        }
}
