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

#include <map>
#include <random>

#include "oakit/catalog/fixtures.hpp"
#include "oakit/core/distance.hpp"
#include "oakit/core/strength.hpp"
#include "oakit/quantum/density.hpp"
#include "oakit/quantum/state.hpp"
#include "oakit/search/search.hpp"
#include "oracles.hpp"

using namespace oakit;

namespace {

MixedArray fixture(std::string_view name) {
    for (const auto &f : fixtures::ket_fixtures())
        if (f.name == name) return fixtures::to_array(f);
    throw std::runtime_error("no fixture " + std::string(name));
}

// Ten small arrays whose full state space stays below a few thousand basis states.
std::vector<MixedArray> small_arrays(std::mt19937_64 &rng) {
    std::vector<MixedArray> out;
    const std::vector<std::vector<Level>> shapes = {{2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}, {3, 3, 2}, {2, 2, 2, 2, 2}, {4, 2, 2}};
    for (const auto &levels : shapes)
        for (std::size_t runs : {4u, 6u, 8u, 12u}) out.push_back(oracle::random_array(rng, runs, levels));
    return out;
}

}  // namespace

TEST(State, KetsFollowRowOrder) {
    auto a = MixedArray::from_rows({3, 2}, {{0, 1}, {2, 0}});
    SparseState s = emit_state(a);
    EXPECT_EQ(s.terms(), 2u);
    EXPECT_EQ(render_kets(s), "|0 1⟩ + |2 0⟩");
    EXPECT_FALSE(s.has_duplicates());
    EXPECT_EQ(state_array(s), a);
}

TEST(State, DuplicatesAreFlagged) {
    auto a = MixedArray::from_rows({2, 2}, {{0, 1}, {0, 1}});
    EXPECT_TRUE(emit_state(a).has_duplicates());
    EXPECT_TRUE(to_json(emit_state(a))["duplicate_kets"].get<bool>());
}

TEST(State, JsonCarriesKetsAsIntegers) {
    auto j = to_json(emit_state(fixture("phi_3^1x2^9")));
    EXPECT_EQ(j["terms"], 24);
    EXPECT_EQ(j["kets"].size(), 24u);
    EXPECT_EQ(j["kets"][0].size(), 10u);
    EXPECT_EQ(j["amplitude"], "1/sqrt(24)");
}

TEST(ReducedDensity, RejectsEmptyAndFullSubsets) {
    auto a = MixedArray::from_rows({2, 2}, {{0, 1}, {1, 0}});
    EXPECT_THROW(reduced_density(a, {}), ParameterError);
    EXPECT_THROW(reduced_density(a, {0, 1}), ParameterError);
    EXPECT_THROW(reduced_density(a, {1, 0}), ParameterError);
}

TEST(ReducedDensity, TraceIsOneForDistinctRows) {
    for (const auto &f : fixtures::ket_fixtures()) {
        auto a = fixtures::to_array(f);
        auto rho = reduced_density(a, {0, a.cols() - 1});
        EXPECT_EQ(rho.trace(), (Fraction{1, 1})) << f.name;
        EXPECT_TRUE(rho.is_symmetric()) << f.name;
    }
}

TEST(ReducedDensity, BellPairIsMaximallyMixed) {
    auto a = MixedArray::from_rows({2, 2}, {{0, 0}, {1, 1}});
    auto rho = reduced_density(a, {0});
    EXPECT_EQ(rho.entry(0, 0), (Fraction{1, 2}));
    EXPECT_EQ(rho.entry(0, 1), (Fraction{0, 1}));
    EXPECT_TRUE(rho.is_maximally_mixed());
}

TEST(ReducedDensity, ProductStateIsPure) {
    // |0>(|0> + |1>): party 1 alone is the pure |+><+|, all four entries 1/2.
    auto a = MixedArray::from_rows({2, 2}, {{0, 0}, {0, 1}});
    auto rho = reduced_density(a, {1});
    for (std::uint64_t x = 0; x < 2; ++x)
        for (std::uint64_t y = 0; y < 2; ++y) EXPECT_EQ(rho.entry(x, y), (Fraction{1, 2}));
    EXPECT_FALSE(rho.is_maximally_mixed());
}

TEST(ReducedDensity, MatchesDenseOracleEntrywise) {
    std::mt19937_64 rng(11);
    for (const auto &a : small_arrays(rng)) {
        for (std::size_t k = 1; k < a.cols(); ++k)
            for (const auto &sub : oracle::all_subsets(a.cols(), k)) {
                const auto rho = reduced_density(a, sub);
                const auto dense = oracle::dense_reduced_numerators(a, sub);
                ASSERT_EQ(rho.dimension * rho.dimension, dense.size());
                for (std::uint64_t x = 0; x < rho.dimension; ++x)
                    for (std::uint64_t y = 0; y < rho.dimension; ++y)
                        ASSERT_EQ(rho.entry(x, y), Fraction::of(dense[x * rho.dimension + y], a.runs()));
                // trace is <psi|psi> = sum of squared row multiplicities over r; 1 for distinct rows
                std::map<std::vector<Symbol>, std::uint64_t> mult;
                for (const auto &row : oracle::rows_of(a)) ++mult[row];
                std::uint64_t norm = 0;
                for (const auto &[row, m] : mult) norm += m * m;
                EXPECT_EQ(rho.trace(), Fraction::of(norm, a.runs()));
                EXPECT_TRUE(rho.is_symmetric());
            }
    }
}

TEST(Uniformity, FixturesAreUniformAtTheirStrength) {
    for (const auto &f : fixtures::ket_fixtures()) {
        auto a = fixtures::to_array(f);
        auto u = verify_k_uniform(a, f.k);
        EXPECT_TRUE(u.holds) << f.name;
        EXPECT_EQ(u.subsets_checked, binomial(a.cols(), f.k)) << f.name;
        EXPECT_EQ(u.subsets_passed, u.subsets_checked) << f.name;
    }
}

TEST(Uniformity, CorruptedFixtureFails) {
    auto a = fixture("phi_3^1x2^9");
    std::vector<Symbol> cells(a.cells().begin(), a.cells().end());
    cells[5 * a.cols() + 4] ^= 1;
    MixedArray bad(std::vector<Level>(a.levels().begin(), a.levels().end()), cells);
    auto u = verify_k_uniform(bad, 2);
    EXPECT_FALSE(u.holds);
    ASSERT_TRUE(u.first_failure);
    EXPECT_EQ(u.first_failure->subset, oracle::dense_first_nonuniform(bad, 2).value());
    EXPECT_LT(u.subsets_passed, u.subsets_checked);
}

TEST(Uniformity, FirstFailureMatchesDenseOracle) {
    std::mt19937_64 rng(12);
    for (const auto &a : small_arrays(rng))
        for (std::size_t k = 1; k < a.cols(); ++k) {
            auto u = verify_k_uniform(a, k);
            auto expected = oracle::dense_first_nonuniform(a, k);
            ASSERT_EQ(u.holds, !expected);
            if (expected) {
                EXPECT_EQ(u.first_failure->subset, *expected);
            }
        }
}

TEST(Uniformity, StopAtFirstReportsSameWitness) {
    auto bad = MixedArray::from_rows({2, 2, 2}, {{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}});
    auto full = verify_k_uniform(bad, 1);
    auto early = verify_k_uniform(bad, 1, true);
    EXPECT_EQ(full.first_failure->subset, early.first_failure->subset);
    EXPECT_LE(early.subsets_checked, full.subsets_checked);
}

TEST(Uniformity, DuplicateRowsBreakUniformity) {
    // Doubling every row keeps strength but MD drops to 0.
    auto a = MixedArray::from_rows({2, 2, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    const std::vector<MixedArray> twice = {a, a};
    auto doubled = stack_rows(twice);
    EXPECT_TRUE(verify_k_uniform(a, 1).holds);
    EXPECT_TRUE(verify_strength(doubled, 2).holds);
    EXPECT_FALSE(verify_k_uniform(doubled, 1).holds);
    EXPECT_EQ(verify_k_uniform(doubled, 1).first_failure->kind, "diagonal");
}

TEST(Uniformity, KOutOfRangeIsAnError) {
    auto a = fixture("phi_3^1x2^9");
    EXPECT_THROW(verify_k_uniform(a, 0), ParameterError);
    EXPECT_THROW(verify_k_uniform(a, 10), ParameterError);
}

TEST(Uniformity, MonotoneInK) {
    for (const auto &f : fixtures::ket_fixtures()) {
        auto a = fixtures::to_array(f);
        for (std::size_t k = f.k; k-- > 1;) EXPECT_TRUE(verify_k_uniform(a, k).holds) << f.name << " k=" << k;
    }
}

TEST(Ame, SearchedSixThreeTwoSeed) {
    SearchSpec spec;
    spec.runs = 6;
    spec.levels = {6, 3, 2};
    spec.strength = 1;
    spec.min_distance = 2;
    auto res = search_moa(spec);
    ASSERT_TRUE(res.array);
    EXPECT_TRUE(is_ame(*res.array));
    EXPECT_TRUE(oracle::dense_k_uniform(*res.array, 1));
}

TEST(Ame, FourQutritsFromLinearCode) {
    // OA(9,4,3,2) rows (a, b, a+b, a+2b): the AME(4,3) state.
    std::vector<std::vector<Symbol>> rows;
    for (Symbol a = 0; a < 3; ++a)
        for (Symbol b = 0; b < 3; ++b) rows.push_back({a, b, (a + b) % 3, (a + 2 * b) % 3});
    auto arr = MixedArray::from_rows({3, 3, 3, 3}, rows);
    EXPECT_TRUE(is_ame(arr));
    EXPECT_TRUE(oracle::dense_k_uniform(arr, 2));
}

TEST(Ame, GhzIsNotAme) {
    auto ghz = MixedArray::from_rows({2, 2, 2, 2}, {{0, 0, 0, 0}, {1, 1, 1, 1}});
    EXPECT_FALSE(is_ame(ghz));
    EXPECT_TRUE(verify_k_uniform(ghz, 1).holds);
}

TEST(Uniformity, ReportJson) {
    auto j = to_json(verify_k_uniform(fixture("phi_4^5x2^2"), 3));
    EXPECT_EQ(j["subsets_checked"], 35);
    EXPECT_EQ(j["subsets_passed"], 35);
    EXPECT_TRUE(j["first_failure"].is_null());
}
