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

#include <set>

#include "oakit/catalog/registry.hpp"
#include "oakit/io/text_format.hpp"
#include "oracles.hpp"

using namespace oakit;

TEST(Catalog, IdsAreUnique) {
    std::set<std::string> ids;
    for (const auto &e : catalog_entries()) EXPECT_TRUE(ids.insert(e.id).second) << e.id;
}

TEST(Catalog, EveryBuildableEntryReproducesItsCertificate) {
    for (const auto &e : catalog_entries()) {
        if (!e.buildable()) continue;
        Construction c = catalog_build(e.id);
        EXPECT_EQ(c.array.runs(), e.runs) << e.id;
        EXPECT_EQ(std::vector<Level>(c.array.levels().begin(), c.array.levels().end()), e.levels) << e.id;
        EXPECT_EQ(c.certificate.status, CertificateStatus::Verified) << e.id;
        EXPECT_TRUE(verify_strength(c.array, e.strength).holds) << e.id;
        EXPECT_GE(min_distance(c.array), e.min_distance_floor) << e.id;
    }
}

TEST(Catalog, BuildsAreDeterministic) {
    for (const auto &e : catalog_entries()) {
        if (!e.buildable()) continue;
        auto a = catalog_build(e.id);
        auto b = catalog_build(e.id);
        EXPECT_EQ(serialize(a.array), serialize(b.array)) << e.id;
        EXPECT_EQ(dump(to_json(a.certificate)), dump(to_json(b.certificate))) << e.id;
    }
}

TEST(Catalog, NamedExamples) {
    auto t3 = catalog_build("table3/3^1x2^8");
    EXPECT_EQ(t3.array.runs(), 24u);
    EXPECT_EQ(t3.array.cols(), 9u);
    auto th3 = catalog_build("thm3/3^5x2^36");
    EXPECT_EQ(th3.array.runs(), 216u);
    EXPECT_EQ(th3.array.cols(), 41u);
}

TEST(Catalog, ImportRequiredEntriesNameTheirSeed) {
    const auto &e = catalog_entry("table5/12^1x6^6");
    EXPECT_FALSE(e.buildable());
    try {
        catalog_build(e.id);
        FAIL() << "expected MissingSeedError";
    } catch (const MissingSeedError &err) {
        EXPECT_NE(std::string(err.what()).find("D(12,6,6)"), std::string::npos);
    }
}

TEST(Catalog, UnknownIdIsParameterError) { EXPECT_THROW(catalog_build("thm9/none"), ParameterError); }

TEST(Catalog, SelfTestPasses) {
    auto items = self_test();
    EXPECT_GE(items.size(), 10u);
    for (const auto &it : items) EXPECT_TRUE(it.ok) << it.id << ": " << it.detail;
}

TEST(Fixtures, KetCountsAndShapes) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
        {"phi_3^1x2^9", {24, 10}},  {"phi_3^1x2^10", {24, 11}}, {"phi_4^5x2^2", {64, 7}},
        {"phi_4^4x2^4", {64, 8}},   {"phi_3^4x2^16", {216, 20}},
    };
    for (const auto &f : fixtures::ket_fixtures()) {
        auto a = fixtures::to_array(f);
        for (auto ket : f.kets) EXPECT_EQ(ket.size(), f.levels.size()) << f.name;
        auto it = expected.find(std::string(f.name));
        if (it == expected.end()) continue;
        EXPECT_EQ(a.runs(), it->second.first) << f.name;
        EXPECT_EQ(a.cols(), it->second.second) << f.name;
    }
}

TEST(Fixtures, StrengthAndDistanceByOracle) {
    for (const auto &f : fixtures::ket_fixtures()) {
        auto a = fixtures::to_array(f);
        EXPECT_TRUE(oracle::naive_strength(a, f.k)) << f.name;
        EXPECT_GE(oracle::naive_min_distance(a), f.k + 1) << f.name;
    }
}

TEST(Seeds, EmbeddedSchemesHaveDeclaredStrength) {
    auto d18 = seeds::d3_18_5_3();
    EXPECT_EQ(d18.rows(), 18u);
    EXPECT_EQ(d18.cols(), 5u);
    EXPECT_EQ(d18.order(), 3u);
    EXPECT_TRUE(oracle::naive_strength(d18.expanded(), 3));
    auto d3 = seeds::d_3_3_3();
    EXPECT_TRUE(oracle::naive_strength(d3.expanded(), 2));
}
