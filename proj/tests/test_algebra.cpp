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

#include <random>

#include "oakit/algebra/difference_scheme.hpp"
#include "oakit/algebra/finite_field.hpp"
#include "oakit/algebra/group.hpp"
#include "oakit/algebra/hadamard.hpp"
#include "oakit/algebra/stacking.hpp"
#include "oakit/core/distance.hpp"
#include "oracles.hpp"

using namespace oakit;

namespace {

// Polynomials are coefficient vectors, c_0 first.
using Poly = std::vector<std::uint32_t>;

Poly poly_mul(const Poly &a, const Poly &b, std::uint32_t p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

std::vector<Poly> monic_polys(std::uint32_t p, std::uint32_t deg) {
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
        Poly f(deg + 1, 0);
        std::uint64_t rest = low;
        for (std::uint32_t i = 0; i < deg; ++i, rest /= p) f[i] = rest % p;
        f[deg] = 1;
        out.push_back(f);
    }
    return out;
}

// Reducible iff it equals a product of two monic polynomials of positive degree.
bool reducible_by_products(const Poly &f, std::uint32_t p) {
    const std::uint32_t m = f.size() - 1;
    for (std::uint32_t d = 1; d < m; ++d)
        for (const auto &g : monic_polys(p, d))
            for (const auto &h : monic_polys(p, m - d))
                if (poly_mul(g, h, p) == f) return true;
    return false;
}

MixedArray printed_d333() { return MixedArray({3, 3, 3}, {0, 0, 0, 0, 1, 2, 0, 2, 1}); }

}  // namespace

TEST(FiniteField, PrimeFieldArithmetic) {
    FiniteField f(5);
    EXPECT_EQ(f.mul(2, 3), 1u);
    EXPECT_EQ(f.inv(2), 3u);
    EXPECT_EQ(f.add(4, 3), 2u);
    EXPECT_EQ(f.sub(1, 3), 3u);
    EXPECT_THROW(f.inv(0), ParameterError);
}

TEST(FiniteField, ExtensionFields) {
    FiniteField f4(4);
    EXPECT_EQ(f4.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(f4.mul(2, 2), 3u);
    FiniteField f9(9);
    EXPECT_EQ(f9.modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
    for (std::uint32_t a = 1; a < 9; ++a) EXPECT_EQ(f9.pow(a, 8), 1u);
}

TEST(FiniteField, RejectsNonPrimePowers) {
    EXPECT_THROW(FiniteField(1), ParameterError);
    EXPECT_THROW(FiniteField(6), ParameterError);
    EXPECT_THROW(FiniteField(100), ParameterError);
    EXPECT_THROW(FiniteField(1u << 17), ParameterError);
    EXPECT_NO_THROW(FiniteField(1u << 16));
}

TEST(FiniteField, AxiomsHoldExhaustively) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u, 49u, 64u, 81u}) {
        FiniteField f(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            EXPECT_EQ(f.add(a, 0), a);
            EXPECT_EQ(f.mul(a, 1), a);
            EXPECT_EQ(f.add(a, f.neg(a)), 0u);
            if (a != 0) {
                EXPECT_EQ(f.mul(a, f.inv(a)), 1u) << "q=" << q << " a=" << a;
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                ASSERT_EQ(f.add(a, b), f.add(b, a));
                ASSERT_EQ(f.mul(a, b), f.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) << "q=" << q;
                    ASSERT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c)) << "q=" << q;
                    ASSERT_EQ(f.add(a, f.add(b, c)), f.add(f.add(a, b), c)) << "q=" << q;
                }
            }
        }
    }
}

TEST(FiniteField, ModulusIsSmallestIrreducible) {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 49u, 64u, 81u}) {
        FiniteField f(q);
        const auto p = f.characteristic();
        const auto m = f.degree();
        ASSERT_FALSE(reducible_by_products(f.modulus(), p)) << "q=" << q;
        for (const auto &g : monic_polys(p, m)) {
            if (g == f.modulus()) break;
            EXPECT_TRUE(reducible_by_products(g, p)) << "q=" << q << " has a smaller irreducible";
        }
    }
}

TEST(AdditiveGroup, AxiomsHoldExhaustively) {
    std::vector<AdditiveGroup> groups;
    for (Level d = 2; d <= 64; ++d) groups.push_back(AdditiveGroup::cyclic(d));
    groups.push_back(AdditiveGroup::elementary(2, 3));
    groups.push_back(AdditiveGroup::elementary(3, 2));
    groups.push_back(AdditiveGroup::elementary(5, 2));
    for (const auto &g : groups) {
        const Level d = g.order();
        for (Symbol a = 0; a < d; ++a) {
            ASSERT_EQ(g.add(a, 0), a);
            ASSERT_EQ(g.add(a, g.neg(a)), 0u);
            for (Symbol b = 0; b < d; ++b) {
                ASSERT_LT(g.add(a, b), d);
                ASSERT_EQ(g.add(a, b), g.add(b, a));
                for (Symbol c = 0; c < d; ++c) ASSERT_EQ(g.add(a, g.add(b, c)), g.add(g.add(a, b), c));
            }
        }
    }
    EXPECT_THROW(AdditiveGroup::elementary(4, 2), ParameterError);
}

TEST(Hadamard, SylvesterBaseCase) {
    auto h = hadamard01(2, HadamardMethod::Sylvester);
    EXPECT_EQ(h.matrix, MixedArray({2, 2}, {0, 0, 0, 1}));
}

TEST(Hadamard, RowsAtHalfDistanceForRequiredOrders) {
    for (std::size_t n : {2u, 4u, 8u, 12u, 16u, 20u, 24u, 28u, 36u, 44u, 72u, 100u, 108u, 196u, 200u}) {
        auto h = hadamard01(n);
        ASSERT_EQ(h.matrix.runs(), n);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(h.matrix(0, j), 0u);
            EXPECT_EQ(h.matrix(j, 0), 0u);
        }
        auto sp = distance_spectrum(h.matrix);
        EXPECT_EQ(sp.distances, (std::vector<std::size_t>{n / 2})) << h.recipe;
    }
}

TEST(Hadamard, ExplicitMethods) {
    EXPECT_EQ(hadamard01(12, HadamardMethod::Paley1).recipe, "paley1(11)");
    EXPECT_EQ(hadamard01(36, HadamardMethod::Paley2).recipe, "paley2(17)");
    EXPECT_EQ(hadamard01(100, HadamardMethod::Paley2).recipe, "paley2(49)");
    EXPECT_EQ(oracle::naive_min_distance(hadamard01(36, HadamardMethod::Paley2).matrix), 18u);
    auto k = hadamard01(24, HadamardMethod::Kronecker, {12, 2});
    EXPECT_EQ(k.recipe, "kronecker(paley1(11),sylvester(2))");
    EXPECT_EQ(distance_spectrum(k.matrix).distances, (std::vector<std::size_t>{12}));
}

TEST(Hadamard, UngeneratableOrdersListMethods) {
    EXPECT_THROW(hadamard01(6), ParameterError);
    EXPECT_THROW(hadamard01(12, HadamardMethod::Sylvester), ParameterError);
    EXPECT_THROW(hadamard01(24, HadamardMethod::Kronecker, {5, 5}), ParameterError);
    try {
        hadamard01(44, HadamardMethod::Paley2);
        FAIL();
    } catch (const ParameterError &e) {
        EXPECT_NE(std::string(e.what()).find("paley1"), std::string::npos);
    }
}

TEST(DifferenceScheme, HadamardSchemesHaveStrengthThree) {
    const auto z2 = AdditiveGroup::cyclic(2);
    for (std::size_t n : {4u, 8u, 12u, 20u, 36u}) {
        auto h = hadamard01(n);
        EXPECT_TRUE(is_difference_scheme(h.matrix, z2, 2).holds);
        EXPECT_TRUE(is_difference_scheme(h.matrix, z2, 3).holds);
        EXPECT_TRUE(oracle::naive_strength(expand(h.matrix, z2), 3));
    }
    EXPECT_EQ(hadamard_scheme(hadamard01(12)).strength(), 3u);
}

TEST(DifferenceScheme, ConstantColumnsFail) {
    MixedArray zero({2, 2}, std::vector<Symbol>(8, 0));
    auto rep = is_difference_scheme(zero, AdditiveGroup::cyclic(2), 2);
    EXPECT_FALSE(rep.holds);
    EXPECT_TRUE(rep.witness.has_value());
    EXPECT_THROW(DifferenceScheme(zero, AdditiveGroup::cyclic(2), 2), VerificationError);
}

TEST(DifferenceScheme, LinearSchemeOverPrimeReproducesPrintedMatrix) {
    auto d = ds_linear(3, 1);
    EXPECT_EQ(d.matrix(), printed_d333());
    EXPECT_EQ(d.kind(), "ds 3 2");
}

TEST(DifferenceScheme, LinearSchemeOverF2SquaredMatchesHadamardFour) {
    auto d = ds_linear(2, 2);
    EXPECT_EQ(distance_spectrum(d.matrix()).counts, distance_spectrum(hadamard01(4).matrix).counts);
    EXPECT_TRUE(same_row_multiset(d.matrix(), hadamard01(4).matrix));
}

TEST(DifferenceScheme, LinearSchemeOverGF4) {
    auto d = ds_linear(4, 1);
    EXPECT_EQ(d.rows(), 4u);
    EXPECT_EQ(d.kind(), "ds 4 2 ea");
    EXPECT_TRUE(oracle::naive_strength(d.expanded(), 2));
    EXPECT_THROW(ds_linear(6, 1), ParameterError);
}

TEST(DifferenceScheme, PolyThreeSchemes) {
    for (std::uint32_t d : {3u, 5u, 7u, 9u}) {
        auto s = ds_poly3(d);
        EXPECT_EQ(s.rows(), d * d);
        EXPECT_EQ(s.cols(), d);
        EXPECT_EQ(s.strength(), 3u);
        if (d <= 5) {
            EXPECT_TRUE(oracle::naive_strength(s.expanded(), 3));
        }
    }
    EXPECT_THROW(ds_poly3(4), ParameterError);
    EXPECT_THROW(ds_poly3(15), ParameterError);
}

TEST(DifferenceScheme, KroneckerSumOfHadamardSchemes) {
    auto h12 = hadamard_scheme(hadamard01(12));
    auto h2 = hadamard_scheme(hadamard01(2));
    auto b1 = scheme_kronecker_sum(h12, h2);
    EXPECT_EQ(b1.rows(), 24u);
    EXPECT_EQ(b1.strength(), 2u);
    auto b1t3 = scheme_kronecker_sum(h12, h2, 3);
    EXPECT_EQ(b1t3.strength(), 3u);
    EXPECT_EQ(distance_spectrum(b1.matrix()).distances, (std::vector<std::size_t>{12}));
}

TEST(KroneckerSum, ExpansionOfPrintedScheme) {
    auto oa = expand(printed_d333(), AdditiveGroup::cyclic(3));
    EXPECT_EQ(oa.runs(), 9u);
    EXPECT_EQ(oa.cols(), 3u);
    EXPECT_TRUE(oracle::naive_strength(oa, 2));
    EXPECT_EQ(distance_spectrum(oa).distances, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(oa.row(4)[1], 2u);  // row 1 * 3 + 1: (0,1,2) + 1
}

TEST(KroneckerSum, GeneralBlockLayout) {
    const auto z3 = AdditiveGroup::cyclic(3);
    MixedArray a({3, 3}, {0, 1});
    MixedArray b({3}, {0, 2});
    auto c = kronecker_sum(a, b, z3);
    EXPECT_EQ(c, MixedArray({3, 3}, {0, 1, 2, 0}));
    EXPECT_THROW(kronecker_sum(a, index_column(2), z3), ParameterError);
}

TEST(KroneckerSum, ZeroExtendRepeatsRows) {
    MixedArray a({3, 2}, {0, 1, 2, 0});
    auto z = zero_extend(a, 2);
    EXPECT_EQ(z, MixedArray({3, 2}, {0, 1, 0, 1, 2, 0, 2, 0}));
}

TEST(Stacking, RepeatTileAndPartitionStack) {
    MixedArray row({2, 2}, {0, 1});
    EXPECT_EQ(repeat_rows_each(row, 3), MixedArray({2, 2}, {0, 1, 0, 1, 0, 1}));
    auto a = expand(printed_d333(), AdditiveGroup::cyclic(3));
    EXPECT_EQ(tile_rows(a, 1), a);
    MixedArray p({2}, {0, 1});
    MixedArray q({2}, {1, 1});
    std::vector<MixedArray> blocks{p, q};
    EXPECT_EQ(partition_stack(blocks, 2, StackMode::RepeatEach), MixedArray({2}, {0, 0, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(partition_stack(blocks, 2, StackMode::Tile), MixedArray({2}, {0, 1, 0, 1, 1, 1, 1, 1}));
    std::vector<MixedArray> mismatched{p, index_column(3)};
    EXPECT_THROW(partition_stack(mismatched, 1, StackMode::Tile), ParameterError);
}

TEST(Stacking, SchemeRowBlocksReassembleExpansion) {
    const auto z3 = AdditiveGroup::cyclic(3);
    auto d = printed_d333();
    std::vector<MixedArray> blocks;
    for (std::size_t i = 0; i < d.runs(); ++i) {
        std::vector<std::size_t> one{i};
        blocks.push_back(expand(select_rows(d, one), z3));
    }
    EXPECT_TRUE(same_row_multiset(stack_rows(blocks), expand(d, z3)));
}

TEST(Product, IdentityLikeFactor) {
    auto a = expand(printed_d333(), AdditiveGroup::cyclic(3));
    MixedArray zero({2, 2, 2}, {0, 0, 0});
    auto p = product_construction(a, zero);
    EXPECT_EQ(p.runs(), a.runs());
    for (std::size_t i = 0; i < p.runs(); ++i)
        for (std::size_t c = 0; c < p.cols(); ++c) EXPECT_EQ(p(i, c), 2 * a(i, c));
    for (std::size_t c = 0; c < p.cols(); ++c) EXPECT_EQ(p.level(c), 6u);
    EXPECT_EQ(distance_spectrum(p).counts, distance_spectrum(a).counts);
}

TEST(Product, StrengthAndDistanceBound) {
    const auto z2 = AdditiveGroup::cyclic(2);
    auto a = expand(printed_d333(), AdditiveGroup::cyclic(3));  // OA(9,3,3,2)
    auto b = expand(hadamard01(4).matrix, z2);                  // OA(8,4,2,3)
    auto p = product_construction(a, b);
    EXPECT_EQ(p.runs(), 72u);
    EXPECT_EQ(p.cols(), 3u);
    EXPECT_TRUE(oracle::naive_strength(p, 2));
    EXPECT_GE(oracle::naive_min_distance(p),
              std::min(oracle::naive_min_distance(a), oracle::naive_min_distance(select_columns(b, std::vector<std::size_t>{0, 1, 2}))));
}

TEST(Product, DirectProductPairsAllRows) {
    auto a = expand(printed_d333(), AdditiveGroup::cyclic(3));
    auto h4 = hadamard01(4).matrix;
    std::vector<std::size_t> cols{1, 2, 3};
    auto b = select_columns(h4, cols);  // OA(4,3,2,2)
    auto p = direct_product(a, b);
    EXPECT_EQ(p.runs(), 36u);
    EXPECT_EQ(profile_string(p.levels()), "3^3 2^3");
    EXPECT_TRUE(oracle::naive_strength(p, 2));
}
