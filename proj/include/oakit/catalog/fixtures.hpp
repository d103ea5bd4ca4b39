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

#pragma once

#include <string_view>
#include <vector>

#include "oakit/core/mixed_array.hpp"

namespace oakit::fixtures {

/// A uniform superposition given by its kets, one digit string per ket.
struct KetFixture {
    std::string_view name;
    std::vector<Level> levels;
    /// Uniformity the state is known to have.
    std::size_t k;
    std::vector<std::string_view> kets;
};

inline MixedArray to_array(const KetFixture &f) {
    std::vector<Symbol> cells;
    for (auto ket : f.kets)
        for (char c : ket) cells.push_back(static_cast<Symbol>(c - '0'));
    return MixedArray(f.levels, std::move(cells));
}

// clang-format off
inline const std::vector<KetFixture> &ket_fixtures() {
    static const std::vector<KetFixture> all = {
        {"phi_3^1x2^10", {3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, 2, {
            "00111111111", "01000000000", "10010111000", "11101000111", "20001011100", "21110100011",
            "20100101110", "21011010001", "00010010111", "01101101000", "10001001011", "11110110100",
            "10000100101", "11111011010", "20100010010", "21011101101", "00110001001", "01001110110",
            "10111000100", "11000111011", "20011100010", "21100011101", "00101110001", "01010001110",
        }},
        {"phi_3^1x2^9", {3, 2, 2, 2, 2, 2, 2, 2, 2, 2}, 2, {
            "0011111111", "0100000000", "1001011100", "1110100011", "2000101110", "2111010001",
            "2010010111", "2101101000", "0001001011", "0110110100", "1000100101", "1111011010",
            "1000010010", "1111101101", "2010001001", "2101110110", "0011000100", "0100111011",
            "1011100010", "1100011101", "2001110001", "2110001110", "0010111000", "0101000111",
        }},
        {"phi_3^3x2^11", {3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, 2, {
            "01200000010010", "00000000100000", "00000010001111", "01200011110111", "11100100111101",
            "21000101010101", "10200101100111", "11100111001010", "02100111111000", "10201001001000",
            "22201001010100", "21001010101011", "22201010111001", "12001011000001", "02101100011011",
            "12001101101110", "20101110000110", "20101110110100", "20110001011011", "20110001101001",
            "10210010011100", "12010010111110", "02110011100100", "22210100001110", "12010100010001",
            "21010110000000", "22210111100011", "02111000000111", "11111000100101", "21011001111110",
            "11111011010010", "01211100101000", "00011101110010", "10211110110011", "01211111001101",
            "00011111011101",
        }},
        {"phi_3^4x2^10", {3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, 2, {
            "01210000001001", "00000000010000", "00000001000111", "01210001111011", "11100010011110",
            "21020010101010", "10220010110011", "11100011100101", "02120011111100", "10220100100100",
            "22200100101010", "21020101010101", "22200101011100", "12010101100000", "02120110001101",
            "12010110110111", "20110111000011", "20110111011010", "20111000101101", "20111000110100",
            "10221001001110", "12011001011111", "02121001110010", "22201010000111", "12011010001000",
            "21021011000000", "22201011110001", "02121100000011", "11101100010010", "21021100111111",
            "11101101101001", "01211110010100", "00001110111001", "10221111011001", "01211111100110",
            "00001111101110",
        }},
        {"phi_7^1x2^10", {7, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, 2, {
            "00000000000", "00000001111", "30001101001", "40001110110", "50010011010", "60010110111",
            "20011111001", "10100110011", "50101010100", "60101011101", "20110100100", "40110101010",
            "30111000011", "10111001100", "31000110100", "21001011010", "11001101110", "11010010001",
            "51010101101", "61011000010", "41011000101", "21100000111", "41100011001", "61100101000",
            "51101100011", "31110011110", "01111110000", "01111111111",
        }},
        {"phi_4^5x2^2", {4, 4, 4, 4, 4, 2, 2}, 3, {
            "0000000", "0122001", "0233010", "0311011", "0212100", "0330101", "0021110", "0103111",
            "0323200", "0201201", "0110210", "0032211", "0131300", "0013301", "0302310", "0220311",
            "1111101", "1033100", "1322111", "1200110", "1303001", "1221000", "1130011", "1012010",
            "1232301", "1310300", "1001311", "1123310", "1020201", "1102200", "1213211", "1331210",
            "2222210", "2300211", "2011200", "2133201", "2030310", "2112311", "2203300", "2321301",
            "2101010", "2023011", "2332000", "2210001", "2313110", "2231111", "2120100", "2002101",
            "3333311", "3211310", "3100301", "3022300", "3121211", "3003210", "3312201", "3230200",
            "3010111", "3132110", "3223101", "3301100", "3202011", "3320010", "3031001", "3113000",
        }},
        {"phi_4^4x2^4", {4, 4, 4, 4, 2, 2, 2, 2}, 3, {
            "00000000", "01220001", "02330010", "03110011", "02120100", "03300101", "00210110", "01030111",
            "03231000", "02011001", "01101010", "00321011", "01311100", "00131101", "03021110", "02201111",
            "11110101", "10330100", "13220111", "12000110", "13030001", "12210000", "11300011", "10120010",
            "12321101", "13101100", "10011111", "11231110", "10201001", "11021000", "12131011", "13311010",
            "22221010", "23001011", "20111000", "21331001", "20301110", "21121111", "22031100", "23211101",
            "21010010", "20230011", "23320000", "22100001", "23130110", "22310111", "21200100", "20020101",
            "33331111", "32111110", "31001101", "30221100", "31211011", "30031010", "33121001", "32301000",
            "30100111", "31320110", "32230101", "33010100", "32020011", "33200010", "30310001", "31130000",
        }},
        {"phi_3^4x2^16", {3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, 3, {
            "00010000000000000000", "11120000000000000000", "22200000000000000000", "00011111111111111111",
            "11121111111111111111", "22201111111111111111", "11100000010011000010", "22210000010011000010",
            "00020000010011000010", "11101111101100111101", "22211111101100111101", "00021111101100111101",
            "12220000011100000101", "20000000011100000101", "01110000011100000101", "12221111100011111010",
            "20001111100011111010", "01111111100011111010", "01020000111000001011", "12100000111000001011",
            "20210000111000001011", "01021111000111110100", "12101111000111110100", "20211111000111110100",
            "22010001010101011110", "00120001010101011110", "11200001010101011110", "22011110101010100001",
            "00121110101010100001", "11201110101010100001", "11020001101110110010", "22100001101110110010",
            "00210001101110110010", "11021110010001001101", "22101110010001001101", "00211110010001001101",
            "10120001101111000001", "21200001101111000001", "02010001101111000001", "10121110010000111110",
            "21201110010000111110", "02011110010000111110", "02200001101111011100", "10010001101111011100",
            "21120001101111011100", "02201110010000100011", "10011110010000100011", "21121110010000100011",
            "21110001110000111101", "02220001110000111101", "10000001110000111101", "21111110001111000010",
            "02221110001111000010", "10001110001111000010", "20020010000011111000", "01100010000011111000",
            "12210010000011111000", "20021101111100000111", "01101101111100000111", "12211101111100000111",
            "01000010001100111010", "12110010001100111010", "20220010001100111010", "01001101110011000101",
            "12111101110011000101", "20221101110011000101", "02120010011110111101", "10200010011110111101",
            "21010010011110111101", "02121101100001000010", "10201101100001000010", "21011101100001000010",
            "20100010101001010111", "01210010101001010111", "12020010101001010111", "20101101010110101000",
            "01211101010110101000", "12021101010110101000", "20110010111011100110", "01220010111011100110",
            "12000010111011100110", "20111101000100011001", "01221101000100011001", "12001101000100011001",
            "02110011000100100101", "10220011000100100101", "21000011000100100101", "02111100111011011010",
            "10221100111011011010", "21001100111011011010", "11010011010111010011", "22120011010111010011",
            "00200011010111010011", "11011100101000101100", "22121100101000101100", "00201100101000101100",
            "22020011100000101010", "00100011100000101010", "11210011100000101010", "22021100011111010101",
            "00101100011111010101", "11211100011111010101", "21220011110011101101", "02000011110011101101",
            "10110011110011101101", "21221100001100010010", "02001100001100010010", "10111100001100010010",
            "00010100000101110001", "11120100000101110001", "22200100000101110001", "00011011111010001110",
            "11121011111010001110", "22201011111010001110", "11100100010110101110", "22210100010110101110",
            "00020100010110101110", "11101011101001010001", "22211011101001010001", "00021011101001010001",
            "12220100100001110100", "20000100100001110100", "01110100100001110100", "12221011011110001011",
            "20001011011110001011", "01111011011110001011", "01020100110010011001", "12100100110010011001",
            "20210100110010011001", "01021011001101100110", "12101011001101100110", "20211011001101100110",
            "22010100111101111011", "00120100111101111011", "11200100111101111011", "22011011000010000100",
            "00121011000010000100", "11201011000010000100", "11020101001010011110", "22100101001010011110",
            "00210101001010011110", "11021010110101100001", "22101010110101100001", "00211010110101100001",
            "10120101001010100111", "21200101001010100111", "02010101001010100111", "10121010110101011000",
            "21201010110101011000", "02011010110101011000", "02200101001011101001", "10010101001011101001",
            "21120101001011101001", "02201010110100010110", "10011010110100010110", "21121010110100010110",
            "21110101110101100110", "02220101110101100110", "10000101110101100110", "21111010001010011001",
            "02221010001010011001", "10001010001010011001", "20020110000111001111", "01100110000111001111",
            "12210110000111001111", "20021001111000110000", "01101001111000110000", "12211001111000110000",
            "01000110100010010111", "12110110100010010111", "20220110100010010111", "01001001011101101000",
            "12111001011101101000", "20221001011101101000", "02120110101101001100", "10200110101101001100",
            "21010110101101001100", "02121001010010110011", "10201001010010110011", "21011001010010110011",
            "20100110111110100000", "01210110111110100000", "12020110111110100000", "20101001000001011111",
            "01211001000001011111", "12021001000001011111", "20110111011000010100", "01220111011000010100",
            "12000111011000010100", "20111000100111101011", "01221000100111101011", "12001000100111101011",
            "02110111011001001000", "10220111011001001000", "21000111011001001000", "02111000100110110111",
            "10221000100110110111", "21001000100110110111", "11010111011001110011", "22120111011001110011",
            "00200111011001110011", "11011000100110001100", "22121000100110001100", "00201000100110001100",
            "22020111100100001011", "00100111100100001011", "11210111100100001011", "22021000011011110100",
            "00101000011011110100", "11211000011011110100", "21220111110110010000", "02000111110110010000",
            "10110111110110010000", "21221000001001101111", "02001000001001101111", "10111000001001101111",
        }},
    };
    return all;
}
// clang-format on

}  // namespace oakit::fixtures
