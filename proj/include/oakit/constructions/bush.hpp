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

#include <optional>
#include <vector>

#include "oakit/algebra/finite_field.hpp"
#include "oakit/core/mixed_array.hpp"

namespace oakit {

/**
 * Bush array OA(q^k, q+1, q, k) from polynomials of degree < k over GF(q).
 *
 * Row i holds the polynomial with coefficients c_t = t-th base-q digit of i (c_0 least
 * significant). Column x < q evaluates it at field element x; the last column holds
 * c_{k-1}. The full array has MD q + 2 - k. `columns` keeps only the first columns.
 */
inline MixedArray bush_oa(std::uint32_t q, std::uint32_t k, std::optional<std::size_t> columns = std::nullopt) {
    if (!prime_power(q)) throw ParameterError(std::to_string(q) + " is not a prime power");
    if (k < 1) throw ParameterError("strength must be at least 1");
    if (q + 1 < 2 * k) throw ParameterError("need q >= 2k - 1, got q=" + std::to_string(q) + ", k=" + std::to_string(k));
    const std::size_t width = columns.value_or(q + 1);
    if (width < 1 || width > q + 1) throw ParameterError("column count must lie in 1..q+1");
    std::uint64_t runs = 1;
    for (std::uint32_t t = 0; t < k; ++t) runs *= q;
    if (runs > (1ull << 26)) throw ParameterError("q^k too large");

    FiniteField f(q);
    std::vector<Symbol> cells;
    cells.reserve(runs * width);
    std::vector<FiniteField::Element> coeff(k);
    for (std::uint64_t i = 0; i < runs; ++i) {
        std::uint64_t rest = i;
        for (std::uint32_t t = 0; t < k; ++t, rest /= q) coeff[t] = static_cast<FiniteField::Element>(rest % q);
        for (std::size_t x = 0; x < width; ++x) {
            if (x == q) {
                cells.push_back(coeff[k - 1]);
                continue;
            }
            FiniteField::Element acc = 0;  // Horner
            for (std::uint32_t t = k; t-- > 0;) acc = f.add(f.mul(acc, static_cast<FiniteField::Element>(x)), coeff[t]);
            cells.push_back(acc);
        }
    }
    return MixedArray(std::vector<Level>(width, q), std::move(cells));
}

/// Full factorial over `levels`, first column slowest; its strength equals its column count.
inline MixedArray trivial_moa(const std::vector<Level> &levels, std::optional<std::size_t> runs = std::nullopt) {
    if (levels.empty()) throw ParameterError("no levels");
    std::uint64_t r = 1;
    for (Level d : levels) {
        if (d < 2) throw ParameterError("levels must be at least 2");
        r *= d;
        if (r > (1ull << 26)) throw ParameterError("trivial MOA too large");
    }
    if (runs && *runs != r)
        throw ParameterError("inconsistent grouping: levels multiply to " + std::to_string(r) + ", not " + std::to_string(*runs));
    std::vector<Symbol> cells;
    cells.reserve(r * levels.size());
    for (std::uint64_t i = 0; i < r; ++i) {
        std::uint64_t div = r;
        for (Level d : levels) {
            div /= d;
            cells.push_back(static_cast<Symbol>((i / div) % d));
        }
    }
    return MixedArray(levels, std::move(cells));
}

}  // namespace oakit
