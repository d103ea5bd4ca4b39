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

#include <cstdint>
#include <optional>
#include <vector>

#include "oakit/core/mixed_array.hpp"
#include "oakit/core/subsets.hpp"

namespace oakit {

struct StrengthWitness {
    std::vector<std::size_t> columns;
    /// Empty when the run count is not divisible by the level product of `columns`.
    std::vector<Symbol> tuple;
    std::uint64_t count = 0;
    std::uint64_t expected = 0;
    bool divisibility = false;

    bool operator==(const StrengthWitness &) const = default;
};

struct StrengthReport {
    std::size_t strength_checked = 0;
    bool holds = false;
    std::optional<StrengthWitness> witness;
    /// r / prod(d_j) when that count is the same for every checked subset.
    std::optional<std::uint64_t> index;
};

/**
 * Exact strength test: every r x k subarray must contain each k-tuple r / prod(d) times.
 *
 * Subsets are visited in lexicographic order with a dense counter per subset, so the
 * reported witness is the first failing subset and, within it, the first failing tuple.
 */
inline StrengthReport verify_strength(const MixedArray &array, std::size_t k) {
    if (k > array.cols())
        throw ParameterError("strength " + std::to_string(k) + " exceeds column count " + std::to_string(array.cols()));
    StrengthReport report;
    report.strength_checked = k;
    const std::uint64_t r = array.runs();
    std::vector<std::uint32_t> counter;
    std::optional<std::uint64_t> common;
    bool uniform_index = true;

    bool ok = for_each_subset(array.cols(), k, [&](std::span<const std::size_t> subset) {
        std::uint64_t product = 1;
        for (std::size_t c : subset) product = saturating_mul(product, array.level(c));
        if (product > r || r % product != 0) {
            report.witness = StrengthWitness{{subset.begin(), subset.end()}, {}, 0, 0, true};
            return false;
        }
        const std::uint64_t lambda = r / product;
        counter.assign(product, 0);
        for (std::size_t i = 0; i < r; ++i) {
            std::uint64_t idx = 0;
            for (std::size_t c : subset) idx = idx * array.level(c) + array(i, c);
            ++counter[idx];
        }
        for (std::uint64_t idx = 0; idx < product; ++idx) {
            if (counter[idx] == lambda) continue;
            std::vector<Symbol> tuple(subset.size());
            std::uint64_t rest = idx;
            for (std::size_t p = subset.size(); p-- > 0;) {
                tuple[p] = static_cast<Symbol>(rest % array.level(subset[p]));
                rest /= array.level(subset[p]);
            }
            report.witness = StrengthWitness{{subset.begin(), subset.end()}, std::move(tuple), counter[idx], lambda, false};
            return false;
        }
        if (!common) common = lambda;
        else if (*common != lambda) uniform_index = false;
        return true;
    });

    report.holds = ok;
    if (ok && uniform_index) report.index = common;
    return report;
}

/// Largest k for which verify_strength holds (0 is always attained).
inline std::size_t max_strength(const MixedArray &array) {
    std::size_t k = 0;
    while (k < array.cols() && verify_strength(array, k + 1).holds) ++k;
    return k;
}

}  // namespace oakit
