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
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "oakit/core/mixed_array.hpp"
#include "oakit/core/subsets.hpp"

namespace oakit {

inline std::size_t hamming(std::span<const Symbol> x, std::span<const Symbol> y) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < x.size(); ++j) d += (x[j] != y[j]);
    return d;
}

struct DistanceSpectrum {
    /// Attained pairwise Hamming distances, ascending.
    std::vector<std::size_t> distances;
    /// N + 1 for a one-row array.
    std::size_t min_distance = 0;
    /// distance -> number of unordered row pairs at that distance.
    std::map<std::size_t, std::uint64_t> counts;
};

inline DistanceSpectrum distance_spectrum(const MixedArray &array) {
    DistanceSpectrum spectrum;
    std::vector<std::uint64_t> histogram(array.cols() + 1, 0);
    for (std::size_t i = 0; i < array.runs(); ++i) {
        auto x = array.row(i);
        for (std::size_t j = i + 1; j < array.runs(); ++j) ++histogram[hamming(x, array.row(j))];
    }
    for (std::size_t d = 0; d < histogram.size(); ++d) {
        if (histogram[d] == 0) continue;
        spectrum.distances.push_back(d);
        spectrum.counts[d] = histogram[d];
    }
    spectrum.min_distance = spectrum.distances.empty() ? array.cols() + 1 : spectrum.distances.front();
    return spectrum;
}

/// Minimal distance without building the spectrum; stops early once a pair at distance `floor` is seen.
inline std::size_t min_distance(const MixedArray &array, std::size_t floor = 0) {
    std::size_t best = array.cols() + 1;
    for (std::size_t i = 0; i < array.runs(); ++i) {
        auto x = array.row(i);
        for (std::size_t j = i + 1; j < array.runs(); ++j) {
            best = std::min(best, hamming(x, array.row(j)));
            if (best <= floor) return best;
        }
    }
    return best;
}

/// Columns deletable in any combination while keeping MD >= k + 1.
inline std::size_t guaranteed_deletion_budget(const MixedArray &array, std::size_t k) {
    const std::size_t w = min_distance(array);
    return w > k + 1 ? w - k - 1 : 0;
}

enum class IrredundancyCheck { MinDistance, DirectEnumeration };

struct IrredundancyCertificate {
    std::size_t k = 0;
    bool holds = false;
    IrredundancyCheck criterion = IrredundancyCheck::MinDistance;
    /// Filled by the MinDistance criterion.
    std::optional<std::size_t> min_distance;
    /// DirectEnumeration: the first kept-column set containing two equal rows.
    std::optional<std::vector<std::size_t>> witness_columns;
};

/**
 * Irredundancy at k: every r x (N - k) subarray has pairwise distinct rows.
 *
 * MinDistance uses the equivalence with MD >= k + 1; DirectEnumeration walks every
 * (N - k)-column subset and hashes its rows. The two must agree.
 */
inline IrredundancyCertificate is_irredundant(const MixedArray &array, std::size_t k,
                                              IrredundancyCheck check = IrredundancyCheck::MinDistance) {
    if (k < 1 || k >= array.cols())
        throw ParameterError("irredundancy needs 1 <= k < N, got k=" + std::to_string(k) +
                             " with N=" + std::to_string(array.cols()));
    IrredundancyCertificate cert;
    cert.k = k;
    cert.criterion = check;
    if (check == IrredundancyCheck::MinDistance) {
        const std::size_t w = min_distance(array, k);
        cert.min_distance = w;
        cert.holds = w >= k + 1;
        return cert;
    }

    struct RowHash {
        std::size_t operator()(const std::vector<Symbol> &v) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (Symbol s : v) h = (h ^ s) * 1099511628211ull;
            return h;
        }
    };
    std::unordered_set<std::vector<Symbol>, RowHash> seen;
    std::vector<Symbol> projected;
    cert.holds = for_each_subset(array.cols(), array.cols() - k, [&](std::span<const std::size_t> kept) {
        seen.clear();
        for (std::size_t i = 0; i < array.runs(); ++i) {
            projected.clear();
            for (std::size_t c : kept) projected.push_back(array(i, c));
            if (!seen.insert(projected).second) {
                cert.witness_columns = std::vector<std::size_t>(kept.begin(), kept.end());
                return false;
            }
        }
        return true;
    });
    return cert;
}

}  // namespace oakit
