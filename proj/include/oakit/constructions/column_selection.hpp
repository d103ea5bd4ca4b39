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

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "oakit/core/distance.hpp"

namespace oakit {

struct ColumnSelectionResult {
    /// Deleted columns (ascending); unset when no deletion set was found.
    std::optional<std::vector<std::size_t>> deleted;
    std::uint64_t nodes = 0;
    /// The node budget ran out before the space was exhausted.
    bool exhausted_budget = false;
};

/**
 * Finds the lexicographically first set of columns to delete so that the remaining array
 * has MD >= `target`. `quota` maps a level to how many columns of that level to delete;
 * only indices in `candidates` may be deleted.
 *
 * Only row pairs whose distance could fall below the target are tracked; each deletion
 * decrements the pairs that differ in that column and a branch dies as soon as one pair
 * drops below the target.
 */
inline ColumnSelectionResult select_columns_for_distance(const MixedArray &a, std::vector<std::size_t> candidates,
                                                         const std::map<Level, std::size_t> &quota, std::size_t target,
                                                         std::uint64_t node_budget = 50'000'000) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::size_t total = 0;
    for (const auto &[d, n] : quota) total += n;
    for (auto c : candidates)
        if (c >= a.cols()) throw ParameterError("candidate column out of range");
    if (total >= a.cols()) throw ParameterError("cannot delete every column");

    // Critical pairs and, per candidate column, the critical pairs differing there.
    std::vector<std::int64_t> slack;  // distance - target
    std::vector<std::vector<std::uint32_t>> differ(candidates.size());
    for (std::size_t i = 0; i < a.runs(); ++i)
        for (std::size_t j = i + 1; j < a.runs(); ++j) {
            const std::size_t d = hamming(a.row(i), a.row(j));
            if (d < target) return {};  // deleting never increases distance
            if (d >= target + total) continue;
            const auto id = static_cast<std::uint32_t>(slack.size());
            slack.push_back(static_cast<std::int64_t>(d - target));
            for (std::size_t p = 0; p < candidates.size(); ++p)
                if (a(i, candidates[p]) != a(j, candidates[p])) differ[p].push_back(id);
        }

    std::map<Level, std::size_t> need = quota;
    // available[p][level]: candidates at positions >= p with that level.
    std::vector<std::map<Level, std::size_t>> available(candidates.size() + 1);
    for (std::size_t p = candidates.size(); p-- > 0;) {
        available[p] = available[p + 1];
        ++available[p][a.level(candidates[p])];
    }
    for (const auto &[d, n] : need)
        if (available[0][d] < n) return {};

    ColumnSelectionResult result;
    std::vector<std::size_t> chosen;
    std::size_t remaining = total;

    auto dfs = [&](auto &&self, std::size_t start) -> bool {
        if (remaining == 0) return true;
        for (std::size_t p = start; p < candidates.size(); ++p) {
            if (++result.nodes > node_budget) {
                result.exhausted_budget = true;
                return false;
            }
            bool feasible = true;
            for (const auto &[d, n] : need)
                if (available[p][d] < n) feasible = false;
            if (!feasible) return false;  // later positions only have fewer columns
            const Level lv = a.level(candidates[p]);
            auto it = need.find(lv);
            if (it == need.end() || it->second == 0) continue;

            bool ok = true;
            std::size_t applied = 0;
            for (auto id : differ[p]) {
                ++applied;
                if (--slack[id] < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                --it->second;
                --remaining;
                chosen.push_back(candidates[p]);
                if (self(self, p + 1)) return true;
                chosen.pop_back();
                ++remaining;
                ++it->second;
            }
            for (std::size_t t = 0; t < applied; ++t) ++slack[differ[p][t]];
            if (result.exhausted_budget) return false;
        }
        return false;
    };
    if (dfs(dfs, 0)) result.deleted = chosen;
    return result;
}

}  // namespace oakit
