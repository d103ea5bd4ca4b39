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
#include <numeric>
#include <string>
#include <vector>

#include "oakit/core/mixed_array.hpp"
#include "oakit/core/subsets.hpp"

namespace oakit {

enum class Feasibility { Impossible, NotRuledOut };

struct FeasibilityVerdict {
    Feasibility verdict = Feasibility::NotRuledOut;
    std::string reason;
    /// lcm of d_i d_j over column pairs: strength 2 forces it to divide r.
    std::uint64_t run_multiple = 0;
    /// Smallest product of three levels: irredundancy at 2 caps r there.
    std::uint64_t run_cap = 0;
};

/**
 * Can an IrMOA(r, 5, d1..d5, 2) exist for some r?
 *
 * Levels must not all be equal and distinct levels must be coprime; otherwise the answer
 * is NotRuledOut with "hypothesis unmet". Under the hypothesis, strength 2 makes r a
 * multiple of L = lcm(d_i d_j) while distinct rows in every 3-column projection force
 * r <= P = min(d_i d_j d_l). L > P is Impossible; this covers every profile except
 * a^1 b^4 with a < b, where L = P = a b^2.
 */
inline FeasibilityVerdict feasibility_5col(const std::vector<Level> &levels) {
    if (levels.size() != 5) throw ParameterError("feasibility_5col needs exactly five levels, got " + std::to_string(levels.size()));
    for (Level d : levels)
        if (d < 2) throw ParameterError("levels must be at least 2");
    FeasibilityVerdict v;
    const std::string profile = profile_string(levels);
    if (std::all_of(levels.begin(), levels.end(), [&](Level d) { return d == levels.front(); })) {
        v.reason = "hypothesis unmet: all levels are equal (" + profile + ")";
        return v;
    }
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            if (levels[i] != levels[j] && std::gcd(levels[i], levels[j]) != 1) {
                v.reason = "hypothesis unmet: distinct levels " + std::to_string(levels[i]) + " and " + std::to_string(levels[j]) +
                           " are not coprime";
                return v;
            }

    std::uint64_t lcm = 1, cap = UINT64_MAX;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) lcm = std::lcm(lcm, static_cast<std::uint64_t>(levels[i]) * levels[j]);
    for_each_subset(5, 3, [&](std::span<const std::size_t> s) {
        cap = std::min<std::uint64_t>(cap, static_cast<std::uint64_t>(levels[s[0]]) * levels[s[1]] * levels[s[2]]);
        return true;
    });
    v.run_multiple = lcm;
    v.run_cap = cap;
    if (lcm > cap) {
        v.verdict = Feasibility::Impossible;
        v.reason = profile + ": strength 2 needs " + std::to_string(lcm) + " | r, but distinct rows in every 3-column projection need r <= " +
                   std::to_string(cap);
    } else {
        v.reason = profile + ": counting allows r = " + std::to_string(lcm) + " (multiple " + std::to_string(lcm) + ", cap " +
                   std::to_string(cap) + ")";
    }
    return v;
}

inline std::string to_string(Feasibility f) { return f == Feasibility::Impossible ? "Impossible" : "NotRuledOut"; }

}  // namespace oakit
