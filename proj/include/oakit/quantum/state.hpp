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

#include <set>
#include <string>
#include <vector>

#include "oakit/core/mixed_array.hpp"
#include "oakit/io/report.hpp"

namespace oakit {

/**
 * Uniform superposition of product kets, one per array row, each with amplitude 1/sqrt(r).
 * Amplitudes are implicit; densities built from it use exact fractions over r.
 */
struct SparseState {
    std::vector<Level> levels;
    std::vector<std::vector<Symbol>> kets;

    std::size_t terms() const noexcept { return kets.size(); }

    /// Repeated kets are allowed but make the state something other than a plain superposition of distinct products.
    bool has_duplicates() const {
        std::set<std::vector<Symbol>> seen(kets.begin(), kets.end());
        return seen.size() != kets.size();
    }
};

inline SparseState emit_state(const MixedArray &a) {
    SparseState s;
    s.levels.assign(a.levels().begin(), a.levels().end());
    for (std::size_t i = 0; i < a.runs(); ++i) s.kets.emplace_back(a.row(i).begin(), a.row(i).end());
    return s;
}

inline MixedArray state_array(const SparseState &s) { return MixedArray::from_rows(s.levels, s.kets); }

/// "|0 1 1⟩ + |1 0 1⟩ + ..." in row order.
inline std::string render_kets(const SparseState &s) {
    std::string out;
    for (std::size_t i = 0; i < s.kets.size(); ++i) {
        if (i) out += " + ";
        out += "|";
        for (std::size_t j = 0; j < s.kets[i].size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(s.kets[i][j]);
        }
        out += "⟩";
    }
    return out;
}

inline Json to_json(const SparseState &s) {
    Json j;
    j["schema"] = "oakit-report-v1";
    j["kind"] = "state";
    j["levels"] = s.levels;
    j["profile"] = profile_string(s.levels);
    j["terms"] = s.terms();
    j["amplitude"] = "1/sqrt(" + std::to_string(s.terms()) + ")";
    j["duplicate_kets"] = s.has_duplicates();
    j["kets"] = s.kets;
    return j;
}

}  // namespace oakit
