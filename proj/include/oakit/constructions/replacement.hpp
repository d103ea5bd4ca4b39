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
#include <set>
#include <vector>

#include "oakit/constructions/certificate.hpp"

namespace oakit {

/**
 * Replace column `column` (d levels) by the columns of `with` (d rows): symbol s becomes
 * row s of `with`. `keep` selects a subset of with's columns (all when unset).
 *
 * Distance-bearing columns are the ones whose joint MD the irredundancy argument relies
 * on; the remaining replaced columns may be cut down or dropped freely.
 */
struct ColumnReplacement {
    std::size_t column = 0;
    MixedArray with;
    std::optional<std::vector<std::size_t>> keep;
    bool distance_bearing = false;
};

struct ReplacementPlan {
    std::size_t strength = 0;
    std::vector<ColumnReplacement> replacements;
};

/**
 * Expansive replacement. Replaced columns expand in place, so host column order is kept.
 *
 * The result keeps the host's strength. It is certified irredundant when the
 * distance-bearing columns (all unreplaced columns plus replacements flagged
 * distance_bearing) have MD >= k + 1 and every distance-bearing replacement keeps all of
 * a replacement array with pairwise distinct rows; otherwise the certificate asks for
 * re-verification.
 */
inline Construction expansive_replace(const MixedArray &a, const ReplacementPlan &plan) {
    if (plan.replacements.empty()) throw ParameterError("replacement plan is empty");
    const std::size_t k = plan.strength;
    if (k < 1 || k > a.cols()) throw ParameterError("plan strength out of range");
    if (!verify_strength(a, k).holds) throw ParameterError("host array does not have strength " + std::to_string(k));

    std::vector<const ColumnReplacement *> by_column(a.cols(), nullptr);
    for (const auto &rep : plan.replacements) {
        if (rep.column >= a.cols()) throw ParameterError("replacement column " + std::to_string(rep.column) + " out of range");
        if (by_column[rep.column]) throw ParameterError("column " + std::to_string(rep.column) + " replaced twice");
        if (rep.with.runs() != a.level(rep.column))
            throw ParameterError("replacement for column " + std::to_string(rep.column) + " has " +
                                 std::to_string(rep.with.runs()) + " rows but the column has " +
                                 std::to_string(a.level(rep.column)) + " levels");
        if (!verify_strength(rep.with, std::min(k, rep.with.cols())).holds)
            throw ParameterError("replacement for column " + std::to_string(rep.column) + " lacks strength " +
                                 std::to_string(std::min(k, rep.with.cols())));
        if (rep.keep) {
            std::set<std::size_t> uniq(rep.keep->begin(), rep.keep->end());
            if (uniq.size() != rep.keep->size()) throw ParameterError("duplicate kept column");
            for (auto c : *rep.keep)
                if (c >= rep.with.cols()) throw ParameterError("kept column index out of range");
        }
        by_column[rep.column] = &rep;
    }

    auto kept_of = [](const ColumnReplacement &rep) {
        if (rep.keep) return *rep.keep;
        std::vector<std::size_t> all(rep.with.cols());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    };

    std::vector<Level> levels;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (!by_column[c]) {
            levels.push_back(a.level(c));
            continue;
        }
        for (auto j : kept_of(*by_column[c])) levels.push_back(by_column[c]->with.level(j));
    }
    if (levels.empty()) throw ParameterError("replacement plan removes every column");

    std::vector<Symbol> cells;
    cells.reserve(a.runs() * levels.size());
    for (std::size_t i = 0; i < a.runs(); ++i)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (!by_column[c]) {
                cells.push_back(a(i, c));
                continue;
            }
            const auto &rep = *by_column[c];
            for (auto j : kept_of(rep)) cells.push_back(rep.with(a(i, c), j));
        }
    MixedArray out(std::move(levels), std::move(cells));

    auto cert = claim("expansive_replace", out, k);
    std::vector<std::size_t> bearing;
    bool condition = true;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        const auto *rep = by_column[c];
        if (rep && !rep->distance_bearing) continue;
        bearing.push_back(c);
        if (rep && (kept_of(*rep).size() != rep->with.cols() || min_distance(rep->with) < 1)) condition = false;
    }
    if (bearing.empty()) condition = false;
    if (condition) {
        const std::size_t w = min_distance(select_columns(a, bearing));
        if (w >= k + 1) {
            cert.predicted = PredictedDistance{"MD of the distance-bearing host columns (" + std::to_string(bearing.size()) + ")",
                                               std::min(w, out.cols()), false};
            cert.claims_irredundant = true;
        } else {
            condition = false;
        }
    }
    if (!condition) cert.notes.push_back("re-verify: plan is outside the certified distance conditions");
    return {std::move(out), std::move(cert)};
}

}  // namespace oakit
