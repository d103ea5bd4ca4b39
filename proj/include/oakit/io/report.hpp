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

// JSON views of verification results ("oakit-report-v1").

#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "oakit/core/distance.hpp"
#include "oakit/core/strength.hpp"

namespace oakit {

using Json = nlohmann::ordered_json;

inline Json to_json(const StrengthWitness &w) {
    Json j;
    j["columns"] = w.columns;
    j["tuple"] = w.tuple;
    j["count"] = w.count;
    j["expected"] = w.expected;
    j["divisibility"] = w.divisibility;
    return j;
}

inline Json to_json(const StrengthReport &r) {
    Json j;
    j["k"] = r.strength_checked;
    j["holds"] = r.holds;
    j["lambda"] = r.index ? Json(*r.index) : Json(nullptr);
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

inline Json to_json(const DistanceSpectrum &s) {
    Json j;
    j["min"] = s.min_distance;
    Json spectrum = Json::array();
    for (const auto &[d, n] : s.counts) spectrum.push_back(Json{{"distance", d}, {"pairs", n}});
    j["spectrum"] = std::move(spectrum);
    return j;
}

inline Json to_json(const IrredundancyCertificate &c) {
    Json j;
    j["k"] = c.k;
    j["holds"] = c.holds;
    j["criterion"] = c.criterion == IrredundancyCheck::MinDistance ? "min-distance" : "direct-enumeration";
    if (c.witness_columns) j["witness_columns"] = *c.witness_columns;
    return j;
}

/// Full verification report; the irredundancy section is present when `irredundant_k` is set.
inline Json verification_report(const MixedArray &array, std::size_t k, std::optional<std::size_t> irredundant_k = {}) {
    Json j;
    j["schema"] = "oakit-report-v1";
    j["runs"] = array.runs();
    j["levels"] = std::vector<Level>(array.levels().begin(), array.levels().end());
    j["profile"] = profile_string(array.levels());
    j["strength"] = to_json(verify_strength(array, k));
    const auto spectrum = distance_spectrum(array);
    j["distance"] = to_json(spectrum);
    if (irredundant_k) {
        if (*irredundant_k < 1 || *irredundant_k >= array.cols())
            throw ParameterError("irredundancy needs 1 <= k < N, got k=" + std::to_string(*irredundant_k));
        j["irredundant"] = Json{{"k", *irredundant_k}, {"holds", spectrum.min_distance >= *irredundant_k + 1}};
    }
    return j;
}

/// Canonical text for JSON artifacts: two-space indent, trailing newline.
inline std::string dump(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace oakit
