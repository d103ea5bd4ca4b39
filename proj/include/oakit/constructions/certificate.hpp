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
#include <string>
#include <vector>

#include "oakit/core/distance.hpp"
#include "oakit/core/strength.hpp"
#include "oakit/io/report.hpp"

namespace oakit {

/// A minimal-distance value predicted by a construction's formula.
struct PredictedDistance {
    std::string formula;
    std::size_t value = 0;
    /// Equality is predicted; otherwise `value` is a lower bound.
    bool exact = false;
};

enum class CertificateStatus { Unverified, Verified, Failed };

inline std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::Unverified: return "unverified";
        case CertificateStatus::Verified: return "verified";
        case CertificateStatus::Failed: return "failed";
    }
    return "?";
}

/**
 * Claimed parameters of a constructed array together with the outcome of the exact
 * oracle re-check. Status only becomes Verified through verify_certificate.
 */
struct ConstructionCertificate {
    std::string construction;
    std::size_t runs = 0;
    std::vector<Level> levels;
    std::size_t strength = 0;
    std::optional<PredictedDistance> predicted;
    /// The construction claims MD >= strength + 1.
    bool claims_irredundant = false;
    CertificateStatus status = CertificateStatus::Unverified;
    std::optional<std::size_t> measured_min_distance;
    std::vector<std::string> notes;
};

struct Construction {
    MixedArray array;
    ConstructionCertificate certificate;
};

inline ConstructionCertificate claim(std::string construction, const MixedArray &a, std::size_t strength) {
    ConstructionCertificate c;
    c.construction = std::move(construction);
    c.runs = a.runs();
    c.levels.assign(a.levels().begin(), a.levels().end());
    c.strength = strength;
    return c;
}

/**
 * Re-checks every claim against the array: shape, strength, the predicted distance
 * (equality or bound) and MD >= k + 1 when irredundancy is claimed. Failure reasons are
 * appended to the notes.
 */
inline bool verify_certificate(ConstructionCertificate &cert, const MixedArray &array) {
    std::vector<std::string> problems;
    if (array.runs() != cert.runs) problems.push_back("run count differs from claim");
    if (!std::equal(array.levels().begin(), array.levels().end(), cert.levels.begin(), cert.levels.end()))
        problems.push_back("level profile differs from claim");
    if (problems.empty()) {
        if (cert.strength > array.cols()) problems.push_back("claimed strength exceeds column count");
        else if (!verify_strength(array, cert.strength).holds) problems.push_back("strength check failed");
        const std::size_t md = min_distance(array);
        cert.measured_min_distance = md;
        if (cert.predicted) {
            if (cert.predicted->exact && md != cert.predicted->value)
                problems.push_back("measured MD " + std::to_string(md) + " differs from predicted " +
                                   std::to_string(cert.predicted->value));
            if (!cert.predicted->exact && md < cert.predicted->value)
                problems.push_back("measured MD " + std::to_string(md) + " is below the bound " +
                                   std::to_string(cert.predicted->value));
        }
        if (cert.claims_irredundant && md < cert.strength + 1)
            problems.push_back("measured MD " + std::to_string(md) + " < k + 1; not irredundant");
    }
    for (auto &p : problems) cert.notes.push_back("verification: " + p);
    cert.status = problems.empty() ? CertificateStatus::Verified : CertificateStatus::Failed;
    return problems.empty();
}

/// Verifies and throws VerificationError on failure; returns the construction for chaining.
inline Construction verified(Construction c) {
    if (!verify_certificate(c.certificate, c.array)) {
        std::string why = c.certificate.construction + " failed verification";
        for (const auto &n : c.certificate.notes) why += "; " + n;
        throw VerificationError(why);
    }
    return c;
}

inline Json to_json(const ConstructionCertificate &c) {
    Json j;
    j["schema"] = "oakit-certificate-v1";
    j["construction"] = c.construction;
    j["runs"] = c.runs;
    j["columns"] = c.levels.size();
    j["levels"] = c.levels;
    j["profile"] = profile_string(c.levels);
    j["strength"] = c.strength;
    j["claims_irredundant"] = c.claims_irredundant;
    if (c.predicted)
        j["predicted_min_distance"] = Json{{"formula", c.predicted->formula},
                                           {"value", c.predicted->value},
                                           {"kind", c.predicted->exact ? "exact" : "lower-bound"}};
    else
        j["predicted_min_distance"] = nullptr;
    j["measured_min_distance"] = c.measured_min_distance ? Json(*c.measured_min_distance) : Json(nullptr);
    j["status"] = to_string(c.status);
    j["notes"] = c.notes;
    return j;
}

}  // namespace oakit
