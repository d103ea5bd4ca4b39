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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oakit/catalog/fixtures.hpp"
#include "oakit/catalog/seeds.hpp"
#include "oakit/constructions/families.hpp"
#include "oakit/quantum/density.hpp"
#include "oakit/search/search.hpp"

namespace oakit {

/**
 * A reproducible registry entry. Building must give exactly `runs` rows over `levels`
 * (in column order), strength `strength` and MD >= `min_distance_floor`.
 * Entries with `import_required` set cannot be built from embedded or generated data.
 */
struct FamilyEntry {
    std::string id;
    std::string description;
    std::size_t runs = 0;
    std::vector<Level> levels;
    std::size_t strength = 0;
    std::size_t min_distance_floor = 0;
    std::optional<std::string> import_required;
    std::function<Construction()> build;

    bool buildable() const { return !import_required; }
};

namespace detail {

inline std::vector<Level> profile(std::initializer_list<std::pair<Level, std::size_t>> parts) {
    std::vector<Level> out;
    for (auto [d, n] : parts) out.insert(out.end(), n, d);
    return out;
}

inline Construction fixture_construction(const fixtures::KetFixture &f) {
    MixedArray a = fixtures::to_array(f);
    Construction c{a, claim("fixture(" + std::string(f.name) + ")", a, f.k)};
    c.certificate.claims_irredundant = true;
    return verified(std::move(c));
}

inline DifferenceScheme h12_scheme() { return hadamard_scheme(hadamard01(12)); }

inline std::vector<FamilyEntry> make_registry() {
    std::vector<FamilyEntry> e;
    auto add = [&](std::string id, std::string description, std::size_t runs, std::vector<Level> levels, std::size_t k,
                   std::size_t md, std::function<Construction()> build) {
        e.push_back({std::move(id), std::move(description), runs, std::move(levels), k, md, std::nullopt, std::move(build)});
    };
    auto import = [&](std::string id, std::string description, std::size_t runs, std::vector<Level> levels, std::size_t k,
                      std::string needed) {
        e.push_back({std::move(id), std::move(description), runs, std::move(levels), k, k + 1, std::move(needed), nullptr});
    };

    add("thm1/3^1x2^9", "thm1_family(M=1,N=9)", 24, profile({{3, 1}, {2, 9}}), 2, 3, [] { return thm1_family(1, 9); });
    add("thm1/3^2x2^21", "thm1_family(M=2,N=21)", 72, profile({{3, 2}, {2, 21}}), 2, 3, [] { return thm1_family(2, 21); });
    add("thm2/4^1x2^7", "thm2_family(d=4,M=1,N=7)", 16, profile({{4, 1}, {2, 7}}), 2, 3, [] { return thm2_family(4, 1, 7); });
    add("thm3/3^5x2^36", "thm3_family(m=5,n=36)", 216, profile({{3, 5}, {2, 36}}), 3, 4, [] { return thm3_family(5, 36); });
    add("thm4/5^4x2^54", "thm4_family(d=5,m=4,n=54)", 1000, profile({{5, 4}, {2, 54}}), 3, 4,
        [] { return thm4_family(5, 4, 54); });
    add("thm7/12^4", "thm7_base(k=2, factors 3,4)", 144, profile({{12, 4}}), 2, 3, [] { return thm7_base(2, {3, 4}); });
    add("thm7/12^3x4^1x3^1", "thm7_family(k=2, factors 3,4, column 0 -> 4^1 3^1)", 144, profile({{4, 1}, {3, 1}, {12, 3}}), 2,
        3, [] { return thm7_family(2, {3, 4}, {{4, 3}}); });
    add("table3/12^1x2^12", "thm8_host(D(12,12,2))", 24, profile({{12, 1}, {2, 12}}), 2, 3, [] { return thm8_host(h12_scheme()); });
    add("table3/3^1x2^8", "thm8_family(D(12,12,2), searched MOA(12,5,3^1 2^4,2)) minus eight 2-level columns", 24,
        profile({{3, 1}, {2, 8}}), 2, 3, [] {
            Thm8Options opt;
            opt.delete_quota = {{2, 8}};
            return thm8_family(h12_scheme(), searched_seed(12, {3, 2, 2, 2, 2}, 2), opt);
        });
    add("table3/4^1x3^1x2^12", "thm8_family(D(12,12,2), full factorial 4x3)", 24, profile({{4, 1}, {3, 1}, {2, 12}}), 2, 3,
        [] { return thm8_family(h12_scheme(), trivial_moa({4, 3})); });
    add("table3/6^1x2^14", "thm8_family(D(12,12,2), searched MOA(12,3,6^1 2^2,2))", 24, profile({{6, 1}, {2, 14}}), 2, 3,
        [] { return thm8_family(h12_scheme(), searched_seed(12, {6, 2, 2}, 2)); });
    add("cor2/4^4x2^2", "cor_dn_family(d=4,n=1, full factorial 2x2)", 16, profile({{2, 2}, {4, 4}}), 2, 3,
        [] { return cor_dn_family(4, 1, trivial_moa({2, 2})); });
    add("cor2/4^1x2^10", "cor_dn_family(d=2,n=3, searched MOA(8,3,4^1 2^2,2))", 16, profile({{4, 1}, {2, 10}}), 2, 3,
        [] { return cor_dn_family(2, 3, searched_seed(8, {4, 2, 2}, 2)); });
    import("table5/12^1x6^6", "thm8_family over a D(12,6,6) scheme", 72, profile({{12, 1}, {6, 6}}), 2,
           "difference scheme D(12,6,6) over Z6 (not embedded; see the published difference-scheme tables)");
    import("table1/6^N", "IrOA(r_N, N, 6, 3) family", 0, {}, 3,
           "irredundant OA(r_N, N, 6, 3) seeds from the external k-uniform state tables");

    for (const auto &f : fixtures::ket_fixtures()) {
        MixedArray a = fixtures::to_array(f);
        add("fixture/" + std::string(f.name), "embedded ket list " + std::string(f.name), a.runs(),
            std::vector<Level>(a.levels().begin(), a.levels().end()), f.k, f.k + 1, [&f] { return fixture_construction(f); });
    }
    return e;
}

}  // namespace detail

inline const std::vector<FamilyEntry> &catalog_entries() {
    static const std::vector<FamilyEntry> entries = detail::make_registry();
    return entries;
}

inline const FamilyEntry &catalog_entry(const std::string &id) {
    for (const auto &e : catalog_entries())
        if (e.id == id) return e;
    throw ParameterError("unknown catalog id '" + id + "'");
}

/// Builds, verifies and checks the result against the entry's expected certificate.
inline Construction catalog_build(const std::string &id) {
    const FamilyEntry &e = catalog_entry(id);
    if (e.import_required) throw MissingSeedError("seed needed for " + id + ": " + *e.import_required);
    Construction c = e.build();
    const auto &a = c.array;
    std::string mismatch;
    if (a.runs() != e.runs) mismatch = "runs " + std::to_string(a.runs());
    else if (!std::equal(a.levels().begin(), a.levels().end(), e.levels.begin(), e.levels.end()))
        mismatch = "profile " + profile_string(a.levels());
    else if (c.certificate.strength != e.strength) mismatch = "strength " + std::to_string(c.certificate.strength);
    else if (c.certificate.status != CertificateStatus::Verified) mismatch = "unverified certificate";
    else if (!c.certificate.measured_min_distance || *c.certificate.measured_min_distance < e.min_distance_floor)
        mismatch = "min distance below " + std::to_string(e.min_distance_floor);
    if (!mismatch.empty()) throw VerificationError(id + " does not reproduce its expected certificate: " + mismatch);
    c.certificate.notes.push_back("catalog id " + id);
    return c;
}

struct SelfTestItem {
    std::string id;
    bool ok = false;
    std::string detail;
};

/// Every embedded seed and ket fixture against its declared predicate.
inline std::vector<SelfTestItem> self_test() {
    std::vector<SelfTestItem> out;
    auto run = [&](std::string id, const std::function<std::string()> &check) {
        try {
            out.push_back({id, true, check()});
        } catch (const std::exception &ex) {
            out.push_back({id, false, ex.what()});
        }
    };
    run("seed/D3(18,5,3)", [] { return "difference scheme " + seeds::d3_18_5_3().label(); });
    run("seed/D(3,3,3)", [] { return "difference scheme " + seeds::d_3_3_3().label(); });
    for (const auto &f : fixtures::ket_fixtures()) {
        run("fixture/" + std::string(f.name), [&f] {
            const MixedArray a = fixtures::to_array(f);
            const auto u = verify_k_uniform(a, f.k, true);
            if (!u.holds) throw VerificationError("not " + std::to_string(f.k) + "-uniform");
            return std::to_string(a.runs()) + " kets, " + std::to_string(f.k) + "-uniform";
        });
    }
    return out;
}

inline Json to_json(const FamilyEntry &e) {
    Json j;
    j["id"] = e.id;
    j["description"] = e.description;
    j["runs"] = e.runs;
    j["levels"] = e.levels;
    j["profile"] = profile_string(e.levels);
    j["strength"] = e.strength;
    j["min_distance_floor"] = e.min_distance_floor;
    j["buildable"] = e.buildable();
    j["import_required"] = e.import_required ? Json(*e.import_required) : Json(nullptr);
    return j;
}

}  // namespace oakit
