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
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oakit/core/mixed_array.hpp"
#include "oakit/core/subsets.hpp"
#include "oakit/io/report.hpp"

namespace oakit {

/// Non-negative fraction in lowest terms.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Fraction of(std::uint64_t n, std::uint64_t d) {
        const std::uint64_t g = std::gcd(n, d);
        return g ? Fraction{n / g, d / g} : Fraction{0, 1};
    }
    bool operator==(const Fraction &) const = default;
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

/**
 * rho_S of the uniform superposition of the rows, stored sparsely as numerators over r.
 * Entry (a, b) counts ordered row pairs (x, y) with x|S = a, y|S = b and equal
 * projections outside S. Indices are mixed-radix with the first column of S most significant.
 */
struct DensityMatrix {
    std::vector<std::size_t> subset;
    std::vector<Level> subset_levels;
    std::uint64_t dimension = 0;
    std::uint64_t denominator = 0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> numerators;

    Fraction entry(std::uint64_t a, std::uint64_t b) const {
        auto it = numerators.find({a, b});
        return Fraction::of(it == numerators.end() ? 0 : it->second, denominator);
    }

    Fraction trace() const {
        std::uint64_t t = 0;
        for (const auto &[ab, n] : numerators)
            if (ab.first == ab.second) t += n;
        return Fraction::of(t, denominator);
    }

    bool is_symmetric() const {
        return std::all_of(numerators.begin(), numerators.end(), [&](const auto &kv) {
            auto it = numerators.find({kv.first.second, kv.first.first});
            return it != numerators.end() && it->second == kv.second;
        });
    }

    /// Equal to (1/D_S) I.
    bool is_maximally_mixed() const {
        if (denominator % dimension != 0) return false;
        const std::uint64_t diag = denominator / dimension;
        std::uint64_t on_diagonal = 0;
        for (const auto &[ab, n] : numerators) {
            if (ab.first != ab.second || n != diag) return false;
            ++on_diagonal;
        }
        return on_diagonal == dimension;
    }
};

namespace detail {

/// Zobrist keys per (column, symbol); complement hashes are exact-checked afterwards.
class ProjectionHasher {
   public:
    explicit ProjectionHasher(const MixedArray &a) : a_(a) {
        std::mt19937_64 rng(0x6f616b6974ull);
        offset_.resize(a.cols() + 1, 0);
        for (std::size_t c = 0; c < a.cols(); ++c) offset_[c + 1] = offset_[c] + a.level(c);
        keys_.resize(offset_.back());
        for (auto &k : keys_) k = rng();
        full_.resize(a.runs(), 0);
        for (std::size_t i = 0; i < a.runs(); ++i)
            for (std::size_t c = 0; c < a.cols(); ++c) full_[i] ^= key(c, a(i, c));
    }

    std::uint64_t key(std::size_t c, Symbol s) const { return keys_[offset_[c] + s]; }

    /// Hash of row i with the columns in S removed.
    std::uint64_t complement(std::size_t i, std::span<const std::size_t> subset) const {
        std::uint64_t h = full_[i];
        for (std::size_t c : subset) h ^= key(c, a_(i, c));
        return h;
    }

   private:
    const MixedArray &a_;
    std::vector<std::size_t> offset_;
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint64_t> full_;
};

inline std::uint64_t subset_index(const MixedArray &a, std::size_t i, std::span<const std::size_t> subset) {
    std::uint64_t idx = 0;
    for (std::size_t c : subset) idx = idx * a.level(c) + a(i, c);
    return idx;
}

/**
 * Groups rows by their exact projection outside `subset` and calls fn(group) with the row
 * indices of each group (hash order, then exact lexicographic order of the complement).
 */
template <typename Fn>
void for_each_complement_group(const MixedArray &a, const ProjectionHasher &hasher, std::span<const std::size_t> subset,
                               std::vector<std::size_t> &order, std::vector<std::uint64_t> &hashes, Fn &&fn) {
    const std::size_t r = a.runs();
    std::vector<bool> in_subset(a.cols(), false);
    for (std::size_t c : subset) in_subset[c] = true;
    hashes.resize(r);
    order.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        hashes[i] = hasher.complement(i, subset);
        order[i] = i;
    }
    auto complement_less = [&](std::size_t x, std::size_t y) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (in_subset[c] || a(x, c) == a(y, c)) continue;
            return a(x, c) < a(y, c);
        }
        return false;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (hashes[x] != hashes[y]) return hashes[x] < hashes[y];
        return complement_less(x, y);
    });
    std::size_t start = 0;
    for (std::size_t p = 1; p <= r; ++p) {
        if (p < r && hashes[order[p]] == hashes[order[start]] && !complement_less(order[start], order[p])) continue;
        fn(std::span<const std::size_t>(order.data() + start, p - start));
        start = p;
    }
}

inline void check_subset(const MixedArray &a, std::span<const std::size_t> subset) {
    if (subset.empty() || subset.size() >= a.cols()) throw ParameterError("subset must be nonempty and proper");
    for (std::size_t p = 0; p < subset.size(); ++p) {
        if (subset[p] >= a.cols()) throw ParameterError("subset column out of range");
        if (p && subset[p] <= subset[p - 1]) throw ParameterError("subset must be strictly increasing");
    }
}

}  // namespace detail

inline DensityMatrix reduced_density(const MixedArray &a, std::vector<std::size_t> subset) {
    detail::check_subset(a, subset);
    DensityMatrix rho;
    rho.subset = subset;
    rho.dimension = 1;
    for (std::size_t c : subset) {
        rho.subset_levels.push_back(a.level(c));
        rho.dimension = saturating_mul(rho.dimension, a.level(c));
    }
    rho.denominator = a.runs();
    detail::ProjectionHasher hasher(a);
    std::vector<std::size_t> order;
    std::vector<std::uint64_t> hashes;
    detail::for_each_complement_group(a, hasher, subset, order, hashes, [&](std::span<const std::size_t> group) {
        for (std::size_t x : group)
            for (std::size_t y : group) ++rho.numerators[{detail::subset_index(a, x, subset), detail::subset_index(a, y, subset)}];
    });
    return rho;
}

struct UniformityFailure {
    std::vector<std::size_t> subset;
    /// "off-diagonal" or "diagonal".
    std::string kind;
    std::uint64_t row_index = 0;
    std::uint64_t col_index = 0;
    Fraction value;
    Fraction expected;
};

struct UniformityReport {
    std::size_t k = 0;
    bool holds = false;
    std::uint64_t subsets_checked = 0;
    std::uint64_t subsets_passed = 0;
    /// First failing subset in lexicographic order.
    std::optional<UniformityFailure> first_failure;
};

/**
 * k-uniformity: every k-party reduction equals (1/D_S) I exactly.
 *
 * Works per subset on complement groups: two different rows in a group produce an
 * off-diagonal entry, and the diagonal entry for a is the sum over groups of the squared
 * number of rows with projection a. `stop_at_first` ends the walk at the first failure.
 */
inline UniformityReport verify_k_uniform(const MixedArray &a, std::size_t k, bool stop_at_first = false) {
    if (k < 1 || k >= a.cols())
        throw ParameterError("uniformity needs 1 <= k < N, got k=" + std::to_string(k) + " with N=" + std::to_string(a.cols()));
    UniformityReport report;
    report.k = k;
    const std::uint64_t r = a.runs();
    detail::ProjectionHasher hasher(a);
    std::vector<std::size_t> order;
    std::vector<std::uint64_t> hashes;
    std::vector<std::uint64_t> diagonal;
    std::vector<std::uint64_t> in_group;

    for_each_subset(a.cols(), k, [&](std::span<const std::size_t> subset) {
        ++report.subsets_checked;
        std::uint64_t dim = 1;
        for (std::size_t c : subset) dim = saturating_mul(dim, a.level(c));
        std::optional<UniformityFailure> failure;
        auto fail = [&](std::string kind, std::uint64_t x, std::uint64_t y, std::uint64_t value, Fraction expected) {
            if (!failure) failure = UniformityFailure{{subset.begin(), subset.end()}, std::move(kind), x, y, Fraction::of(value, r), expected};
        };
        if (dim > r || r % dim != 0) {
            // r rows cannot put weight exactly 1/D_S on every diagonal entry
            fail("diagonal", 0, 0, 0, Fraction::of(1, dim));
        } else {
            diagonal.assign(dim, 0);
            detail::for_each_complement_group(a, hasher, subset, order, hashes, [&](std::span<const std::size_t> group) {
                if (failure) return;
                const std::uint64_t first = detail::subset_index(a, group[0], subset);
                if (group.size() == 1) {
                    ++diagonal[first];
                    return;
                }
                in_group.clear();
                for (std::size_t x : group) in_group.push_back(detail::subset_index(a, x, subset));
                std::sort(in_group.begin(), in_group.end());
                if (in_group.front() != in_group.back()) {
                    // two rows agree outside S but differ inside: rho_S(a, b) > 0 with a != b
                    std::uint64_t count = 0;
                    for (std::size_t x = 0; x < in_group.size(); ++x)
                        for (std::size_t y = 0; y < in_group.size(); ++y)
                            count += in_group[x] == in_group.front() && in_group[y] == in_group.back();
                    fail("off-diagonal", in_group.front(), in_group.back(), count, Fraction{0, 1});
                    return;
                }
                diagonal[first] += static_cast<std::uint64_t>(group.size()) * group.size();
            });
            if (!failure) {
                const std::uint64_t target = r / dim;
                for (std::uint64_t idx = 0; idx < dim; ++idx)
                    if (diagonal[idx] != target) {
                        fail("diagonal", idx, idx, diagonal[idx], Fraction::of(1, dim));
                        break;
                    }
            }
        }
        if (failure) {
            if (!report.first_failure) report.first_failure = std::move(failure);
            return !stop_at_first;
        }
        ++report.subsets_passed;
        return true;
    });
    report.holds = !report.first_failure;
    return report;
}

/// AME: k-uniform with k = floor(N / 2).
inline bool is_ame(const MixedArray &a) {
    if (a.cols() < 2) throw ParameterError("AME needs at least two parties");
    return verify_k_uniform(a, a.cols() / 2, true).holds;
}

inline Json to_json(const UniformityFailure &f) {
    return Json{{"subset", f.subset},       {"kind", f.kind},         {"row", f.row_index},
                {"column", f.col_index},    {"value", f.value.str()}, {"expected", f.expected.str()}};
}

inline Json to_json(const UniformityReport &u) {
    Json j;
    j["schema"] = "oakit-report-v1";
    j["kind"] = "uniformity";
    j["k"] = u.k;
    j["holds"] = u.holds;
    j["subsets_checked"] = u.subsets_checked;
    j["subsets_passed"] = u.subsets_passed;
    j["first_failure"] = u.first_failure ? to_json(*u.first_failure) : Json(nullptr);
    return j;
}

inline Json to_json(const DensityMatrix &rho) {
    Json entries = Json::array();
    for (const auto &[ab, n] : rho.numerators)
        entries.push_back(Json{{"row", ab.first}, {"column", ab.second}, {"value", Fraction::of(n, rho.denominator).str()}});
    return Json{{"subset", rho.subset}, {"dimension", rho.dimension}, {"trace", rho.trace().str()}, {"entries", entries}};
}

}  // namespace oakit
