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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oakit/constructions/feasibility.hpp"
#include "oakit/constructions/partition.hpp"
#include "oakit/core/distance.hpp"
#include "oakit/core/strength.hpp"

namespace oakit {

struct SearchSpec {
    std::size_t runs = 0;
    std::vector<Level> levels;
    std::size_t strength = 0;
    /// Required minimal Hamming distance; 0 means no floor.
    std::size_t min_distance = 0;
    /// Cell assignments before giving up.
    std::uint64_t node_budget = 50'000'000;
    /// Row 0 zero, first-occurrence symbols, sorted rows, sorted equal-level columns.
    bool symmetry_breaking = true;
};

enum class SearchOutcome { Found, NotFoundWithinBudget, ProvedNonexistent, Infeasible };

inline std::string to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Found: return "Found";
        case SearchOutcome::NotFoundWithinBudget: return "NotFoundWithinBudget";
        case SearchOutcome::ProvedNonexistent: return "ProvedNonexistent";
        case SearchOutcome::Infeasible: return "Infeasible";
    }
    return "?";
}

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::NotFoundWithinBudget;
    std::optional<MixedArray> array;
    std::uint64_t nodes = 0;
    /// For Infeasible: the column subset whose level product does not divide r.
    std::string detail;
};

namespace detail {

/**
 * Column-major backtracking over an r x N grid.
 *
 * Cell (i, j) takes values in ascending order. Strength is enforced with one counter per
 * (prefix subset S of size min(k - 1, j), tuple on S, symbol in j), capped at
 * r / (prod_S d * d_j); with the totals fixed by earlier columns the caps force equality.
 * Distance is enforced on the pair matrix: a pair (a, i) at distance x after column j dies
 * when x + (N - 1 - j) < w.
 *
 * Symmetry breaking keeps the column-major lexicographic minimum of each orbit under row
 * permutations, symbol relabelling per column and permutations of equal-level columns:
 * symbols appear in first-occurrence order down each column, rows are sorted and each
 * column is >= the previous column of the same level.
 */
class Backtracker {
   public:
    Backtracker(const SearchSpec &spec, std::function<bool(const MixedArray &)> on_solution)
        : spec_(spec), r_(spec.runs), n_(spec.levels.size()), on_solution_(std::move(on_solution)) {
        cells_.assign(r_ * n_, 0);
        pair_dist_.assign(r_ * r_, 0);
        prev_same_.assign(n_, SIZE_MAX);
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t p = j; p-- > 0;)
                if (spec.levels[p] == spec.levels[j]) {
                    prev_same_[j] = p;
                    break;
                }
            std::vector<Counter> cc;
            if (spec.strength > 0) {
                for_each_subset(j, std::min(spec.strength - 1, j), [&](std::span<const std::size_t> sub) {
                    Counter c;
                    c.subset.assign(sub.begin(), sub.end());
                    std::uint64_t product = spec.levels[j];
                    for (std::size_t col : sub) product *= spec.levels[col];
                    c.cap = static_cast<std::uint32_t>(r_ / product);
                    c.counts.assign(product, 0);
                    cc.push_back(std::move(c));
                    return true;
                });
            }
            counters_.push_back(std::move(cc));
        }
        row_tied_.assign(n_ + 1, std::vector<std::uint8_t>(r_, 1));
        col_tied_.assign(n_, std::vector<std::uint8_t>(r_ + 1, 1));
        max_seen_.assign(n_, std::vector<int>(r_ + 1, -1));
    }

    /// Found / NotFoundWithinBudget / ProvedNonexistent (the walk finished).
    SearchOutcome run() {
        fill(0, 0);
        if (found_) return SearchOutcome::Found;
        return budget_hit_ ? SearchOutcome::NotFoundWithinBudget : SearchOutcome::ProvedNonexistent;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool budget_hit() const { return budget_hit_; }

   private:
    struct Counter {
        std::vector<std::size_t> subset;
        std::uint32_t cap = 0;
        std::vector<std::uint32_t> counts;
    };

    std::size_t counter_index(const Counter &c, std::size_t i, std::size_t j, Symbol v) const {
        std::size_t idx = 0;
        for (std::size_t col : c.subset) idx = idx * spec_.levels[col] + cells_[i * n_ + col];
        return idx * spec_.levels[j] + v;
    }

    // Returns false to unwind the whole search.
    bool fill(std::size_t i, std::size_t j) {
        if (j == n_) {
            found_ = true;
            return on_solution_(MixedArray(spec_.levels, cells_));
        }
        if (i == r_) {
            auto &next = row_tied_[j + 1];
            for (std::size_t t = 1; t < r_; ++t)
                next[t] = row_tied_[j][t] && cells_[(t - 1) * n_ + j] == cells_[t * n_ + j];
            return fill(0, j + 1);
        }

        Symbol lo = 0;
        Symbol hi = spec_.levels[j] - 1;
        if (spec_.symmetry_breaking) {
            hi = std::min<Symbol>(hi, static_cast<Symbol>(max_seen_[j][i] + 1));
            if (i > 0 && row_tied_[j][i]) lo = std::max(lo, cells_[(i - 1) * n_ + j]);
            const std::size_t p = prev_same_[j];
            if (p != SIZE_MAX && col_tied_[j][i]) lo = std::max(lo, cells_[i * n_ + p]);
        }
        for (Symbol v = lo; v <= hi; ++v) {
            if (nodes_ >= spec_.node_budget) {
                budget_hit_ = true;
                return false;
            }
            ++nodes_;
            if (!place(i, j, v)) continue;
            const bool go_on = fill(i + 1, j);
            unplace(i, j, v);
            if (!go_on) return false;
        }
        return true;
    }

    bool place(std::size_t i, std::size_t j, Symbol v) {
        auto &cc = counters_[j];
        std::size_t done = 0;
        for (; done < cc.size(); ++done) {
            auto &slot = cc[done].counts[counter_index(cc[done], i, j, v)];
            if (slot >= cc[done].cap) break;
            ++slot;
        }
        if (done < cc.size()) {
            release(i, j, v, done);
            return false;
        }
        if (spec_.min_distance > 0) {
            const std::size_t remaining = n_ - 1 - j;
            for (std::size_t a = 0; a < i; ++a) {
                if (pair_dist_[a * r_ + i] + (cells_[a * n_ + j] != v) + remaining < spec_.min_distance) {
                    release(i, j, v, cc.size());
                    return false;
                }
            }
            for (std::size_t a = 0; a < i; ++a) pair_dist_[a * r_ + i] += (cells_[a * n_ + j] != v);
        }
        cells_[i * n_ + j] = v;
        max_seen_[j][i + 1] = std::max(max_seen_[j][i], static_cast<int>(v));
        const std::size_t p = prev_same_[j];
        if (p != SIZE_MAX) col_tied_[j][i + 1] = col_tied_[j][i] && cells_[i * n_ + p] == v;
        return true;
    }

    void unplace(std::size_t i, std::size_t j, Symbol v) {
        release(i, j, v, counters_[j].size());
        if (spec_.min_distance > 0)
            for (std::size_t a = 0; a < i; ++a) pair_dist_[a * r_ + i] -= (cells_[a * n_ + j] != v);
        cells_[i * n_ + j] = 0;
    }

    void release(std::size_t i, std::size_t j, Symbol v, std::size_t upto) {
        auto &cc = counters_[j];
        for (std::size_t q = 0; q < upto; ++q) --cc[q].counts[counter_index(cc[q], i, j, v)];
    }

    const SearchSpec &spec_;
    std::size_t r_, n_;
    std::function<bool(const MixedArray &)> on_solution_;
    std::vector<Symbol> cells_;
    std::vector<std::uint32_t> pair_dist_;
    std::vector<std::vector<Counter>> counters_;
    std::vector<std::size_t> prev_same_;
    // row_tied_[j][i]: rows i-1 and i agree on columns 0..j-1.
    std::vector<std::vector<std::uint8_t>> row_tied_;
    // col_tied_[j][i]: column j equals its previous same-level column on rows 0..i-1.
    std::vector<std::vector<std::uint8_t>> col_tied_;
    // max_seen_[j][i]: largest symbol in rows 0..i-1 of column j.
    std::vector<std::vector<int>> max_seen_;
    std::uint64_t nodes_ = 0;
    bool found_ = false;
    bool budget_hit_ = false;
};

/// First k-subset whose level product does not divide r, if any.
inline std::optional<std::vector<std::size_t>> divisibility_failure(std::size_t r, const std::vector<Level> &levels, std::size_t k) {
    std::optional<std::vector<std::size_t>> bad;
    for_each_subset(levels.size(), k, [&](std::span<const std::size_t> s) {
        std::uint64_t product = 1;
        for (std::size_t c : s) product = saturating_mul(product, levels[c]);
        if (product > r || r % product != 0) {
            bad = std::vector<std::size_t>(s.begin(), s.end());
            return false;
        }
        return true;
    });
    return bad;
}

inline void check_spec(const SearchSpec &spec) {
    if (spec.runs == 0) throw ParameterError("search needs a positive run count");
    if (spec.levels.empty()) throw ParameterError("search needs at least one column");
    for (Level d : spec.levels)
        if (d < 2) throw ParameterError("levels must be at least 2");
    if (spec.strength > spec.levels.size()) throw ParameterError("strength exceeds the column count");
    if (spec.min_distance > spec.levels.size()) throw ParameterError("minimal distance exceeds the column count");
}

}  // namespace detail

/**
 * Finds the first array (in column-major lexicographic order, among canonical forms when
 * symmetry breaking is on) with the given runs, levels, strength and distance floor.
 * A found array is re-checked by verify_strength and min_distance before it is returned.
 */
inline SearchResult search_moa(const SearchSpec &spec) {
    detail::check_spec(spec);
    SearchResult result;
    if (auto bad = detail::divisibility_failure(spec.runs, spec.levels, spec.strength)) {
        result.outcome = SearchOutcome::Infeasible;
        std::string cols;
        std::uint64_t product = 1;
        for (std::size_t c : *bad) {
            cols += (cols.empty() ? "" : ",") + std::to_string(c);
            product = saturating_mul(product, spec.levels[c]);
        }
        result.detail = "level product " + std::to_string(product) + " of columns {" + cols + "} does not divide r=" +
                        std::to_string(spec.runs);
        return result;
    }
    detail::Backtracker bt(spec, [&](const MixedArray &a) {
        result.array = a;
        return false;
    });
    result.outcome = bt.run();
    result.nodes = bt.nodes();
    if (result.array) {
        if (spec.strength > 0 && !verify_strength(*result.array, spec.strength).holds)
            throw VerificationError("search produced an array that fails strength " + std::to_string(spec.strength));
        if (spec.min_distance > 0 && min_distance(*result.array) < spec.min_distance)
            throw VerificationError("search produced an array below the distance floor");
    }
    return result;
}

struct EnumerationResult {
    std::vector<MixedArray> arrays;
    std::uint64_t nodes = 0;
    bool complete = false;
};

/// Every array the search accepts, in visiting order. Meant for tiny cases.
inline EnumerationResult search_all(const SearchSpec &spec) {
    detail::check_spec(spec);
    EnumerationResult out;
    if (detail::divisibility_failure(spec.runs, spec.levels, spec.strength)) {
        out.complete = true;
        return out;
    }
    detail::Backtracker bt(spec, [&](const MixedArray &a) {
        out.arrays.push_back(a);
        return true;
    });
    bt.run();
    out.nodes = bt.nodes();
    out.complete = !bt.budget_hit();
    return out;
}

/**
 * Splits the rows into `block_count` equal blocks of strength 1. Rows are assigned in
 * order and a row may open only the first empty block, so block order is canonical.
 */
inline std::optional<OrthogonalPartition> search_partition(const MixedArray &array, std::size_t block_count,
                                                           std::uint64_t node_budget = 10'000'000) {
    const std::size_t r = array.runs();
    if (block_count == 0 || r % block_count != 0)
        throw ParameterError("run count " + std::to_string(r) + " is not divisible by " + std::to_string(block_count) + " blocks");
    const std::size_t size = r / block_count;
    for (std::size_t c = 0; c < array.cols(); ++c)
        if (size % array.level(c) != 0)
            throw ParameterError("block size " + std::to_string(size) + " is not divisible by level " +
                                 std::to_string(array.level(c)) + " of column " + std::to_string(c));

    // counts[b][offset(c) + s]: rows in block b with symbol s in column c.
    std::vector<std::size_t> offset(array.cols() + 1, 0);
    for (std::size_t c = 0; c < array.cols(); ++c) offset[c + 1] = offset[c] + array.level(c);
    std::vector<std::vector<std::uint32_t>> counts(block_count, std::vector<std::uint32_t>(offset.back(), 0));
    std::vector<std::size_t> fill(block_count, 0), owner(r, 0);
    std::uint64_t nodes = 0;

    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == r) return true;
        for (std::size_t b = 0; b < block_count; ++b) {
            if (++nodes > node_budget) return false;
            if (fill[b] == size) continue;
            bool ok = true;
            for (std::size_t c = 0; c < array.cols() && ok; ++c)
                ok = counts[b][offset[c] + array(i, c)] < size / array.level(c);
            if (ok) {
                for (std::size_t c = 0; c < array.cols(); ++c) ++counts[b][offset[c] + array(i, c)];
                ++fill[b];
                owner[i] = b;
                if (assign(i + 1)) return true;
                --fill[b];
                for (std::size_t c = 0; c < array.cols(); ++c) --counts[b][offset[c] + array(i, c)];
            }
            if (fill[b] == 0) break;  // later empty blocks are interchangeable with this one
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;

    OrthogonalPartition p{array, std::vector<std::vector<std::size_t>>(block_count)};
    for (std::size_t i = 0; i < r; ++i) p.blocks[owner[i]].push_back(i);
    validate_partition(p);
    return p;
}

enum class NonexistenceVerdict { ProvedNonexistent, FoundCounterexample, Inconclusive };

inline std::string to_string(NonexistenceVerdict v) {
    switch (v) {
        case NonexistenceVerdict::ProvedNonexistent: return "ProvedNonexistent";
        case NonexistenceVerdict::FoundCounterexample: return "FoundCounterexample";
        case NonexistenceVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct NonexistenceResult {
    NonexistenceVerdict verdict = NonexistenceVerdict::Inconclusive;
    std::optional<MixedArray> counterexample;
    std::uint64_t nodes = 0;
    std::string reason;
};

/**
 * Bounded attempt to show that no IrMOA(r, N, levels, k) exists: strength k and MD >= k + 1.
 * Divisibility and, for five columns at strength 2, the counting predicate are tried first.
 */
inline NonexistenceResult exhaustive_nonexistence(SearchSpec spec, std::size_t irredundant_k) {
    if (irredundant_k < 1 || irredundant_k >= spec.levels.size())
        throw ParameterError("irredundancy needs 1 <= k < N");
    spec.min_distance = std::max(spec.min_distance, irredundant_k + 1);
    detail::check_spec(spec);
    NonexistenceResult out;
    if (spec.levels.size() == 5 && spec.strength == 2 && irredundant_k == 2) {
        auto f = feasibility_5col(spec.levels);
        if (f.verdict == Feasibility::Impossible) {
            out.verdict = NonexistenceVerdict::ProvedNonexistent;
            out.reason = "counting: " + f.reason;
            return out;
        }
    }
    auto found = search_moa(spec);
    out.nodes = found.nodes;
    switch (found.outcome) {
        case SearchOutcome::Found:
            out.verdict = NonexistenceVerdict::FoundCounterexample;
            out.counterexample = found.array;
            out.reason = "search found an array";
            break;
        case SearchOutcome::Infeasible:
            out.verdict = NonexistenceVerdict::ProvedNonexistent;
            out.reason = "divisibility: " + found.detail;
            break;
        case SearchOutcome::ProvedNonexistent:
            out.verdict = NonexistenceVerdict::ProvedNonexistent;
            out.reason = "search space exhausted after " + std::to_string(found.nodes) + " nodes";
            break;
        case SearchOutcome::NotFoundWithinBudget:
            out.verdict = NonexistenceVerdict::Inconclusive;
            out.reason = "node budget of " + std::to_string(spec.node_budget) + " exhausted";
            break;
    }
    return out;
}

}  // namespace oakit
