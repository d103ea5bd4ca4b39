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
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "oakit/core/error.hpp"

namespace oakit {

using Symbol = std::uint32_t;
using Level = std::uint32_t;

/**
 * An r x N matrix of symbols where column j draws from {0, ..., d_j - 1}.
 *
 * This is the carrier for orthogonal arrays, mixed orthogonal arrays, difference
 * schemes and the kets of a uniform superposition. Cells are stored row-major.
 */
class MixedArray {
   public:
    MixedArray(std::vector<Level> levels, std::vector<Symbol> cells) : levels_(std::move(levels)), cells_(std::move(cells)) {
        if (levels_.empty()) throw ParameterError("array must have at least one column");
        if (cells_.empty() || cells_.size() % levels_.size() != 0)
            throw ParameterError("cell count " + std::to_string(cells_.size()) + " is not a positive multiple of " +
                                 std::to_string(levels_.size()) + " columns");
        for (Level d : levels_)
            if (d < 2) throw ParameterError("column level must be at least 2, got " + std::to_string(d));
        const std::size_t n = levels_.size();
        for (std::size_t idx = 0; idx < cells_.size(); ++idx) {
            if (cells_[idx] >= levels_[idx % n])
                throw ParameterError("cell (" + std::to_string(idx / n) + "," + std::to_string(idx % n) + ") = " +
                                     std::to_string(cells_[idx]) + " exceeds level " + std::to_string(levels_[idx % n]));
        }
    }

    static MixedArray from_rows(std::vector<Level> levels, const std::vector<std::vector<Symbol>> &rows) {
        std::vector<Symbol> cells;
        cells.reserve(rows.size() * levels.size());
        for (const auto &row : rows) {
            if (row.size() != levels.size())
                throw ParameterError("row has " + std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(levels.size()));
            cells.insert(cells.end(), row.begin(), row.end());
        }
        return MixedArray(std::move(levels), std::move(cells));
    }

    /// Levels inferred as (max symbol + 1), floored at 2.
    static MixedArray infer_levels(const std::vector<std::vector<Symbol>> &rows) {
        if (rows.empty()) throw ParameterError("no rows");
        std::vector<Level> levels(rows.front().size(), 2);
        for (const auto &row : rows)
            for (std::size_t j = 0; j < std::min(row.size(), levels.size()); ++j) levels[j] = std::max<Level>(levels[j], row[j] + 1);
        return from_rows(std::move(levels), rows);
    }

    std::size_t runs() const noexcept { return cells_.size() / levels_.size(); }
    std::size_t cols() const noexcept { return levels_.size(); }

    Level level(std::size_t j) const { return levels_[j]; }
    std::span<const Level> levels() const noexcept { return levels_; }

    Symbol operator()(std::size_t i, std::size_t j) const { return cells_[i * levels_.size() + j]; }
    std::span<const Symbol> row(std::size_t i) const { return {cells_.data() + i * levels_.size(), levels_.size()}; }
    std::span<const Symbol> cells() const noexcept { return cells_; }

    bool is_symmetric() const {
        return std::all_of(levels_.begin(), levels_.end(), [&](Level d) { return d == levels_.front(); });
    }

    bool operator==(const MixedArray &) const = default;

   private:
    std::vector<Level> levels_;
    std::vector<Symbol> cells_;
};

/// The array with a single column (0, 1, ..., d-1)^T.
inline MixedArray index_column(Level d) {
    std::vector<Symbol> cells(d);
    for (Level s = 0; s < d; ++s) cells[s] = s;
    return MixedArray({d}, std::move(cells));
}

inline MixedArray select_columns(const MixedArray &a, std::span<const std::size_t> columns) {
    if (columns.empty()) throw ParameterError("cannot select zero columns");
    std::vector<Level> levels;
    levels.reserve(columns.size());
    for (std::size_t c : columns) {
        if (c >= a.cols()) throw ParameterError("column index " + std::to_string(c) + " out of range");
        levels.push_back(a.level(c));
    }
    std::vector<Symbol> cells;
    cells.reserve(a.runs() * columns.size());
    for (std::size_t i = 0; i < a.runs(); ++i)
        for (std::size_t c : columns) cells.push_back(a(i, c));
    return MixedArray(std::move(levels), std::move(cells));
}

inline MixedArray select_rows(const MixedArray &a, std::span<const std::size_t> rows) {
    if (rows.empty()) throw ParameterError("cannot select zero rows");
    std::vector<Symbol> cells;
    cells.reserve(rows.size() * a.cols());
    for (std::size_t i : rows) {
        if (i >= a.runs()) throw ParameterError("row index " + std::to_string(i) + " out of range");
        auto r = a.row(i);
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return MixedArray(std::vector<Level>(a.levels().begin(), a.levels().end()), std::move(cells));
}

/// Removes the given columns (duplicates ignored); the remaining columns keep their order.
inline MixedArray delete_columns(const MixedArray &a, std::span<const std::size_t> indices) {
    std::vector<bool> drop(a.cols(), false);
    for (std::size_t c : indices) {
        if (c >= a.cols()) throw ParameterError("column index " + std::to_string(c) + " out of range");
        drop[c] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!drop[c]) keep.push_back(c);
    if (keep.empty()) throw ParameterError("cannot delete every column");
    return select_columns(a, keep);
}

inline MixedArray concat_columns(const MixedArray &a, const MixedArray &b) {
    if (a.runs() != b.runs())
        throw ParameterError("run-count mismatch: " + std::to_string(a.runs()) + " vs " + std::to_string(b.runs()));
    std::vector<Level> levels(a.levels().begin(), a.levels().end());
    levels.insert(levels.end(), b.levels().begin(), b.levels().end());
    std::vector<Symbol> cells;
    cells.reserve(a.cells().size() + b.cells().size());
    for (std::size_t i = 0; i < a.runs(); ++i) {
        auto ra = a.row(i);
        auto rb = b.row(i);
        cells.insert(cells.end(), ra.begin(), ra.end());
        cells.insert(cells.end(), rb.begin(), rb.end());
    }
    return MixedArray(std::move(levels), std::move(cells));
}

/// Vertical juxtaposition; all blocks must share the level profile.
inline MixedArray stack_rows(std::span<const MixedArray> blocks) {
    if (blocks.empty()) throw ParameterError("nothing to stack");
    std::vector<Level> levels(blocks.front().levels().begin(), blocks.front().levels().end());
    std::vector<Symbol> cells;
    for (const auto &b : blocks) {
        if (!std::equal(b.levels().begin(), b.levels().end(), levels.begin(), levels.end()))
            throw ParameterError("stacked blocks must share column count and levels");
        cells.insert(cells.end(), b.cells().begin(), b.cells().end());
    }
    return MixedArray(std::move(levels), std::move(cells));
}

/// Rows sorted lexicographically; used for multiset-of-rows comparisons.
inline MixedArray sorted_rows(const MixedArray &a) {
    std::vector<std::size_t> order(a.runs());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        auto rx = a.row(x);
        auto ry = a.row(y);
        return std::lexicographical_compare(rx.begin(), rx.end(), ry.begin(), ry.end());
    });
    return select_rows(a, order);
}

inline bool same_row_multiset(const MixedArray &a, const MixedArray &b) { return sorted_rows(a) == sorted_rows(b); }

/// Exponent notation for a level profile, e.g. {3,2,2,2,2} -> "3^1 2^4" (levels descending).
inline std::string profile_string(std::span<const Level> levels, const std::string &separator = " ") {
    std::map<Level, std::size_t, std::greater<>> counts;
    for (Level d : levels) ++counts[d];
    std::string out;
    for (const auto &[d, n] : counts) {
        if (!out.empty()) out += separator;
        out += std::to_string(d) + "^" + std::to_string(n);
    }
    return out;
}

}  // namespace oakit
