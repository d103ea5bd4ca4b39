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
#include <vector>

#include "oakit/algebra/group.hpp"
#include "oakit/core/mixed_array.hpp"

namespace oakit {

/// A (x) 1_r: every row of `a` repeated r times in place.
inline MixedArray repeat_rows_each(const MixedArray &a, std::size_t r) {
    if (r == 0) throw ParameterError("repeat count must be positive");
    std::vector<Symbol> cells;
    cells.reserve(a.cells().size() * r);
    for (std::size_t i = 0; i < a.runs(); ++i)
        for (std::size_t t = 0; t < r; ++t) cells.insert(cells.end(), a.row(i).begin(), a.row(i).end());
    return MixedArray({a.levels().begin(), a.levels().end()}, std::move(cells));
}

/// 1_r (x) A: the whole of `a` stacked r times.
inline MixedArray tile_rows(const MixedArray &a, std::size_t r) {
    if (r == 0) throw ParameterError("tile count must be positive");
    std::vector<Symbol> cells;
    cells.reserve(a.cells().size() * r);
    for (std::size_t t = 0; t < r; ++t) cells.insert(cells.end(), a.cells().begin(), a.cells().end());
    return MixedArray({a.levels().begin(), a.levels().end()}, std::move(cells));
}

enum class StackMode {
    /// (A_[1..u], r): stack of A_i (x) 1_r.
    RepeatEach,
    /// (r, A_[1..u]): stack of 1_r (x) A_i.
    Tile,
};

inline MixedArray partition_stack(std::span<const MixedArray> blocks, std::size_t r, StackMode mode) {
    if (blocks.empty()) throw ParameterError("no blocks to stack");
    std::vector<MixedArray> parts;
    parts.reserve(blocks.size());
    for (const auto &b : blocks) parts.push_back(mode == StackMode::RepeatEach ? repeat_rows_each(b, r) : tile_rows(b, r));
    return stack_rows(parts);
}

namespace detail {

inline void require_group_levels(const MixedArray &a, const AdditiveGroup &g, const char *what) {
    for (Level d : a.levels())
        if (d != g.order())
            throw ParameterError(std::string(what) + " has a column with " + std::to_string(d) + " levels; group order is " +
                                 std::to_string(g.order()));
}

}  // namespace detail

/**
 * Kronecker sum A (+) B over a group: block (i, j) of the result is a(i,j) + B, so row
 * i * r_b + x, column j * N_b + y holds a(i,j) + b(x,y).
 */
inline MixedArray kronecker_sum(const MixedArray &a, const MixedArray &b, const AdditiveGroup &group) {
    detail::require_group_levels(a, group, "left operand");
    detail::require_group_levels(b, group, "right operand");
    const std::size_t rows = a.runs() * b.runs(), cols = a.cols() * b.cols();
    std::vector<Symbol> cells(rows * cols);
    for (std::size_t i = 0; i < a.runs(); ++i)
        for (std::size_t x = 0; x < b.runs(); ++x)
            for (std::size_t j = 0; j < a.cols(); ++j)
                for (std::size_t y = 0; y < b.cols(); ++y)
                    cells[(i * b.runs() + x) * cols + j * b.cols() + y] = group.add(a(i, j), b(x, y));
    return MixedArray(std::vector<Level>(cols, group.order()), std::move(cells));
}

/// D (+) (d): row i * d + x holds d_i + x, i.e. each row shifted by every group element.
inline MixedArray expand(const MixedArray &scheme, const AdditiveGroup &group) {
    return kronecker_sum(scheme, index_column(group.order()), group);
}

/// A (+) 0_d: adding the zero column leaves values alone, so this is row repetition for any level profile.
inline MixedArray zero_extend(const MixedArray &a, Level d) { return repeat_rows_each(a, d); }

/**
 * Symbol-pairing product: row i * r_b + j, column c holds a(i,c) * d_b(c) + b(j,c) over
 * d_a(c) * d_b(c) levels. Only the first min(N_a, N_b) columns are used.
 */
inline MixedArray product_construction(const MixedArray &a, const MixedArray &b) {
    const std::size_t n = std::min(a.cols(), b.cols());
    std::vector<Level> levels(n);
    for (std::size_t c = 0; c < n; ++c) levels[c] = a.level(c) * b.level(c);
    std::vector<Symbol> cells;
    cells.reserve(a.runs() * b.runs() * n);
    for (std::size_t i = 0; i < a.runs(); ++i)
        for (std::size_t j = 0; j < b.runs(); ++j)
            for (std::size_t c = 0; c < n; ++c) cells.push_back(a(i, c) * b.level(c) + b(j, c));
    return MixedArray(std::move(levels), std::move(cells));
}

/// [A (x) 1_{r_b}, 1_{r_a} (x) B]: every row of `a` paired with every row of `b`.
inline MixedArray direct_product(const MixedArray &a, const MixedArray &b) {
    return concat_columns(repeat_rows_each(a, b.runs()), tile_rows(b, a.runs()));
}

}  // namespace oakit
