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

#include <vector>

#include "oakit/algebra/difference_scheme.hpp"
#include "oakit/core/strength.hpp"

namespace oakit {

/// Rows of `parent` split into equal blocks, each of which has strength 1 on its own.
struct OrthogonalPartition {
    MixedArray parent;
    std::vector<std::vector<std::size_t>> blocks;

    std::size_t block_count() const noexcept { return blocks.size(); }
    MixedArray block(std::size_t i) const { return select_rows(parent, blocks.at(i)); }
};

/// Throws ParameterError unless the blocks partition the rows into equal strength-1 pieces.
inline void validate_partition(const OrthogonalPartition &p) {
    if (p.blocks.empty()) throw ParameterError("partition has no blocks");
    std::vector<bool> seen(p.parent.runs(), false);
    const std::size_t size = p.blocks.front().size();
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (p.blocks[b].size() != size) throw ParameterError("partition blocks differ in size");
        for (std::size_t i : p.blocks[b]) {
            if (i >= p.parent.runs() || seen[i]) throw ParameterError("partition blocks overlap or leave the row range");
            seen[i] = true;
        }
        if (!verify_strength(p.block(b), 1).holds)
            throw ParameterError("partition block " + std::to_string(b) + " is not of strength 1");
    }
    if (size * p.blocks.size() != p.parent.runs()) throw ParameterError("partition blocks do not cover every row");
}

/// Parent D (+) (d); block i is a_i (+) (d), the d rows generated by scheme row i.
inline OrthogonalPartition partition_from_scheme(const DifferenceScheme &ds) {
    OrthogonalPartition p{ds.expanded(), {}};
    const std::size_t d = ds.order();
    for (std::size_t i = 0; i < ds.rows(); ++i) {
        std::vector<std::size_t> block(d);
        for (std::size_t x = 0; x < d; ++x) block[x] = i * d + x;
        p.blocks.push_back(std::move(block));
    }
    validate_partition(p);
    return p;
}

/// As above for a raw matrix; a matrix that is not a scheme of strength t is a precondition error.
inline OrthogonalPartition partition_from_scheme(const MixedArray &matrix, const AdditiveGroup &group, std::size_t t) {
    if (!is_difference_scheme(matrix, group, t).holds)
        throw ParameterError("matrix is not a difference scheme of strength " + std::to_string(t));
    return partition_from_scheme(DifferenceScheme(matrix, group, t));
}

}  // namespace oakit
