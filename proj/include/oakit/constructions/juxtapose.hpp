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

#include <numeric>
#include <vector>

#include "oakit/algebra/difference_scheme.hpp"
#include "oakit/algebra/stacking.hpp"
#include "oakit/constructions/certificate.hpp"
#include "oakit/constructions/partition.hpp"

namespace oakit {

/**
 * C = [A (+) 0_d, B (+) (d)] for a strength-2 array A and a square scheme B with r rows.
 * The certificate predicts MD(C) = min{r, MD(A) + r - r/d} exactly.
 */
inline Construction lemma1_juxtapose(const MixedArray &a, const DifferenceScheme &b) {
    if (a.runs() != b.rows())
        throw ParameterError("row mismatch: array has " + std::to_string(a.runs()) + " rows, scheme has " +
                             std::to_string(b.rows()));
    if (b.rows() != b.cols()) throw ParameterError("scheme must be square, got " + b.label());
    if (a.cols() < 2 || !verify_strength(a, 2).holds) throw ParameterError("left operand must have strength 2");
    const std::size_t r = b.rows(), d = b.order();
    MixedArray c = concat_columns(zero_extend(a, static_cast<Level>(d)), b.expanded());
    auto cert = claim("lemma1_juxtapose", c, 2);
    const std::size_t w = min_distance(a);
    cert.predicted = PredictedDistance{"min{r, MD(A) + r - r/d} with r=" + std::to_string(r) + ", d=" + std::to_string(d) +
                                           ", MD(A)=" + std::to_string(w),
                                       std::min(r, w + r - r / d), true};
    return {std::move(c), std::move(cert)};
}

/**
 * M = (1_{h/u} (x) (A_[1..u], d''), 1_{h/v} (x) (d', B_[1..v])) with h = lcm(u, v).
 *
 * Both inputs must be symmetric arrays of strength >= 3 with strength-1 partitions into
 * u <= v blocks of d' and d'' rows. The certificate carries the case-dependent MD bound.
 */
inline Construction lemma3_juxtapose(const OrthogonalPartition &pa, const OrthogonalPartition &pb) {
    validate_partition(pa);
    validate_partition(pb);
    const MixedArray &a = pa.parent;
    const MixedArray &b = pb.parent;
    if (!a.is_symmetric() || !b.is_symmetric()) throw ParameterError("both operands must be symmetric OAs");
    const std::size_t u = pa.block_count(), v = pb.block_count();
    if (u > v) throw ParameterError("need u <= v, got u=" + std::to_string(u) + ", v=" + std::to_string(v));
    const Level d1 = a.level(0), d2 = b.level(0);
    if (a.runs() != d1 * u || b.runs() != d2 * v) throw ParameterError("blocks must have d' and d'' rows respectively");
    if (a.cols() < 3 || !verify_strength(a, 3).holds) throw ParameterError("left operand must have strength >= 3");
    if (b.cols() < 3 || !verify_strength(b, 3).holds) throw ParameterError("right operand must have strength >= 3");

    const std::size_t h = std::lcm(u, v);
    std::vector<MixedArray> ablocks, bblocks;
    for (std::size_t i = 0; i < u; ++i) ablocks.push_back(pa.block(i));
    for (std::size_t j = 0; j < v; ++j) bblocks.push_back(pb.block(j));
    MixedArray left = tile_rows(partition_stack(ablocks, d2, StackMode::RepeatEach), h / u);
    MixedArray right = tile_rows(partition_stack(bblocks, d1, StackMode::Tile), h / v);
    MixedArray m = concat_columns(left, right);

    auto cert = claim("lemma3_juxtapose", m, 3);
    const std::size_t w1 = min_distance(a), w2 = min_distance(b), n1 = a.cols(), n2 = b.cols();
    const std::string vals = " with w1=" + std::to_string(w1) + ", w2=" + std::to_string(w2) + ", N'=" + std::to_string(n1) +
                             ", N''=" + std::to_string(n2);
    if (u == v)
        cert.predicted = PredictedDistance{"min{w1 + w2, N', N''} (u = v)" + vals, std::min({w1 + w2, n1, n2}), false};
    else if (v % u == 0)
        cert.predicted = PredictedDistance{"min{N', w2} (u | v, u < v)" + vals, std::min(n1, w2), false};
    else
        cert.predicted = PredictedDistance{"min{w1, w2} (u does not divide v)" + vals, std::min(w1, w2), false};
    return {std::move(m), std::move(cert)};
}

}  // namespace oakit
