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

#include "oakit/algebra/finite_field.hpp"
#include "oakit/algebra/group.hpp"
#include "oakit/algebra/hadamard.hpp"
#include "oakit/algebra/stacking.hpp"
#include "oakit/core/strength.hpp"

namespace oakit {

/// D expands to an OA of strength t over `group`: D (+) (d) passes verify_strength(., t).
inline StrengthReport is_difference_scheme(const MixedArray &matrix, const AdditiveGroup &group, std::size_t t) {
    return verify_strength(expand(matrix, group), t);
}

/**
 * D_t(r, c, d): an r x c matrix over a group of order d whose expansion has strength t.
 *
 * Construction always runs the expansion check; a matrix that fails it cannot be wrapped.
 */
class DifferenceScheme {
   public:
    DifferenceScheme(MixedArray matrix, AdditiveGroup group, std::size_t strength)
        : matrix_(std::move(matrix)), group_(group), strength_(strength) {
        if (strength_ < 1) throw ParameterError("difference scheme strength must be positive");
        if (strength_ > matrix_.cols())
            throw ParameterError("strength " + std::to_string(strength_) + " exceeds " + std::to_string(matrix_.cols()) +
                                 " columns");
        auto report = is_difference_scheme(matrix_, group_, strength_);
        if (!report.holds) throw VerificationError("matrix is not a difference scheme " + label() + " over " + group_.name());
    }

    std::size_t rows() const noexcept { return matrix_.runs(); }
    std::size_t cols() const noexcept { return matrix_.cols(); }
    Level order() const noexcept { return group_.order(); }
    std::size_t strength() const noexcept { return strength_; }
    const MixedArray &matrix() const noexcept { return matrix_; }
    const AdditiveGroup &group() const noexcept { return group_; }

    /// D (+) (d), an OA(r d, c, d, t).
    MixedArray expanded() const { return expand(matrix_, group_); }

    /// "D_t(r,c,d)".
    std::string label() const {
        return "D_" + std::to_string(strength_) + "(" + std::to_string(rows()) + "," + std::to_string(cols()) + "," +
               std::to_string(order()) + ")";
    }

    /// Header value for the text format: "ds <d> <t>", with " ea" for non-cyclic groups.
    std::string kind() const {
        return "ds " + std::to_string(order()) + " " + std::to_string(strength_) + (group_.is_cyclic() ? "" : " ea");
    }

   private:
    MixedArray matrix_;
    AdditiveGroup group_;
    std::size_t strength_;
};

/// D(d^n, d^n, d) over GF(d): rows x and columns y range over GF(d)^n, entry sum_i x_i y_i.
inline DifferenceScheme ds_linear(std::uint32_t d, std::uint32_t n) {
    if (!prime_power(d)) throw ParameterError(std::to_string(d) + " is not a prime power");
    if (n < 1) throw ParameterError("extension count must be at least 1");
    FiniteField f(d);
    std::size_t size = 1;
    for (std::uint32_t i = 0; i < n; ++i) size *= d;
    if (size > 4096) throw ParameterError("d^n too large");
    std::vector<Symbol> cells(size * size);
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y) {
            FiniteField::Element acc = 0;
            std::size_t rx = x, ry = y;
            for (std::uint32_t i = 0; i < n; ++i, rx /= d, ry /= d)
                acc = f.add(acc, f.mul(static_cast<FiniteField::Element>(rx % d), static_cast<FiniteField::Element>(ry % d)));
            cells[x * size + y] = acc;
        }
    return DifferenceScheme(MixedArray(std::vector<Level>(size, d), std::move(cells)), AdditiveGroup::field_additive(f), 2);
}

/// D_3(d^2, d, d) for odd prime powers d: row (a, b) at index a * d + b, column c, entry a c + b c^2.
inline DifferenceScheme ds_poly3(std::uint32_t d) {
    if (!prime_power(d)) throw ParameterError(std::to_string(d) + " is not a prime power");
    if (d % 2 == 0) throw ParameterError("ds_poly3 needs an odd prime power, got " + std::to_string(d));
    FiniteField f(d);
    std::vector<Symbol> cells;
    cells.reserve(static_cast<std::size_t>(d) * d * d);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b)
            for (std::uint32_t c = 0; c < d; ++c) cells.push_back(f.add(f.mul(a, c), f.mul(b, f.mul(c, c))));
    return DifferenceScheme(MixedArray(std::vector<Level>(d, d), std::move(cells)), AdditiveGroup::field_additive(f), 3);
}

/// A 0/1 Hadamard matrix viewed as D(n, n, 2); strength 3 for n >= 4.
inline DifferenceScheme hadamard_scheme(const HadamardMatrix01 &h) {
    return DifferenceScheme(h.matrix, AdditiveGroup::cyclic(2), h.order >= 4 ? 3 : std::min<std::size_t>(2, h.order));
}

/**
 * D (+) E, the Kronecker sum of two schemes over the same group. The declared strength
 * defaults to the smaller of the two and may be raised explicitly; it is checked either way.
 */
inline DifferenceScheme scheme_kronecker_sum(const DifferenceScheme &d, const DifferenceScheme &e,
                                             std::optional<std::size_t> strength = std::nullopt) {
    if (!(d.group() == e.group())) throw ParameterError("schemes over different groups");
    return DifferenceScheme(kronecker_sum(d.matrix(), e.matrix(), d.group()), d.group(),
                            strength.value_or(std::min(d.strength(), e.strength())));
}

/// The columns `columns` of a scheme (column subsets of a scheme are schemes of the same strength, capped by width).
inline DifferenceScheme select_scheme_columns(const DifferenceScheme &d, std::span<const std::size_t> columns) {
    return DifferenceScheme(select_columns(d.matrix(), columns), d.group(), std::min(d.strength(), columns.size()));
}

inline DifferenceScheme first_scheme_columns(const DifferenceScheme &d, std::size_t count) {
    std::vector<std::size_t> cols(count);
    for (std::size_t i = 0; i < count; ++i) cols[i] = i;
    return select_scheme_columns(d, cols);
}

}  // namespace oakit
