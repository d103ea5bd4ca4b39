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

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oakit/algebra/finite_field.hpp"
#include "oakit/core/distance.hpp"
#include "oakit/core/mixed_array.hpp"

namespace oakit {

enum class HadamardMethod { Auto, Sylvester, Paley1, Paley2, Kronecker };

inline std::string to_string(HadamardMethod m) {
    switch (m) {
        case HadamardMethod::Auto: return "auto";
        case HadamardMethod::Sylvester: return "sylvester";
        case HadamardMethod::Paley1: return "paley1";
        case HadamardMethod::Paley2: return "paley2";
        case HadamardMethod::Kronecker: return "kronecker";
    }
    return "?";
}

/// Normalized 0/1 Hadamard matrix: first row and column zero, distinct rows at distance n/2.
struct HadamardMatrix01 {
    std::size_t order = 0;
    MixedArray matrix;
    /// Description of how it was generated, e.g. "paley2(17)" or "kronecker(paley1(11),sylvester(2))".
    std::string recipe;
};

namespace detail {

using PmMatrix = std::vector<std::vector<int>>;

inline PmMatrix paley_core(std::uint32_t q, bool type_one) {
    FiniteField f(q);
    auto chi = [&](FiniteField::Element a) { return a == 0 ? 0 : (f.log(a) % 2 == 0 ? 1 : -1); };
    const std::size_t s = q + 1;
    // Core C: type one is skew (border column -1), type two symmetric (border column +1).
    PmMatrix c(s, std::vector<int>(s, 0));
    for (std::size_t j = 1; j < s; ++j) {
        c[0][j] = 1;
        c[j][0] = type_one ? -1 : 1;
    }
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) c[a + 1][b + 1] = chi(f.sub(a, b));
    if (type_one) {
        for (std::size_t i = 0; i < s; ++i) c[i][i] += 1;
        return c;
    }
    PmMatrix h(2 * s, std::vector<int>(2 * s, 0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            const int e = c[i][j];
            const int diag = i == j ? 1 : 0;
            h[2 * i][2 * j] = e + diag;
            h[2 * i][2 * j + 1] = e - diag;
            h[2 * i + 1][2 * j] = e - diag;
            h[2 * i + 1][2 * j + 1] = -e - diag;
        }
    return h;
}

inline MixedArray normalize_to_01(const PmMatrix &h) {
    const std::size_t n = h.size();
    std::vector<Symbol> cells(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int v = h[i][j] * h[0][j] * h[i][0] * h[0][0];
            cells[i * n + j] = v == 1 ? 0 : 1;
        }
    return MixedArray(std::vector<Level>(n, 2), std::move(cells));
}

inline std::optional<std::uint32_t> paley1_q(std::size_t n) {
    if (n < 4) return std::nullopt;
    const auto q = n - 1;
    if (q % 4 == 3 && prime_power(q) && q <= (1u << 16)) return static_cast<std::uint32_t>(q);
    return std::nullopt;
}

inline std::optional<std::uint32_t> paley2_q(std::size_t n) {
    if (n % 2 != 0 || n < 4) return std::nullopt;
    const auto q = n / 2 - 1;
    if (q % 4 == 1 && prime_power(q) && q <= (1u << 16)) return static_cast<std::uint32_t>(q);
    return std::nullopt;
}

inline void check_hadamard(const HadamardMatrix01 &h) {
    const auto &m = h.matrix;
    for (std::size_t j = 0; j < h.order; ++j)
        if (m(0, j) != 0 || m(j, 0) != 0) throw VerificationError(h.recipe + ": not normalized");
    for (std::size_t i = 0; i < h.order; ++i)
        for (std::size_t k = i + 1; k < h.order; ++k)
            if (2 * hamming(m.row(i), m.row(k)) != h.order)
                throw VerificationError(h.recipe + ": rows " + std::to_string(i) + " and " + std::to_string(k) +
                                        " are not at distance n/2");
}

inline std::optional<HadamardMatrix01> hadamard_auto(std::size_t n);

}  // namespace detail

/// Kronecker product of 0/1 Hadamard matrices (XOR of entries); normalization is preserved.
inline HadamardMatrix01 hadamard_kronecker(const HadamardMatrix01 &a, const HadamardMatrix01 &b) {
    const std::size_t n = a.order * b.order;
    std::vector<Symbol> cells(n * n);
    for (std::size_t i = 0; i < a.order; ++i)
        for (std::size_t x = 0; x < b.order; ++x)
            for (std::size_t j = 0; j < a.order; ++j)
                for (std::size_t y = 0; y < b.order; ++y)
                    cells[(i * b.order + x) * n + j * b.order + y] = a.matrix(i, j) ^ b.matrix(x, y);
    HadamardMatrix01 out{n, MixedArray(std::vector<Level>(n, 2), std::move(cells)),
                         "kronecker(" + a.recipe + "," + b.recipe + ")"};
    detail::check_hadamard(out);
    return out;
}

/**
 * 0/1 Hadamard matrix of order n.
 *
 * Auto tries sylvester, paley1, paley2, then the first split n = a * b (a ascending) with
 * both factors generatable. Kronecker uses `factors` (product must equal n), each built
 * by Auto. Every result is checked for the n/2 row-distance property before returning.
 */
inline HadamardMatrix01 hadamard01(std::size_t n, HadamardMethod method = HadamardMethod::Auto,
                                   const std::vector<std::size_t> &factors = {}) {
    auto no_generator = [&](const std::string &why) {
        std::string applicable;
        if (std::has_single_bit(n)) applicable += " sylvester";
        if (detail::paley1_q(n)) applicable += " paley1";
        if (detail::paley2_q(n)) applicable += " paley2";
        return ParameterError("no generator for Hadamard order " + std::to_string(n) + " via " + to_string(method) + ": " +
                              why + "; applicable methods:" + (applicable.empty() ? " none (try kronecker)" : applicable));
    };
    if (n == 0) throw ParameterError("Hadamard order must be positive");

    switch (method) {
        case HadamardMethod::Auto: {
            auto h = detail::hadamard_auto(n);
            if (!h) throw no_generator("no sylvester, paley or kronecker decomposition found");
            return *h;
        }
        case HadamardMethod::Sylvester: {
            if (!std::has_single_bit(n)) throw no_generator("order is not a power of two");
            std::vector<Symbol> cells(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = std::popcount(i & j) % 2;
            HadamardMatrix01 out{n, MixedArray(std::vector<Level>(n, 2), std::move(cells)), "sylvester(" + std::to_string(n) + ")"};
            detail::check_hadamard(out);
            return out;
        }
        case HadamardMethod::Paley1: {
            auto q = detail::paley1_q(n);
            if (!q) throw no_generator("n - 1 is not a prime power congruent to 3 mod 4");
            HadamardMatrix01 out{n, detail::normalize_to_01(detail::paley_core(*q, true)), "paley1(" + std::to_string(*q) + ")"};
            detail::check_hadamard(out);
            return out;
        }
        case HadamardMethod::Paley2: {
            auto q = detail::paley2_q(n);
            if (!q) throw no_generator("n/2 - 1 is not a prime power congruent to 1 mod 4");
            HadamardMatrix01 out{n, detail::normalize_to_01(detail::paley_core(*q, false)), "paley2(" + std::to_string(*q) + ")"};
            detail::check_hadamard(out);
            return out;
        }
        case HadamardMethod::Kronecker: {
            if (factors.empty()) throw no_generator("kronecker needs a factor list");
            std::size_t product = 1;
            for (auto f : factors) product *= f;
            if (product != n) throw no_generator("factor product " + std::to_string(product) + " differs from n");
            HadamardMatrix01 out = hadamard01(factors.front());
            for (std::size_t i = 1; i < factors.size(); ++i) out = hadamard_kronecker(out, hadamard01(factors[i]));
            return out;
        }
    }
    throw no_generator("unknown method");
}

namespace detail {

inline std::optional<HadamardMatrix01> hadamard_auto(std::size_t n) {
    if (n == 1 || std::has_single_bit(n)) return hadamard01(n, HadamardMethod::Sylvester);
    if (n % 4 != 0) return std::nullopt;
    if (paley1_q(n)) return hadamard01(n, HadamardMethod::Paley1);
    if (paley2_q(n)) return hadamard01(n, HadamardMethod::Paley2);
    for (std::size_t a = 2; a * a <= n; ++a) {
        if (n % a != 0) continue;
        auto left = hadamard_auto(a);
        if (!left) continue;
        auto right = hadamard_auto(n / a);
        if (!right) continue;
        return hadamard_kronecker(*left, *right);
    }
    return std::nullopt;
}

}  // namespace detail

}  // namespace oakit
