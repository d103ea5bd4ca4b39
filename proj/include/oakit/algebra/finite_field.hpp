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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oakit/core/error.hpp"

namespace oakit {

/// (p, m) with q = p^m, or nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    if (p == 0) return std::make_pair(static_cast<std::uint32_t>(q), 1u);
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), m);
}

/**
 * GF(p^m) for p^m <= 2^16.
 *
 * Elements are the integers 0..q-1; element e encodes the polynomial sum c_i x^i with
 * e = sum c_i p^i. The modulus is the lexicographically smallest monic irreducible of
 * degree m (lower coefficients compared as the integer sum c_i p^i). Multiplication goes
 * through log/exp tables built from the smallest primitive element.
 */
class FiniteField {
   public:
    using Element = std::uint32_t;

    explicit FiniteField(std::uint32_t q) : q_(q) {
        auto pm = q <= (1u << 16) ? prime_power(q) : std::nullopt;
        if (!pm) throw ParameterError("GF(" + std::to_string(q) + "): order must be a prime power <= 65536");
        p_ = pm->first;
        m_ = pm->second;
        modulus_ = find_modulus();
        build_tables();
    }

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    /// Coefficients c_0..c_m of the modulus (c_m = 1).
    const std::vector<std::uint32_t> &modulus() const noexcept { return modulus_; }
    Element primitive_element() const noexcept { return exp_[1]; }

    Element add(Element a, Element b) const {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) return (a + b) % p_;
        Element out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i, a /= p_, b /= p_, scale *= p_) out += ((a % p_ + b % p_) % p_) * scale;
        return out;
    }

    Element neg(Element a) const {
        if (p_ == 2) return a;
        Element out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i, a /= p_, scale *= p_) out += ((p_ - a % p_) % p_) * scale;
        return out;
    }

    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    Element mul(Element a, Element b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }

    Element inv(Element a) const {
        if (a == 0) throw ParameterError("zero has no multiplicative inverse");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    Element pow(Element a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
    }

    /// Discrete log base the primitive element; a must be nonzero.
    std::uint32_t log(Element a) const {
        if (a == 0) throw ParameterError("log of zero");
        return log_[a];
    }

    /// Nonzero squares have even logarithm.
    bool is_square(Element a) const { return a == 0 || q_ == 2 || log_[a] % 2 == 0 || p_ == 2; }

   private:
    using Poly = std::vector<std::uint32_t>;  // c_0 first

    // Schoolbook product of two residues reduced modulo the modulus.
    Element mul_slow(Element a, Element b) const {
        Poly x = digits(a), y = digits(b), prod(2 * m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i)
            for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
        for (std::uint32_t deg = 2 * m_ - 1; deg >= m_; --deg) {
            const std::uint32_t c = prod[deg];
            if (c == 0) continue;
            for (std::uint32_t i = 0; i <= m_; ++i)
                prod[deg - m_ + i] = (prod[deg - m_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
        Element out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i, scale *= p_) out += prod[i] * scale;
        return out;
    }

    Poly digits(Element a) const {
        Poly out(m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i, a /= p_) out[i] = a % p_;
        return out;
    }

    // Remainder of f modulo the monic g, both low-coefficient first.
    Poly poly_mod(Poly f, const Poly &g) const {
        const std::size_t dg = g.size() - 1;
        while (f.size() > dg && !f.empty()) {
            const std::uint32_t c = f.back();
            const std::size_t shift = f.size() - 1 - dg;
            if (c != 0)
                for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + (p_ - c) * g[i]) % p_;
            f.pop_back();
        }
        return f;
    }

    bool irreducible(const Poly &f) const {
        // Trial division by every monic polynomial of degree 1..m/2.
        for (std::uint32_t d = 1; d <= m_ / 2; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t low = 0; low < count; ++low) {
                Poly g(d + 1, 0);
                std::uint64_t rest = low;
                for (std::uint32_t i = 0; i < d; ++i, rest /= p_) g[i] = static_cast<std::uint32_t>(rest % p_);
                g[d] = 1;
                Poly r = poly_mod(f, g);
                bool zero = true;
                for (auto c : r) zero = zero && c == 0;
                if (zero) return false;
            }
        }
        return true;
    }

    Poly find_modulus() const {
        if (m_ == 1) return {0, 1};
        for (std::uint64_t low = 0; low < q_; ++low) {
            Poly f(m_ + 1, 0);
            std::uint64_t rest = low;
            for (std::uint32_t i = 0; i < m_; ++i, rest /= p_) f[i] = static_cast<std::uint32_t>(rest % p_);
            f[m_] = 1;
            if (f[0] != 0 && irreducible(f)) return f;
        }
        throw VerificationError("no irreducible polynomial found");  // unreachable for valid q
    }

    void build_tables() {
        exp_.assign(q_, 0);
        log_.assign(q_, 0);
        for (Element g = (q_ == 2 ? 1 : 2); g < q_; ++g) {
            Element x = 1;
            std::uint32_t i = 0;
            bool primitive = true;
            for (; i < q_ - 1; ++i) {
                if (i > 0 && x == 1) {
                    primitive = false;
                    break;
                }
                exp_[i] = x;
                x = m_ == 1 ? static_cast<Element>(static_cast<std::uint64_t>(x) * g % p_) : mul_slow(x, g);
            }
            if (!primitive) continue;
            exp_[q_ - 1] = 1;
            for (std::uint32_t e = 0; e < q_ - 1; ++e) log_[exp_[e]] = e;
            return;
        }
        throw VerificationError("no primitive element found");
    }

    std::uint32_t q_, p_ = 0, m_ = 0;
    Poly modulus_;
    std::vector<Element> exp_, log_;
};

}  // namespace oakit
