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
#include <string>

#include "oakit/algebra/finite_field.hpp"
#include "oakit/core/mixed_array.hpp"

namespace oakit {

/**
 * A finite abelian group on {0, ..., d-1}: either Z_d, or the additive group of GF(p^m)
 * (elementary abelian, element e read as base-p digits added digit-wise mod p).
 */
class AdditiveGroup {
   public:
    static AdditiveGroup cyclic(Level d) {
        if (d < 2) throw ParameterError("group order must be at least 2");
        return AdditiveGroup(d, d, 1);
    }

    /// (Z_p)^m; for m = 1 this coincides with cyclic(p).
    static AdditiveGroup elementary(std::uint32_t p, std::uint32_t m) {
        if (!prime_power(p) || prime_power(p)->second != 1) throw ParameterError(std::to_string(p) + " is not prime");
        std::uint64_t d = 1;
        for (std::uint32_t i = 0; i < m; ++i) d *= p;
        if (m == 0 || d > 0xFFFFFFFFull) throw ParameterError("elementary group out of range");
        return AdditiveGroup(static_cast<Level>(d), p, m);
    }

    static AdditiveGroup field_additive(const FiniteField &f) { return elementary(f.characteristic(), f.degree()); }

    Level order() const noexcept { return order_; }
    bool is_cyclic() const noexcept { return m_ == 1; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t rank() const noexcept { return m_; }

    Symbol add(Symbol a, Symbol b) const {
        if (m_ == 1) return static_cast<Symbol>((static_cast<std::uint64_t>(a) + b) % order_);
        if (p_ == 2) return a ^ b;
        Symbol out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i, a /= p_, b /= p_, scale *= p_) out += ((a % p_ + b % p_) % p_) * scale;
        return out;
    }

    Symbol neg(Symbol a) const {
        if (m_ == 1) return a == 0 ? 0 : order_ - a;
        if (p_ == 2) return a;
        Symbol out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i, a /= p_, scale *= p_) out += ((p_ - a % p_) % p_) * scale;
        return out;
    }

    Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }

    /// "Z_d" or "(Z_p)^m".
    std::string name() const {
        if (m_ == 1) return "Z_" + std::to_string(order_);
        return "(Z_" + std::to_string(p_) + ")^" + std::to_string(m_);
    }

    bool operator==(const AdditiveGroup &) const = default;

   private:
    AdditiveGroup(Level order, std::uint32_t p, std::uint32_t m) : order_(order), p_(p), m_(m) {}

    Level order_;
    std::uint32_t p_;
    std::uint32_t m_;
};

}  // namespace oakit
