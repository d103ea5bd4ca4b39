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

// Family pipelines. Each one composes the juxtaposition and replacement operations, deletes or
// selects columns to hit the requested profile and ends with verified(), so a returned
// construction has always passed the strength and distance oracles.

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "oakit/algebra/difference_scheme.hpp"
#include "oakit/algebra/hadamard.hpp"
#include "oakit/catalog/seeds.hpp"
#include "oakit/constructions/bush.hpp"
#include "oakit/constructions/column_selection.hpp"
#include "oakit/constructions/juxtapose.hpp"
#include "oakit/constructions/partition.hpp"
#include "oakit/constructions/replacement.hpp"
#include "oakit/search/search.hpp"

namespace oakit {

enum class DeletionStrategy {
    /// AnyWithinBudget when it applies, then MoaPartFirst, then a column-selection search.
    Auto,
    /// Delete the last columns while the count stays within MD - (k + 1).
    AnyWithinBudget,
    /// Drop every 2-level column of the A (+) 0_2 part first, then trailing scheme columns.
    MoaPartFirst,
};

inline std::string to_string(DeletionStrategy s) {
    switch (s) {
        case DeletionStrategy::Auto: return "auto";
        case DeletionStrategy::AnyWithinBudget: return "any-within-budget";
        case DeletionStrategy::MoaPartFirst: return "moa-part-first";
    }
    return "?";
}

namespace detail {

inline Construction renamed(Construction c, std::string name) {
    c.certificate.construction = std::move(name);
    return c;
}

/// OA(4,3,2,2): columns 1..3 of the order-4 Sylvester matrix.
inline MixedArray oa_4_3_2_2() {
    const std::vector<std::size_t> cols = {1, 2, 3};
    return select_columns(hadamard01(4, HadamardMethod::Sylvester).matrix, cols);
}

inline MixedArray searched_seed(std::size_t r, std::vector<Level> levels, std::size_t k, std::size_t w = 0) {
    SearchSpec spec;
    spec.runs = r;
    spec.levels = levels;
    spec.strength = k;
    spec.min_distance = w;
    auto res = search_moa(spec);
    if (res.outcome != SearchOutcome::Found)
        throw MissingSeedError("search for MOA(" + std::to_string(r) + "," + std::to_string(levels.size()) + "," +
                               profile_string(levels, "") + "," + std::to_string(k) + ") ended with " + to_string(res.outcome));
    return *res.array;
}

inline HadamardMatrix01 hadamard_or_missing(std::size_t n) {
    try {
        return hadamard01(n);
    } catch (const ParameterError &e) {
        throw MissingSeedError(std::string("Hadamard matrix of order ") + std::to_string(n) + " unavailable: " + e.what());
    }
}

inline std::vector<std::size_t> columns_with_level(const MixedArray &a, Level d, std::size_t from = 0,
                                                   std::size_t to = SIZE_MAX) {
    std::vector<std::size_t> out;
    for (std::size_t c = from; c < std::min(to, a.cols()); ++c)
        if (a.level(c) == d) out.push_back(c);
    return out;
}

struct SeedForDoubling {
    MixedArray array;
    /// Run count r of the seed; a D(r, r, 2) is needed.
    std::string description;
};

/**
 * A_{t+1} = [A_t (+) 0_2, D_t (+) (2)] with D_t = H_r (x) H_{2^t}, t = 0..n-1, followed by
 * deletions down to `big` columns of level `d` and `two` 2-level columns. The seed keeps
 * its d-level columns first, so they stay first through the recursion.
 */
inline Construction doubling_family(const std::string &name, const SeedForDoubling &seed, Level d, std::size_t big, std::size_t two,
                                    DeletionStrategy strategy) {
    const MixedArray &a0 = seed.array;
    const std::size_t r = a0.runs();
    const std::size_t a = columns_with_level(a0, d).size();
    const std::size_t b = columns_with_level(a0, 2).size();
    if (a + b != a0.cols()) throw ParameterError("seed must only have levels " + std::to_string(d) + " and 2");
    if (big < 1 || big > a) throw ParameterError("M must lie in 1.." + std::to_string(a) + " for this seed");
    if (two < 2) throw ParameterError("N must be at least 2");

    // Smallest n >= 1 whose 2-level column count b + r (2^n - 1) reaches N.
    std::size_t n = 1;
    while (b + r * ((std::size_t{1} << n) - 1) < two) ++n;
    if (r << n > 8192) throw ParameterError("N=" + std::to_string(two) + " needs more than 8192 runs");

    const HadamardMatrix01 h = hadamard_or_missing(r);
    MixedArray cur = a0;
    std::size_t seed_part = 0;
    std::size_t last_scheme_rows = 0;
    std::vector<std::string> notes = {"seed: " + seed.description, "scheme: " + h.recipe + " kronecker sylvester(2^t)"};
    for (std::size_t t = 0; t < n; ++t) {
        const HadamardMatrix01 ht = t == 0 ? h : hadamard_kronecker(h, hadamard01(std::size_t{1} << t, HadamardMethod::Sylvester));
        seed_part = cur.cols();
        last_scheme_rows = cur.runs();
        cur = verified(lemma1_juxtapose(cur, hadamard_scheme(ht))).array;
    }
    notes.push_back("doubling steps: " + std::to_string(n) + ", host " + std::to_string(cur.runs()) + "x" + std::to_string(cur.cols()));

    const std::size_t md = min_distance(cur);
    const auto big_cols = columns_with_level(cur, d);
    const auto two_cols = columns_with_level(cur, 2);
    const std::vector<std::size_t> extra_big(big_cols.begin() + static_cast<std::ptrdiff_t>(big), big_cols.end());
    const std::size_t j = two_cols.size() - two;
    const std::size_t budget = md >= 3 ? md - 3 : 0;
    const auto seed_two = columns_with_level(cur, 2, 0, seed_part);
    const std::size_t half = last_scheme_rows / 2;

    std::vector<std::size_t> drop = extra_big;
    std::optional<PredictedDistance> bound;
    std::string used;
    const bool any_ok = extra_big.size() + j <= budget;
    const bool moa_ok = j >= seed_two.size() && j - seed_two.size() + 3 <= half;
    if ((strategy == DeletionStrategy::Auto && any_ok) || strategy == DeletionStrategy::AnyWithinBudget) {
        if (!any_ok)
            throw ParameterError("any-within-budget needs " + std::to_string(extra_big.size() + j) + " deletions but MD " +
                                 std::to_string(md) + " allows " + std::to_string(budget));
        drop.insert(drop.end(), two_cols.end() - static_cast<std::ptrdiff_t>(j), two_cols.end());
        bound = PredictedDistance{"MD(host) - deletions = " + std::to_string(md) + " - " + std::to_string(drop.size()),
                                  md - drop.size(), false};
        used = to_string(DeletionStrategy::AnyWithinBudget);
    } else if ((strategy == DeletionStrategy::Auto && moa_ok) || strategy == DeletionStrategy::MoaPartFirst) {
        if (!moa_ok)
            throw ParameterError("moa-part-first needs between " + std::to_string(seed_two.size()) + " and " +
                                 std::to_string(seed_two.size() + (half >= 3 ? half - 3 : 0)) + " 2-level deletions, got " +
                                 std::to_string(j));
        const std::size_t q = j - seed_two.size();
        drop.insert(drop.end(), seed_two.begin(), seed_two.end());
        drop.insert(drop.end(), two_cols.end() - static_cast<std::ptrdiff_t>(q), two_cols.end());
        bound = PredictedDistance{"MD(scheme part) - q = " + std::to_string(half) + " - " + std::to_string(q), half - q, false};
        used = to_string(DeletionStrategy::MoaPartFirst);
    } else {
        MixedArray trimmed = extra_big.empty() ? cur : delete_columns(cur, extra_big);
        auto sel = select_columns_for_distance(trimmed, columns_with_level(trimmed, 2), {{Level{2}, j}}, 3);
        if (!sel.deleted)
            throw ParameterError("no set of " + std::to_string(j) + " 2-level columns leaves MD >= 3 (" +
                                 (sel.exhausted_budget ? "search budget exhausted" : "search space exhausted") + ")");
        notes.push_back("column selection: deleted " + std::to_string(j) + " 2-level columns after " + std::to_string(sel.nodes) +
                        " nodes");
        cur = delete_columns(trimmed, *sel.deleted);
        drop.clear();
        bound = PredictedDistance{"column selection target", 3, false};
        used = "column-selection";
    }
    if (!drop.empty()) cur = delete_columns(cur, drop);
    notes.push_back("deletion: " + used);

    Construction c{cur, claim(name, cur, 2)};
    c.certificate.predicted = bound;
    c.certificate.claims_irredundant = true;
    c.certificate.notes = notes;
    return verified(std::move(c));
}

/**
 * lemma3_juxtapose of a fixed symmetric scheme part with D_3(v, n, 2) (+) (2) for
 * the smallest available Hadamard order v whose certified range v/2 + 4 <= n <= v covers
 * n. Outside every range the next larger order is built and columns are chosen by search.
 */
inline Construction scheme_hadamard_family(const std::string &name, const DifferenceScheme &left,
                                           const std::vector<std::size_t> &orders, std::size_t n) {
    const OrthogonalPartition pa = partition_from_scheme(left);
    auto build = [&](std::size_t v, std::size_t width) {
        const HadamardMatrix01 h = hadamard_or_missing(v);
        const DifferenceScheme right = first_scheme_columns(hadamard_scheme(h), width);
        Construction c = lemma3_juxtapose(pa, partition_from_scheme(right));
        c.certificate.notes.push_back("left: " + left.label() + " (+) (" + std::to_string(left.order()) + ")");
        c.certificate.notes.push_back("right: first " + std::to_string(width) + " columns of " + h.recipe);
        return c;
    };
    for (std::size_t v : orders)
        if (v / 2 + 4 <= n && n <= v) return verified(renamed(build(v, n), name));

    auto above = std::find_if(orders.begin(), orders.end(), [&](std::size_t v) { return v >= n; });
    if (above == orders.end()) throw ParameterError("n=" + std::to_string(n) + " exceeds the supported scheme orders");
    const std::size_t v = *above;
    Construction c = build(v, n);
    if (min_distance(c.array, 3) >= 4) {
        c.certificate.predicted = PredictedDistance{"measured, below the certified range", 4, false};
        c.certificate.notes.push_back("first " + std::to_string(n) + " columns already give MD >= 4");
        c.certificate.claims_irredundant = true;
        return verified(renamed(std::move(c), name));
    }
    Construction full = build(v, v);
    const std::size_t lead = left.cols();
    std::vector<std::size_t> candidates;
    for (std::size_t col = lead; col < full.array.cols(); ++col) candidates.push_back(col);
    auto sel = select_columns_for_distance(full.array, candidates, {{Level{2}, v - n}}, 4);
    if (!sel.deleted)
        throw ParameterError("no choice of " + std::to_string(n) + " of the " + std::to_string(v) + " 2-level columns gives MD >= 4");
    MixedArray out = delete_columns(full.array, *sel.deleted);
    Construction result{out, claim(name, out, 3)};
    result.certificate.notes = full.certificate.notes;
    result.certificate.notes.push_back("column selection: deleted " + std::to_string(v - n) + " of " + std::to_string(v) +
                                       " 2-level columns after " + std::to_string(sel.nodes) + " nodes");
    result.certificate.predicted = PredictedDistance{"column selection target", 4, false};
    result.certificate.claims_irredundant = true;
    return verified(std::move(result));
}

inline std::vector<std::size_t> doubled_orders(std::initializer_list<std::size_t> bases, std::size_t cap) {
    std::vector<std::size_t> out;
    for (std::size_t b : bases)
        for (std::size_t v = b; v <= cap; v *= 2) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/**
 * IrMOA(r, M + N, 3^M 2^N, 2) by repeated lemma1_juxtapose doubling.
 *
 * Seeds: M = 1 uses a searched MOA(12,5,3^1 2^4,2) (N >= 8); 2 <= M <= 4 uses
 * OA(9,4,3,2) x OA(4,3,2,2) = MOA(36,7,3^4 2^3,2) (N >= 21); 5 <= M <= 9 uses
 * OA(27,9,3,2) x OA(4,3,2,2) = MOA(108,12,3^9 2^3,2) (N >= 57).
 */
inline Construction thm1_family(std::size_t M, std::size_t N, DeletionStrategy strategy = DeletionStrategy::Auto) {
    const std::string name = "thm1_family(M=" + std::to_string(M) + ",N=" + std::to_string(N) + ")";
    detail::SeedForDoubling seed{MixedArray({2}, {0, 1}), ""};
    std::size_t lowest = 0;
    if (M == 1) {
        seed = {detail::searched_seed(12, {3, 2, 2, 2, 2}, 2), "searched MOA(12,5,3^1 2^4,2)"};
        lowest = 8;
    } else if (M >= 2 && M <= 4) {
        seed = {direct_product(bush_oa(3, 2), detail::oa_4_3_2_2()), "OA(9,4,3,2) x OA(4,3,2,2)"};
        lowest = 21;
    } else if (M >= 5 && M <= 9) {
        seed = {direct_product(ds_linear(3, 2).expanded(), detail::oa_4_3_2_2()), "OA(27,9,3,2) x OA(4,3,2,2)"};
        lowest = 57;
    } else {
        throw MissingSeedError("no seed MOA(r, a + b, 3^a 2^b, 2) with a >= " + std::to_string(M) + " is available");
    }
    if (N < lowest) throw ParameterError(name + ": N must be at least " + std::to_string(lowest) + " for this seed");
    return detail::doubling_family(name, seed, 3, M, N, strategy);
}

/**
 * IrMOA(r, M + N, d^M 2^N, 2) for d > 3 by the same doubling.
 *
 * Seeds: d = 4, M = 1 uses a searched MOA(8,5,4^1 2^4,2) (N >= 7); other prime powers
 * use OA(d^2, d+1, d, 2) x OA(4,3,2,2) with M <= d + 1 and N >= 2d^2 + 3, which needs a
 * Hadamard matrix of order 4d^2.
 */
inline Construction thm2_family(Level d, std::size_t M, std::size_t N, DeletionStrategy strategy = DeletionStrategy::Auto) {
    const std::string name = "thm2_family(d=" + std::to_string(d) + ",M=" + std::to_string(M) + ",N=" + std::to_string(N) + ")";
    if (d <= 3) throw ParameterError(name + ": d must exceed 3");
    detail::SeedForDoubling seed{MixedArray({2}, {0, 1}), ""};
    std::size_t lowest = 0;
    if (d == 4 && M == 1) {
        seed = {detail::searched_seed(8, {4, 2, 2, 2, 2}, 2), "searched MOA(8,5,4^1 2^4,2)"};
        lowest = 7;
    } else if (prime_power(d)) {
        if (M < 1 || M > d + 1) throw ParameterError(name + ": M must lie in 1.." + std::to_string(d + 1));
        seed = {direct_product(bush_oa(d, 2), detail::oa_4_3_2_2()),
                "OA(" + std::to_string(d * d) + "," + std::to_string(d + 1) + "," + std::to_string(d) + ",2) x OA(4,3,2,2)"};
        lowest = 2 * static_cast<std::size_t>(d) * d + 3;
    } else {
        throw MissingSeedError("no seed MOA(r, a + b, " + std::to_string(d) + "^a 2^b, 2) is available for d=" + std::to_string(d));
    }
    if (N < lowest) throw ParameterError(name + ": N must be at least " + std::to_string(lowest) + " for this seed");
    return detail::doubling_family(name, seed, d, M, N, strategy);
}

/// IrMOA(r, m + n, 3^m 2^n, 3) for m in {4, 5} and n >= 16.
inline Construction thm3_family(std::size_t m, std::size_t n) {
    const std::string name = "thm3_family(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
    if (m < 4 || m > 5) throw ParameterError(name + ": m must be 4 or 5");
    if (n < 16) throw ParameterError(name + ": n must be at least 16");
    const DifferenceScheme left = first_scheme_columns(seeds::d3_18_5_3(), m);
    return detail::scheme_hadamard_family(name, left, detail::doubled_orders({36, 108}, 4096), n);
}

/// IrMOA(r, m + n, d^m 2^n, 3) for an odd prime power d > 4 and 4 <= m <= d.
inline Construction thm4_family(Level d, std::size_t m, std::size_t n) {
    const std::string name = "thm4_family(d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
    if (d <= 4 || d % 2 == 0 || !prime_power(d)) throw ParameterError(name + ": d must be an odd prime power > 4");
    if (m < 4 || m > d) throw ParameterError(name + ": m must lie in 4.." + std::to_string(d));
    if (n < 4) throw ParameterError(name + ": n must be at least 4");
    const DifferenceScheme left = first_scheme_columns(ds_poly3(d), m);
    const std::size_t d2 = static_cast<std::size_t>(d) * d;
    return detail::scheme_hadamard_family(name, left, detail::doubled_orders({4 * d2, 12 * d2}, 4096), n);
}

/// IrOA(d^k, 2k, d, k) with d the product of the factors: per-factor Bush arrays, paired in ascending order.
inline Construction thm7_base(std::size_t k, std::vector<Level> factors) {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (factors.empty()) throw ParameterError("need at least one factor");
    std::sort(factors.begin(), factors.end());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!prime_power(factors[i])) throw ParameterError(std::to_string(factors[i]) + " is not a prime power");
        if (i && factors[i] == factors[i - 1]) throw ParameterError("factors must be distinct");
        if (factors[i] + 1 < 2 * k) throw ParameterError("factor " + std::to_string(factors[i]) + " is below 2k - 1");
    }
    const auto kk = static_cast<std::uint32_t>(k);
    MixedArray base = bush_oa(factors[0], kk, 2 * k);
    std::string recipe = "bush(" + std::to_string(factors[0]) + ")";
    for (std::size_t i = 1; i < factors.size(); ++i) {
        base = product_construction(base, bush_oa(factors[i], kk, 2 * k));
        recipe += " x bush(" + std::to_string(factors[i]) + ")";
    }
    Construction c{base, claim("thm7_base(k=" + std::to_string(k) + ")", base, k)};
    c.certificate.predicted = PredictedDistance{"k + 1 (MDS factors truncated to 2k columns)", k + 1, false};
    c.certificate.claims_irredundant = true;
    c.certificate.notes.push_back("product: " + recipe);
    return verified(std::move(c));
}

/**
 * thm7_base followed by replacing column i by the trivial MOA over replacements[i]
 * (whose levels must multiply to d).
 */
inline Construction thm7_family(std::size_t k, const std::vector<Level> &factors, const std::vector<std::vector<Level>> &replacements) {
    Construction base = thm7_base(k, factors);
    if (replacements.empty()) return base;
    if (replacements.size() > 2 * k) throw ParameterError("at most 2k columns can be replaced");
    const Level d = base.array.level(0);
    ReplacementPlan plan{k, {}};
    for (std::size_t i = 0; i < replacements.size(); ++i) {
        std::uint64_t product = 1;
        for (Level x : replacements[i]) product *= x;
        if (product != d)
            throw ParameterError("replacement levels for column " + std::to_string(i) + " multiply to " + std::to_string(product) +
                                 ", not " + std::to_string(d));
        plan.replacements.push_back({i, trivial_moa(replacements[i]), std::nullopt, true});
    }
    Construction c = expansive_replace(base.array, plan);
    c.certificate.construction = "thm7_family(k=" + std::to_string(k) + ")";
    c.certificate.notes.insert(c.certificate.notes.begin(), base.certificate.notes.begin(), base.certificate.notes.end());
    return verified(std::move(c));
}

/// [(N) (+) 0_d, D (+) (d)] for a scheme D(N, M, d).
inline Construction thm8_host(const DifferenceScheme &ds) {
    MixedArray host = concat_columns(zero_extend(index_column(static_cast<Level>(ds.rows())), ds.order()), ds.expanded());
    Construction c{host, claim("thm8_host(" + ds.label() + ")", host, 2)};
    const std::vector<std::size_t> none;
    std::vector<std::size_t> scheme_cols;
    for (std::size_t col = 1; col < host.cols(); ++col) scheme_cols.push_back(col);
    const std::size_t scheme_md = min_distance(select_columns(host, scheme_cols));
    c.certificate.notes.push_back("MD(scheme part) = " + std::to_string(scheme_md));
    c.certificate.claims_irredundant = min_distance(host) >= 3;
    return verified(std::move(c));
}

struct Thm8Options {
    /// Columns of the replacement array to keep (all when unset).
    std::optional<std::vector<std::size_t>> keep;
    /// level -> number of columns of that level to delete afterwards, chosen by search so MD stays >= 3.
    std::map<Level, std::size_t> delete_quota;
};

/**
 * Replace the N-level column of thm8_host(D) by an MOA(N, m, ..., 2) B. Certified when
 * MD(scheme part) >= 3, or when MD(host) = 3 and B has distinct rows.
 */
inline Construction thm8_family(const DifferenceScheme &ds, const MixedArray &b, const Thm8Options &opt = {}) {
    Construction host = thm8_host(ds);
    std::vector<std::size_t> scheme_cols;
    for (std::size_t col = 1; col < host.array.cols(); ++col) scheme_cols.push_back(col);
    const std::size_t scheme_md = min_distance(select_columns(host.array, scheme_cols));
    bool bearing = false;
    if (scheme_md < 3) {
        if (min_distance(host.array) < 3 || min_distance(b) < 1)
            throw ParameterError("neither MD(scheme part) >= 3 nor MD(host) = 3 with MD(B) >= 1 holds");
        if (opt.keep) throw ParameterError("keeping a subset of B requires MD(scheme part) >= 3");
        bearing = true;
    }
    ReplacementPlan plan{2, {{0, b, opt.keep, bearing}}};
    Construction c = expansive_replace(host.array, plan);
    c.certificate.construction = "thm8_family(" + ds.label() + ")";
    c.certificate.notes.push_back("MD(scheme part) = " + std::to_string(scheme_md));
    std::size_t to_delete = 0;
    for (const auto &[lvl, cnt] : opt.delete_quota) to_delete += cnt;
    if (to_delete == 0) return verified(std::move(c));

    std::vector<std::size_t> candidates;
    for (std::size_t col = 0; col < c.array.cols(); ++col)
        if (opt.delete_quota.count(c.array.level(col))) candidates.push_back(col);
    auto sel = select_columns_for_distance(c.array, candidates, opt.delete_quota, 3);
    if (!sel.deleted) throw ParameterError("no deletion set with the requested levels keeps MD >= 3");
    MixedArray out = delete_columns(c.array, *sel.deleted);
    Construction result{out, claim(c.certificate.construction, out, 2)};
    result.certificate.notes = c.certificate.notes;
    std::string del;
    for (auto col : *sel.deleted) del += (del.empty() ? "" : ",") + std::to_string(col);
    result.certificate.notes.push_back("column selection: deleted {" + del + "} after " + std::to_string(sel.nodes) + " nodes");
    result.certificate.predicted = PredictedDistance{"column selection target", 3, false};
    result.certificate.claims_irredundant = true;
    return verified(std::move(result));
}

/// IrMOA(d^{n+1}, d^n + m, d^{d^n} p_1 ... p_m, 2) from D(d^n, d^n, d) and B = MOA(d^n, m, ..., 2).
inline Construction cor_dn_family(Level d, std::uint32_t n, const MixedArray &b) {
    Construction c = thm8_family(ds_linear(d, n), b);
    c.certificate.construction = "cor_dn_family(d=" + std::to_string(d) + ",n=" + std::to_string(n) + ")";
    return c;
}

}  // namespace oakit
