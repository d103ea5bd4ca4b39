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

// oakit command-line tool. Machine output (JSON or moa v1) goes to stdout or -o files,
// summaries go to stderr. Exit codes: 0 ok, 2 verification failure, 3 missing seed,
// 4 parameter or format error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "oakit/oakit.hpp"

namespace {

using namespace oakit;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 2;
constexpr int kMissingSeed = 3;
constexpr int kParameterError = 4;

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::uint64_t to_uint(const std::string &s, const std::string &what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos != s.size() || s.empty() || s.front() == '-') throw ParameterError(what + ": expected a non-negative integer, got '" + s + "'");
    return v;
}

std::vector<Level> parse_levels(const std::string &s) {
    std::vector<Level> out;
    for (const auto &tok : split(s, ',')) out.push_back(static_cast<Level>(to_uint(tok, "levels")));
    if (out.empty()) throw ParameterError("empty level list");
    return out;
}

std::vector<std::size_t> parse_indices(const std::string &s) {
    std::vector<std::size_t> out;
    for (const auto &tok : split(s, ',')) out.push_back(to_uint(tok, "index list"));
    return out;
}

/// key=value parameters of `construct`.
class Params {
   public:
    explicit Params(const std::vector<std::string> &raw) {
        for (const auto &kv : raw) {
            auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw ParameterError("parameter '" + kv + "' is not key=value");
            values_[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
    }

    bool has(const std::string &key) const { return values_.count(key) != 0; }

    std::string str(const std::string &key) const {
        auto it = values_.find(key);
        if (it == values_.end()) throw ParameterError("missing parameter '" + key + "'");
        used_.insert(key);
        return it->second;
    }

    std::string str(const std::string &key, const std::string &fallback) const { return has(key) ? str(key) : fallback; }
    std::uint64_t num(const std::string &key) const { return to_uint(str(key), key); }
    std::uint64_t num(const std::string &key, std::uint64_t fallback) const { return has(key) ? num(key) : fallback; }

    void reject_unused() const {
        for (const auto &[k, v] : values_)
            if (!used_.count(k)) throw ParameterError("unknown parameter '" + k + "'");
    }

   private:
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> used_;
};

DeletionStrategy parse_strategy(const std::string &s) {
    for (auto st : {DeletionStrategy::Auto, DeletionStrategy::AnyWithinBudget, DeletionStrategy::MoaPartFirst})
        if (to_string(st) == s) return st;
    throw ParameterError("unknown deletion strategy '" + s + "'");
}

/// hadamard:<n> | linear:<d>,<n> | poly3:<d> | seed:d3_18_5_3 | seed:d_3_3_3
DifferenceScheme parse_scheme(const std::string &s) {
    auto colon = s.find(':');
    const std::string kind = s.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (kind == "hadamard") return hadamard_scheme(hadamard01(to_uint(arg, "hadamard order")));
    if (kind == "linear") {
        auto parts = parse_indices(arg);
        if (parts.size() != 2) throw ParameterError("linear scheme needs d,n");
        return ds_linear(static_cast<std::uint32_t>(parts[0]), static_cast<std::uint32_t>(parts[1]));
    }
    if (kind == "poly3") return ds_poly3(static_cast<std::uint32_t>(to_uint(arg, "poly3 order")));
    if (kind == "seed" && arg == "d3_18_5_3") return seeds::d3_18_5_3();
    if (kind == "seed" && arg == "d_3_3_3") return seeds::d_3_3_3();
    throw ParameterError("unknown scheme '" + s + "'");
}

/// "4x3;2x2x3" -> {{4,3},{2,2,3}}
std::vector<std::vector<Level>> parse_groupings(const std::string &s) {
    std::vector<std::vector<Level>> out;
    for (const auto &group : split(s, ';')) {
        std::vector<Level> levels;
        for (const auto &tok : split(group, 'x')) levels.push_back(static_cast<Level>(to_uint(tok, "grouping")));
        out.push_back(std::move(levels));
    }
    return out;
}

/// "2:8,3:1" -> {2: 8, 3: 1}
std::map<Level, std::size_t> parse_quota(const std::string &s) {
    std::map<Level, std::size_t> out;
    for (const auto &item : split(s, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParameterError("quota entries are level:count");
        out[static_cast<Level>(to_uint(item.substr(0, colon), "quota level"))] = to_uint(item.substr(colon + 1), "quota count");
    }
    return out;
}

Construction run_pipeline(const std::string &pipeline, const Params &p) {
    if (pipeline == "thm1")
        return thm1_family(p.num("M"), p.num("N"), parse_strategy(p.str("strategy", "auto")));
    if (pipeline == "thm2")
        return thm2_family(static_cast<Level>(p.num("d")), p.num("M"), p.num("N"), parse_strategy(p.str("strategy", "auto")));
    if (pipeline == "thm3") return thm3_family(p.num("m"), p.num("n"));
    if (pipeline == "thm4") return thm4_family(static_cast<Level>(p.num("d")), p.num("m"), p.num("n"));
    if (pipeline == "thm7")
        return thm7_family(p.num("k"), parse_levels(p.str("factors")), parse_groupings(p.str("replace", "")));
    if (pipeline == "thm8") {
        const DifferenceScheme ds = parse_scheme(p.str("scheme"));
        if (!p.has("with")) return thm8_host(ds);
        Thm8Options opt;
        if (p.has("keep")) opt.keep = parse_indices(p.str("keep"));
        if (p.has("delete")) opt.delete_quota = parse_quota(p.str("delete"));
        return thm8_family(ds, read_moa_file(p.str("with")).array, opt);
    }
    if (pipeline == "cor-dn")
        return cor_dn_family(static_cast<Level>(p.num("d")), static_cast<std::uint32_t>(p.num("n")), read_moa_file(p.str("with")).array);
    if (pipeline == "lemma1") return lemma1_juxtapose(read_moa_file(p.str("seed")).array, parse_scheme(p.str("scheme")));
    if (pipeline == "bush") {
        std::optional<std::size_t> cols;
        if (p.has("columns")) cols = p.num("columns");
        const auto k = p.num("k");
        MixedArray a = bush_oa(static_cast<std::uint32_t>(p.num("q")), static_cast<std::uint32_t>(k), cols);
        return {a, claim("bush_oa", a, k)};
    }
    if (pipeline == "trivial") {
        MixedArray a = trivial_moa(parse_levels(p.str("levels")));
        return {a, claim("trivial_moa", a, a.cols())};
    }
    if (pipeline == "product") {
        MixedArray a = product_construction(read_moa_file(p.str("left")).array, read_moa_file(p.str("right")).array);
        return {a, claim("product_construction", a, p.num("strength", 2))};
    }
    throw ParameterError("unknown pipeline '" + pipeline + "'");
}

std::string array_text(const Construction &c) {
    ArrayHeader h;
    h.strength = c.certificate.strength;
    return serialize(c.array, h);
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") std::cout << text;
    else write_text_file(path, text);
}

/// Verifies when still unverified; writes array and certificate unless verification failed without --unverified.
int finish_construction(Construction c, const std::string &out, const std::string &cert_out, bool allow_unverified) {
    if (c.certificate.status == CertificateStatus::Unverified) verify_certificate(c.certificate, c.array);
    const bool ok = c.certificate.status == CertificateStatus::Verified;
    std::cerr << c.certificate.construction << ": " << c.array.runs() << " x " << c.array.cols() << " over "
              << profile_string(c.array.levels()) << ", strength " << c.certificate.strength << ", MD "
              << (c.certificate.measured_min_distance ? std::to_string(*c.certificate.measured_min_distance) : "?") << ", "
              << to_string(c.certificate.status) << "\n";
    for (const auto &n : c.certificate.notes) std::cerr << "  " << n << "\n";
    if (!ok && !allow_unverified) {
        std::cerr << "refusing to emit an array that failed verification (pass --unverified to override)\n";
        return kVerificationFailed;
    }
    emit(array_text(c), out);
    if (!cert_out.empty()) write_text_file(cert_out, dump(to_json(c.certificate)));
    return ok ? kOk : kVerificationFailed;
}

std::string file_stem_for(const std::string &id) {
    std::string s = id;
    for (char &ch : s)
        if (ch == '/' || ch == '^') ch = ch == '/' ? '_' : '-';
    return s;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"oakit: mixed orthogonal arrays, irredundant arrays and k-uniform states"};
    app.require_subcommand(1);
    bool skip_self_test = false;
    app.add_flag("--skip-self-test", skip_self_test, "Do not check embedded seeds and fixtures on startup");

    std::string file, out, cert_out, with_file, format = "ket", pipeline, levels_arg, keep_arg;
    std::size_t strength = 2, k = 2, column = 0, runs = 0, min_dist = 0;
    std::optional<std::size_t> irredundant;
    std::uint64_t budget = 50'000'000;
    bool unverified = false, no_symmetry = false, distance_bearing = false;
    std::vector<std::string> params;
    std::string catalog_id, catalog_dir = ".";

    auto *verify = app.add_subcommand("verify", "Check strength (and irredundancy) of an array file");
    verify->add_option("file", file)->required();
    verify->add_option("--strength", strength)->required();
    verify->add_option("--irredundant", irredundant);

    auto *distance = app.add_subcommand("distance", "Distance spectrum and minimal distance");
    distance->add_option("file", file)->required();

    auto *construct = app.add_subcommand("construct", "Run a construction pipeline");
    construct->add_option("pipeline", pipeline, "thm1|thm2|thm3|thm4|thm7|thm8|cor-dn|lemma1|bush|trivial|product")->required();
    construct->add_option("-p,--param", params, "key=value");
    construct->add_option("-o,--output", out);
    construct->add_option("--certificate", cert_out);
    construct->add_flag("--unverified", unverified);

    auto *replace = app.add_subcommand("replace", "Expansive replacement of one column");
    replace->add_option("file", file)->required();
    replace->add_option("--column", column)->required();
    replace->add_option("--with", with_file)->required();
    replace->add_option("--strength", strength);
    replace->add_option("--keep", keep_arg, "Comma-separated columns of the replacement to keep");
    replace->add_flag("--distance-bearing", distance_bearing);
    replace->add_option("-o,--output", out);
    replace->add_option("--certificate", cert_out);
    replace->add_flag("--unverified", unverified);

    auto *state = app.add_subcommand("state", "Print the uniform superposition of the rows");
    state->add_option("file", file)->required();
    state->add_option("--format", format)->check(CLI::IsMember({"ket", "json"}));

    auto *uniformity = app.add_subcommand("uniformity", "Exact k-uniformity check over all k-subsets");
    uniformity->add_option("file", file)->required();
    uniformity->add_option("--k", k)->required();

    auto *search = app.add_subcommand("search", "Backtracking search for an MOA");
    search->add_option("--runs", runs)->required();
    search->add_option("--levels", levels_arg)->required();
    search->add_option("--strength", strength)->required();
    search->add_option("--min-distance", min_dist);
    search->add_option("--budget", budget);
    search->add_flag("--no-symmetry-breaking", no_symmetry);
    search->add_option("-o,--output", out);

    auto *feasible = app.add_subcommand("feasible", "Counting test for five-column IrMOAs of strength 2");
    feasible->add_option("--levels", levels_arg)->required();

    auto *catalog = app.add_subcommand("catalog", "Registry of reproducible families");
    catalog->require_subcommand(1);
    auto *catalog_list = catalog->add_subcommand("list", "List registry entries");
    auto *catalog_build_cmd = catalog->add_subcommand("build", "Build one entry, or every buildable entry when no id is given");
    catalog_build_cmd->add_option("id", catalog_id);
    catalog_build_cmd->add_option("-d,--dir", catalog_dir, "Output directory");

    auto *self_test_cmd = app.add_subcommand("self-test", "Check embedded seeds and fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParameterError;
    }

    try {
        if (!skip_self_test || *self_test_cmd) {
            bool all_ok = true;
            for (const auto &item : self_test()) {
                if (*self_test_cmd) std::cerr << (item.ok ? "ok   " : "FAIL ") << item.id << ": " << item.detail << "\n";
                if (!item.ok) {
                    std::cerr << "self-test failed for " << item.id << ": " << item.detail << "\n";
                    all_ok = false;
                }
            }
            if (!all_ok) return kVerificationFailed;
            if (*self_test_cmd) return kOk;
        }

        if (*verify) {
            const MixedArray a = read_moa_file(file).array;
            const Json report = verification_report(a, strength, irredundant);
            std::cout << dump(report);
            bool ok = report["strength"]["holds"].get<bool>();
            if (irredundant) ok = ok && report["irredundant"]["holds"].get<bool>();
            std::cerr << file << ": " << (ok ? "passes" : "fails") << "\n";
            return ok ? kOk : kVerificationFailed;
        }
        if (*distance) {
            const MixedArray a = read_moa_file(file).array;
            Json j = to_json(distance_spectrum(a));
            j["schema"] = "oakit-report-v1";
            std::cout << dump(j);
            return kOk;
        }
        if (*construct) {
            Params p(params);
            Construction c = run_pipeline(pipeline, p);
            p.reject_unused();
            return finish_construction(std::move(c), out, cert_out, unverified);
        }
        if (*replace) {
            const MixedArray host = read_moa_file(file).array;
            ColumnReplacement rep{column, read_moa_file(with_file).array, std::nullopt, distance_bearing};
            if (!keep_arg.empty()) rep.keep = parse_indices(keep_arg);
            return finish_construction(expansive_replace(host, ReplacementPlan{strength, {rep}}), out, cert_out, unverified);
        }
        if (*state) {
            const SparseState s = emit_state(read_moa_file(file).array);
            if (format == "json") std::cout << dump(to_json(s));
            else std::cout << render_kets(s) << "\n";
            std::cerr << s.terms() << " kets, amplitude 1/sqrt(" << s.terms() << ")"
                      << (s.has_duplicates() ? ", duplicate kets present" : "") << "\n";
            return kOk;
        }
        if (*uniformity) {
            const UniformityReport u = verify_k_uniform(read_moa_file(file).array, k);
            std::cout << dump(to_json(u));
            std::cerr << u.subsets_passed << "/" << u.subsets_checked << " subsets pass; " << (u.holds ? "" : "not ") << k
                      << "-uniform\n";
            return u.holds ? kOk : kVerificationFailed;
        }
        if (*search) {
            SearchSpec spec{runs, parse_levels(levels_arg), strength, min_dist, budget, !no_symmetry};
            const SearchResult res = search_moa(spec);
            std::cerr << "search: " << to_string(res.outcome) << " after " << res.nodes << " nodes"
                      << (res.detail.empty() ? "" : "; " + res.detail) << "\n";
            if (res.outcome == SearchOutcome::Infeasible) return kParameterError;
            if (!res.array) {
                std::cout << dump(Json{{"schema", "oakit-report-v1"},
                                       {"kind", "search"},
                                       {"outcome", to_string(res.outcome)},
                                       {"nodes", res.nodes},
                                       {"detail", res.detail}});
                return kVerificationFailed;
            }
            ArrayHeader h;
            h.strength = strength;
            emit(serialize(*res.array, h), out);
            return kOk;
        }
        if (*feasible) {
            const FeasibilityVerdict v = feasibility_5col(parse_levels(levels_arg));
            std::cout << dump(Json{{"schema", "oakit-report-v1"},
                                   {"kind", "feasibility"},
                                   {"levels", parse_levels(levels_arg)},
                                   {"verdict", to_string(v.verdict)},
                                   {"run_multiple", v.run_multiple},
                                   {"run_cap", v.run_cap},
                                   {"reason", v.reason}});
            std::cerr << to_string(v.verdict) << ": " << v.reason << "\n";
            return kOk;
        }
        if (*catalog_list) {
            Json j = Json::array();
            for (const auto &e : catalog_entries()) j.push_back(to_json(e));
            std::cout << dump(j);
            return kOk;
        }
        if (*catalog_build_cmd) {
            std::vector<std::string> ids;
            if (!catalog_id.empty()) ids.push_back(catalog_id);
            else
                for (const auto &e : catalog_entries())
                    if (e.buildable()) ids.push_back(e.id);
            std::filesystem::create_directories(catalog_dir);
            for (const auto &id : ids) {
                const Construction c = catalog_build(id);
                const auto base = std::filesystem::path(catalog_dir) / file_stem_for(id);
                write_text_file(base.string() + ".moa", array_text(c));
                write_text_file(base.string() + ".cert.json", dump(to_json(c.certificate)));
                std::cerr << id << ": " << c.array.runs() << " x " << c.array.cols() << " over " << profile_string(c.array.levels())
                          << ", MD " << *c.certificate.measured_min_distance << " -> " << base.string() << ".moa\n";
            }
            return kOk;
        }
    } catch (const MissingSeedError &e) {
        std::cerr << "missing seed: " << e.what() << "\n";
        return kMissingSeed;
    } catch (const VerificationError &e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const FormatError &e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kParameterError;
    } catch (const ParameterError &e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kParameterError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParameterError;
    }
    return kParameterError;
}
