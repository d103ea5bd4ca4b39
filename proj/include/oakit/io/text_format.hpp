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

// "moa v1" text format:
//
//   moa v1
//   runs <r>
//   levels <d1> ... <dN>
//   kind ds <d> <t> | kind hadamard      (optional)
//   strength <k>                         (optional, advisory)
//   rows:
//   <r lines of N space-separated integers>
//
// '#' comment lines may appear anywhere before "rows:". Output is canonical:
// single spaces, no trailing whitespace, LF line endings.

#pragma once

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "oakit/core/mixed_array.hpp"

namespace oakit {

struct ArrayHeader {
    /// Tokens following "kind", e.g. "ds 3 3" or "hadamard".
    std::optional<std::string> kind;
    std::optional<std::size_t> strength;

    bool operator==(const ArrayHeader &) const = default;
};

struct ParsedArray {
    MixedArray array;
    ArrayHeader header;
};

inline std::string serialize(const MixedArray &array, const ArrayHeader &header = {}) {
    std::string out = "moa v1\nruns " + std::to_string(array.runs()) + "\nlevels";
    for (Level d : array.levels()) out += " " + std::to_string(d);
    out += "\n";
    if (header.kind) out += "kind " + *header.kind + "\n";
    if (header.strength) out += "strength " + std::to_string(*header.strength) + "\n";
    out += "rows:\n";
    for (std::size_t i = 0; i < array.runs(); ++i) {
        auto row = array.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        if (end > pos) out.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

inline std::uint64_t parse_uint(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw FormatError("expected a non-negative integer, got '" + std::string(token) + "'", line_no);
    return value;
}

}  // namespace detail

inline ParsedArray parse_moa(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    std::size_t idx = 0;
    auto next_header = [&]() -> std::pair<std::vector<std::string_view>, std::size_t> {
        while (idx < lines.size()) {
            std::string_view line = lines[idx++];
            if (line.empty() || line.front() == '#') continue;
            return {detail::split_spaces(line), idx};
        }
        throw FormatError("unexpected end of input before 'rows:'", idx);
    };

    auto [magic, magic_line] = next_header();
    if (magic.size() != 2 || magic[0] != "moa" || magic[1] != "v1") throw FormatError("expected 'moa v1'", magic_line);

    auto [runs_tok, runs_line] = next_header();
    if (runs_tok.size() != 2 || runs_tok[0] != "runs") throw FormatError("expected 'runs <r>'", runs_line);
    const std::uint64_t runs = detail::parse_uint(runs_tok[1], runs_line);
    if (runs == 0) throw FormatError("runs must be positive", runs_line);

    auto [levels_tok, levels_line] = next_header();
    if (levels_tok.size() < 2 || levels_tok[0] != "levels") throw FormatError("expected 'levels <d1> ...'", levels_line);
    std::vector<Level> levels;
    for (std::size_t t = 1; t < levels_tok.size(); ++t) {
        const auto d = detail::parse_uint(levels_tok[t], levels_line);
        if (d < 2 || d > 0xFFFFFFFFull) throw FormatError("level out of range", levels_line);
        levels.push_back(static_cast<Level>(d));
    }

    ArrayHeader header;
    while (true) {
        auto [tok, line_no] = next_header();
        if (tok.size() == 1 && tok[0] == "rows:") break;
        if (tok[0] == "kind" && tok.size() >= 2) {
            if (header.kind) throw FormatError("duplicate 'kind' line", line_no);
            std::string kind;
            for (std::size_t t = 1; t < tok.size(); ++t) kind += (t > 1 ? " " : "") + std::string(tok[t]);
            header.kind = std::move(kind);
        } else if (tok[0] == "strength" && tok.size() == 2) {
            if (header.strength) throw FormatError("duplicate 'strength' line", line_no);
            header.strength = detail::parse_uint(tok[1], line_no);
        } else {
            throw FormatError("unexpected header line '" + std::string(lines[line_no - 1]) + "'", line_no);
        }
    }

    std::vector<Symbol> cells;
    cells.reserve(runs * levels.size());
    for (std::uint64_t i = 0; i < runs; ++i) {
        if (idx >= lines.size()) throw FormatError("expected " + std::to_string(runs) + " rows", idx + 1);
        const std::size_t line_no = idx + 1;
        auto tok = detail::split_spaces(lines[idx++]);
        if (tok.size() != levels.size())
            throw FormatError("row has " + std::to_string(tok.size()) + " entries, expected " + std::to_string(levels.size()),
                              line_no);
        for (std::size_t j = 0; j < tok.size(); ++j) {
            const auto s = detail::parse_uint(tok[j], line_no);
            if (s >= levels[j]) throw FormatError("symbol " + std::to_string(s) + " exceeds level of column " + std::to_string(j), line_no);
            cells.push_back(static_cast<Symbol>(s));
        }
    }
    for (; idx < lines.size(); ++idx)
        if (!lines[idx].empty()) throw FormatError("trailing content after rows", idx + 1);

    return ParsedArray{MixedArray(std::move(levels), std::move(cells)), std::move(header)};
}

inline ParsedArray read_moa_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_moa(buffer.str());
}

inline void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParameterError("cannot write '" + path + "'");
    out << content;
}

}  // namespace oakit
