/*
 * Copyright 2026 The Entangle Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "entangle/errors.hpp"
#include "entangle/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace entangle {

namespace {

std::vector<std::string_view>
tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool
to_int(std::string_view s, int& out)
{
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && end == s.data() + s.size() && out >= 0;
}

std::string_view
trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Graph
parse_edge_list(std::string_view text)
{
    int declared = -1;
    bool directed = false;
    bool seen_content = false;
    std::vector<std::pair<Edge, std::size_t>> edges;
    int max_id = -1;

    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = tokens(line);
        if (tok.empty()) continue;

        if (tok[0] == "n") {
            if (seen_content) throw ParseError("header must precede all edges", lineno);
            if (tok.size() < 2 || tok.size() > 3 || !to_int(tok[1], declared)) {
                throw ParseError("expected header 'n <count> [directed]'", lineno);
            }
            if (tok.size() == 3) {
                if (tok[2] != "directed") throw ParseError("unknown header flag '" + std::string(tok[2]) + "'", lineno);
                directed = true;
            }
            if (declared > kMaxVertices) {
                throw ParseError("at most " + std::to_string(kMaxVertices) + " vertices supported", lineno);
            }
            seen_content = true;
            continue;
        }
        seen_content = true;
        int u = 0, v = 0;
        if (tok.size() != 2 || !to_int(tok[0], u) || !to_int(tok[1], v)) {
            throw ParseError("expected 'u v' with non-negative integer ids", lineno);
        }
        if (u == v) throw ParseError("self-loop " + std::to_string(u) + " " + std::to_string(v) + " rejected", lineno);
        if (u >= kMaxVertices || v >= kMaxVertices) {
            throw ParseError("vertex id exceeds " + std::to_string(kMaxVertices - 1), lineno);
        }
        if (declared >= 0 && (u >= declared || v >= declared)) {
            throw ParseError("vertex id outside declared count " + std::to_string(declared), lineno);
        }
        max_id = std::max({max_id, u, v});
        edges.push_back({{u, v}, lineno});
    }

    Graph g(declared >= 0 ? declared : max_id + 1, directed);
    for (auto& [e, line] : edges) {
        if (!g.has_edge(e.first, e.second)) g.add_edge(e.first, e.second);
    }
    return g;
}

std::string
to_edge_list(const Graph& g)
{
    const Graph c = compacted(g);
    std::ostringstream out;
    out << "n " << c.order();
    if (c.directed()) out << " directed";
    out << '\n';
    for (auto [u, v] : c.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph
parse_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    for (char ch : text) {
        if (ch < 63 || ch > 126) throw ParseError("graph6 byte " + std::to_string(static_cast<int>(ch)) + " outside 63..126");
    }
    if (text.empty()) throw ParseError("empty graph6 string");

    long n = 0;
    std::size_t header = 1;
    if (text[0] != 126) {
        n = text[0] - 63;
    } else if (text.size() >= 4 && text[1] != 126) {
        n = (long(text[1] - 63) << 12) | (long(text[2] - 63) << 6) | long(text[3] - 63);
        header = 4;
    } else {
        throw ParseError("graph6 orders beyond 258047 are not supported");
    }
    if (n > kMaxVertices) throw ParseError("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = header + (bits + 5) / 6;
    if (text.size() != expected) {
        throw ParseError("graph6 length " + std::to_string(text.size()) + " does not match order " + std::to_string(n) +
                         " (expected " + std::to_string(expected) + ")");
    }
    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = text[header + k / 6] - 63;
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string
to_graph6(const Graph& g)
{
    if (g.directed()) throw UnsupportedOperation("graph6 encodes undirected graphs only");
    const Graph c = compacted(g);
    const int n = c.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (c.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

std::vector<Graph>
parse_graph6_lines(std::string_view text)
{
    std::vector<Graph> out;
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return out;
}

std::string
describe(const Graph& g)
{
    if (!g.directed()) return to_graph6(g);
    std::string s = to_edge_list(g);
    std::replace(s.begin(), s.end(), '\n', ';');
    if (!s.empty() && s.back() == ';') s.pop_back();
    return s;
}

} // namespace entangle
