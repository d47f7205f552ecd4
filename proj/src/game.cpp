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

#include "entangle/game.hpp"

#include "entangle/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace entangle {

std::string
to_string(Variant v)
{
    return v == Variant::Standard ? "standard" : "generalized";
}

std::optional<Variant>
parse_variant(std::string_view s)
{
    if (s == "standard") return Variant::Standard;
    if (s == "generalized") return Variant::Generalized;
    return std::nullopt;
}

std::string
to_string(const Position& p)
{
    std::string s = "(" + std::to_string(p.v) + ",{";
    bool first = true;
    for (Vertex c : members(p.cops)) {
        if (!first) s += ",";
        s += std::to_string(c);
        first = false;
    }
    s += p.turn == Turn::Cops ? "},Cops)" : "},Robber)";
    return s;
}

std::vector<Position>
cops_moves(const Position& pos, int k, Variant variant)
{
    if (pos.turn != Turn::Cops) throw ContractViolation("cops_moves called at a Robber position " + to_string(pos));
    if (popcount(pos.cops) > k) throw DomainError("position " + to_string(pos) + " has more than k cops");

    const VertexSet here = bit(pos.v);
    std::vector<Position> out;
    auto emit = [&](VertexSet c) { out.push_back({pos.v, c, Turn::Robber}); };

    if (variant == Variant::Standard) {
        emit(pos.cops);
        if (popcount(pos.cops) < k && !(pos.cops & here)) emit(pos.cops | here);
        for (Vertex x : members(pos.cops)) emit((pos.cops & ~bit(x)) | here);
    } else {
        // Walk every subset of the placed cops, the empty one included.
        VertexSet sub = pos.cops;
        while (true) {
            emit(sub);
            if (popcount(sub | here) <= k) emit(sub | here);
            if (sub == 0) break;
            sub = (sub - 1) & pos.cops;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Position>
robber_moves(const Position& pos, const Graph& g)
{
    if (pos.turn != Turn::Robber) throw ContractViolation("robber_moves called at a Cops position " + to_string(pos));
    if (!g.has_vertex(pos.v)) throw DomainError("robber vertex " + std::to_string(pos.v) + " not in graph");
    std::vector<Position> out;
    for (Vertex w : members(g.successors(pos.v) & ~pos.cops)) out.push_back({w, pos.cops, Turn::Cops});
    return out;
}

std::uint64_t
position_count(int n, int k)
{
    unsigned __int128 binom = 1, total = 0;
    for (int i = 0; i <= k && i <= n; ++i) {
        if (i > 0) binom = binom * (n - i + 1) / i;
        total += binom;
    }
    total *= 2 * static_cast<unsigned>(n);
    return total > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(total);
}

std::uint64_t
arena_node_limit()
{
    if (const char* env = std::getenv("ENTANGLE_MAX_NODES")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 5'000'000;
}

namespace {

void
cop_sets(const std::vector<Vertex>& vs, std::size_t from, int room, VertexSet acc, std::vector<VertexSet>& out)
{
    out.push_back(acc);
    if (room == 0) return;
    for (std::size_t i = from; i < vs.size(); ++i) cop_sets(vs, i + 1, room - 1, acc | bit(vs[i]), out);
}

} // namespace

Arena::Arena(const Graph& g, int k, Variant variant) : graph_(g), k_(k), variant_(variant)
{
    const int n = g.order();
    if (k < 0 || k > n) {
        throw DomainError("cop count " + std::to_string(k) + " outside 0.." + std::to_string(n));
    }
    const std::uint64_t count = position_count(n, k);
    if (count + 1 > arena_node_limit()) {
        throw SizeLimitError("arena would have " + std::to_string(count) + " positions, limit is " +
                             std::to_string(arena_node_limit()) + " (ENTANGLE_MAX_NODES)");
    }

    const auto vs = g.vertices();
    std::vector<VertexSet> sets;
    cop_sets(vs, 0, k, 0, sets);
    positions_.reserve(count);
    for (Vertex v : vs) {
        for (VertexSet c : sets) {
            positions_.push_back({v, c, Turn::Cops});
            positions_.push_back({v, c, Turn::Robber});
        }
    }
    std::sort(positions_.begin(), positions_.end());

    offsets_.reserve(size() + 1);
    offsets_.push_back(0);
    for (Vertex v : vs) targets_.push_back(*find({v, 0, Turn::Cops}));
    offsets_.push_back(static_cast<std::uint32_t>(targets_.size()));
    for (const Position& p : positions_) {
        const auto next = p.turn == Turn::Cops ? cops_moves(p, k, variant) : robber_moves(p, g);
        for (const Position& q : next) targets_.push_back(*find(q));
        offsets_.push_back(static_cast<std::uint32_t>(targets_.size()));
    }
}

std::optional<Arena::Node>
Arena::find(const Position& p) const
{
    auto it = std::lower_bound(positions_.begin(), positions_.end(), p);
    if (it == positions_.end() || *it != p) return std::nullopt;
    return static_cast<Node>(it - positions_.begin() + 1);
}

std::size_t
WinningRegion::size() const
{
    return static_cast<std::size_t>(std::count_if(rank.begin(), rank.end(), [](auto r) { return r != kOutside; }));
}

WinningRegion
solve(const Arena& arena)
{
    using Node = Arena::Node;
    const std::size_t n = arena.size();

    std::vector<std::uint32_t> pred_offsets(n + 1, 0);
    for (Node u = 0; u < n; ++u) {
        for (Node v : arena.successors(u)) ++pred_offsets[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) pred_offsets[i + 1] += pred_offsets[i];
    std::vector<Node> preds(pred_offsets[n]);
    {
        auto fill = pred_offsets;
        for (Node u = 0; u < n; ++u) {
            for (Node v : arena.successors(u)) preds[fill[v]++] = u;
        }
    }

    WinningRegion region;
    region.rank.assign(n, WinningRegion::kOutside);
    std::vector<std::uint32_t> pending(n, 0);
    std::deque<Node> queue;
    for (Node u = 0; u < n; ++u) {
        pending[u] = static_cast<std::uint32_t>(arena.successors(u).size());
        if (arena.owner(u) == Turn::Robber && pending[u] == 0) {
            region.rank[u] = 0;
            queue.push_back(u);
        }
    }
    while (!queue.empty()) {
        const Node x = queue.front();
        queue.pop_front();
        for (std::uint32_t i = pred_offsets[x]; i < pred_offsets[x + 1]; ++i) {
            const Node p = preds[i];
            if (region.rank[p] != WinningRegion::kOutside) continue;
            if (arena.owner(p) == Turn::Cops || --pending[p] == 0) {
                region.rank[p] = region.rank[x] + 1;
                queue.push_back(p);
            }
        }
    }
    return region;
}

bool
cops_win(const Graph& g, int k, Variant variant)
{
    const Arena arena(g, k, variant);
    return solve(arena).contains(Arena::kInitial);
}

} // namespace entangle
