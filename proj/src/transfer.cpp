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
#include "entangle/minor_theory.hpp"

#include <algorithm>

namespace entangle {

struct TransferredStrategy::Trace
{
    std::vector<std::string> moves;

    [[noreturn]] void fail(const std::string& what) const
    {
        std::string msg = "strategy transfer: " + what + "; simulated H moves:";
        for (const auto& m : moves) msg += " " + m;
        throw TransferError(msg);
    }
};

TransferredStrategy::TransferredStrategy(Strategy sigma, ContractionMap map, int k)
    : sigma_(std::move(sigma)), map_(std::move(map)), k_(k)
{
    if (map_.source.directed()) throw UnsupportedOperation("strategy transfer needs an undirected source graph");
    if (!map_.valid()) throw DomainError("contraction map does not describe a contraction of its source");
    if (sigma_.k != k || sigma_.variant != Variant::Standard) {
        throw DomainError("source strategy must be a standard-rules strategy for " + std::to_string(k) + " cops");
    }
    alternation_bound_ = 2 * (position_count(map_.source.order(), k) + 1);
}

Position
TransferredStrategy::cops_reply(const Position& h_at, Trace& trace) const
{
    auto reply = sigma_.at(h_at);
    if (!reply) trace.fail("source strategy undefined at " + to_string(h_at));
    const auto legal = cops_moves(h_at, k_, Variant::Standard);
    if (!std::binary_search(legal.begin(), legal.end(), *reply)) {
        trace.fail("source strategy plays illegal " + to_string(h_at) + " -> " + to_string(*reply));
    }
    trace.moves.push_back(to_string(*reply));
    return *reply;
}

Position
TransferredStrategy::robber_step(const Position& h_at, Vertex to, Trace& trace) const
{
    if (!map_.source.has_edge(h_at.v, to) || (h_at.cops & bit(to))) {
        trace.fail("Robber cannot move " + std::to_string(h_at.v) + " -> " + std::to_string(to) + " in H from " +
                   to_string(h_at));
    }
    Position next{to, h_at.cops, Turn::Cops};
    trace.moves.push_back(to_string(next));
    return next;
}

// Robber shuttles between a and b in H until the source strategy changes the
// cop set; the G move into z corresponds to this whole alternation.
Position
TransferredStrategy::alternate(Vertex entry, VertexSet cops, Trace& trace) const
{
    const auto [a, b] = map_.contracted;
    Position at{entry, cops, Turn::Cops};
    trace.moves.push_back(to_string(at));
    for (std::uint64_t steps = 0; steps < alternation_bound_; ++steps) {
        const Position reply = cops_reply(at, trace);
        if (reply.cops != cops) return reply;
        at = robber_step(reply, at.v == a ? b : a, trace);
    }
    trace.fail("a/b alternation exceeded " + std::to_string(alternation_bound_) + " steps");
}

std::optional<std::pair<Memory, Position>>
TransferredStrategy::step(const Memory& memory, const Position& at) const
{
    Trace trace;
    const Graph& h_graph = map_.source;
    const Graph& g_graph = map_.target;
    const auto [a, b] = map_.contracted;
    const Vertex z = map_.merged;
    const VertexSet ab = bit(a) | bit(b);

    if (at.turn != Turn::Cops) trace.fail("asked to move at Robber position " + to_string(at));
    if (memory.empty()) trace.fail("empty memory");
    const Vertex w = at.v;

    Position reply; // matched H position at Robber's turn after this exchange
    Locality tag;
    if (memory[0] == kStart) {
        if (memory.size() != 1 || at.cops != 0) trace.fail("opening position " + to_string(at) + " is not cop-free");
        if (w == z) {
            tag = kEntering;
            reply = alternate(a, 0, trace);
        } else {
            tag = kOutside;
            const Position h_at{w, 0, Turn::Cops};
            trace.moves.push_back(to_string(h_at));
            reply = cops_reply(h_at, trace);
        }
    } else {
        if (memory.size() != 3) trace.fail("malformed memory");
        const Position before{static_cast<Vertex>(memory[1]), static_cast<VertexSet>(memory[2]), Turn::Robber};
        trace.moves.push_back(to_string(before));
        const Vertex g = map_(before.v);
        ++checks_;
        if (map_.image(before.cops) != at.cops) {
            trace.fail("(COPS) broken: f(C_H) differs from C_G at " + to_string(at));
        }
        if (!g_graph.has_edge(g, w) || (at.cops & bit(w))) {
            trace.fail("observed G move " + std::to_string(g) + " -> " + std::to_string(w) + " is not a Robber move");
        }

        if (g != z && w != z) {
            tag = kOutside;
            reply = cops_reply(robber_step(before, w, trace), trace);
        } else if (w == z) {
            tag = kEntering;
            if (before.cops & ab) trace.fail("Robber enters z although a or b carries a cop");
            const Vertex entry = h_graph.has_edge(before.v, a) ? a : b;
            if (!h_graph.has_edge(before.v, entry)) trace.fail("no H edge from " + std::to_string(before.v) + " into {a,b}");
            Position first = robber_step(before, entry, trace);
            trace.moves.pop_back(); // alternate() records the entry position itself
            reply = alternate(first.v, first.cops, trace);
        } else {
            tag = kLeaving;
            const Vertex other = before.v == a ? b : a;
            if (h_graph.has_edge(before.v, w)) {
                reply = cops_reply(robber_step(before, w, trace), trace);
            } else {
                // Robber crosses ab first, Cops answer at the other end, then Robber leaves.
                const Position crossed = cops_reply(robber_step(before, other, trace), trace);
                reply = cops_reply(robber_step(crossed, w, trace), trace);
            }
        }
    }

    const Position emitted{w, map_.image(reply.cops), Turn::Robber};

    ++checks_;
    if (map_(reply.v) != w || emitted.cops != map_.image(reply.cops)) {
        trace.fail("(COPS) broken after exchange: H robber at " + std::to_string(reply.v) + ", G robber at " +
                   std::to_string(w));
    }
    if (w == z) {
        if (!(emitted.cops & bit(z)) || !(reply.cops & bit(reply.v)) || popcount(reply.cops & ab) != 1) {
            trace.fail("(Robber-Z) broken at matched positions " + to_string(emitted) + " / " + to_string(reply));
        }
    }
    return std::pair{Memory{tag, reply.v, static_cast<std::int64_t>(reply.cops)}, emitted};
}

TransferredStrategy
transfer_strategy(const Strategy& sigma_h, const ContractionMap& map, int k)
{
    return TransferredStrategy(sigma_h, map, k);
}

} // namespace entangle
