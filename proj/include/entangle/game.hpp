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

#pragma once

#include "entangle/graph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace entangle {

enum class Turn : std::uint8_t { Cops = 0, Robber = 1 };

/**
 * Rule set for Cops' moves. Standard is the entanglement game proper (skip,
 * add a cop on the robber, move one placed cop onto the robber). Generalized
 * additionally lets Cops retire any subset of their placed cops in the same
 * move.
 */
enum class Variant : std::uint8_t { Standard, Generalized };

std::string to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view s);

/**
 * Game position: robber vertex, cop locations, player to move. The default
 * ordering (v, cops, turn) is the canonical key used for every deterministic
 * ordering of positions.
 */
struct Position
{
    Vertex v = 0;
    VertexSet cops = 0;
    Turn turn = Turn::Cops;

    friend auto operator<=>(const Position&, const Position&) = default;
};

std::string to_string(const Position& p);

/** Legal Cops moves from `pos`, sorted by canonical key, duplicates removed. */
std::vector<Position> cops_moves(const Position& pos, int k, Variant variant);

/** Robber moves from `pos`: one per free out-neighbour. Empty means caught. */
std::vector<Position> robber_moves(const Position& pos, const Graph& g);

/** Number of positions of the game on n vertices with k cops: 2 n sum_{i<=k} C(n,i). */
std::uint64_t position_count(int n, int k);

/** Arena size guard, overridable through ENTANGLE_MAX_NODES. */
std::uint64_t arena_node_limit();

/**
 * Explicit game graph. Node 0 is the Robber-owned initial node whose
 * successors are the opening positions (v0, {}, Cops); nodes 1.. are all
 * positions sorted by canonical key, so successor lists are sorted as well.
 */
class Arena
{
public:
    using Node = std::uint32_t;
    static constexpr Node kInitial = 0;

    Arena(const Graph& g, int k, Variant variant);

    const Graph& graph() const noexcept { return graph_; }
    int k() const noexcept { return k_; }
    Variant variant() const noexcept { return variant_; }

    /** Node count including the initial node. */
    std::size_t size() const noexcept { return positions_.size() + 1; }
    std::size_t edge_count() const noexcept { return targets_.size(); }

    const Position& position(Node n) const { return positions_.at(n - 1); }

    /** Player choosing the successor at node n. */
    Turn owner(Node n) const noexcept { return n == kInitial ? Turn::Robber : positions_[n - 1].turn; }

    std::span<const Node> successors(Node n) const noexcept
    {
        return {targets_.data() + offsets_[n], targets_.data() + offsets_[n + 1]};
    }

    std::optional<Node> find(const Position& p) const;

private:
    Graph graph_;
    int k_;
    Variant variant_;
    std::vector<Position> positions_;
    std::vector<std::uint32_t> offsets_;
    std::vector<Node> targets_;
};

inline Arena build_arena(const Graph& g, int k, Variant variant) { return Arena(g, k, variant); }

/** Nodes from which Cops force a finite play, with the attractor stage of each. */
struct WinningRegion
{
    static constexpr std::int32_t kOutside = -1;

    /** rank[n] is the stage at which node n was attracted, or kOutside. */
    std::vector<std::int32_t> rank;

    bool contains(Arena::Node n) const { return rank.at(n) != kOutside; }
    std::size_t size() const;
};

/** Least fixpoint attractor of the successor-less Robber nodes. O(nodes + edges). */
WinningRegion solve(const Arena& arena);

/** Whether Cops win the game on g with k cops under the given rules. */
bool cops_win(const Graph& g, int k, Variant variant = Variant::Standard);

inline constexpr int kOracleMaxOrder = 5;

/**
 * Independent check of cops_win for the standard rules on at most five
 * vertices, by memoized depth-bounded minimax over positions. Shares no code
 * with the arena or the solver.
 */
bool oracle_cops_win(const Graph& g, int k);

} // namespace entangle
