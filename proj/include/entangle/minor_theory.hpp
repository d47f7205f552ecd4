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

#include "entangle/entanglement.hpp"
#include "entangle/graph.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace entangle {

/** Memoizes entanglement by isomorphism class. Safe for concurrent use. */
class EntanglementCache
{
public:
    int value(const Graph& g);

private:
    std::mutex mutex_;
    std::map<CanonicalCode, int> values_;
};

/** Outcome of checking one claim on one instance. */
struct TheoremReport
{
    std::string theorem;
    /** Instance description: graphs (graph6 or edge list) and the operation applied. */
    std::vector<std::pair<std::string, std::string>> instance;
    std::string relation;
    std::vector<std::pair<std::string, std::int64_t>> measured;
    bool pass = false;
    /** Explanation of a failure; empty on pass. */
    std::string counterexample;
};

inline constexpr int kTheoremMaxOrder = 6;

/** Ent(G) <= Ent(H) for a labeled subgraph G of H. */
TheoremReport check_subgraph_lemma(const Graph& g, const Graph& h, EntanglementCache* cache = nullptr);

/** One report per one-step minor G of H: Ent(G) <= Ent(H). */
std::vector<TheoremReport> check_minor_monotonicity(const Graph& h, EntanglementCache* cache = nullptr);

/**
 * One report per one-step minor G of H: Ent(H) - 1 <= Ent(G). Each report
 * also confirms that H minus one endpoint of the operated edge (or minus the
 * deleted vertex) is a labeled subgraph of G.
 */
std::vector<TheoremReport> check_direct_minor_bound(const Graph& h, EntanglementCache* cache = nullptr);

/** One report per vertex v of H: Ent(H) <= Ent(H - v) + 1. */
std::vector<TheoremReport> check_vertex_deletion(const Graph& h, EntanglementCache* cache = nullptr);

/** Standard and generalized rules agree on the winner for every k in 0..|V|. */
TheoremReport check_variant_equivalence(const Graph& g);

/** The strategy extracted at k = Ent(H) passes verify_strategy. */
TheoremReport check_strategy_roundtrip(const Graph& h);

/**
 * Cops strategy for the generalized game on the contraction G of H, built
 * from a winning positional strategy for the standard game on H by
 * simulating every play on G as a play on H.
 *
 * The memory holds the matched H position (h, C_H) at Robber's turn and the
 * kind of the last Robber move (outside, entering or leaving the merged
 * vertex z). After each exchange the step function checks
 *   g = f(h) and C_G = f(C_H), and
 *   if g = z: z in C_G, h in C_H and exactly one of a, b in C_H.
 * A broken check, an undefined or illegal H move, or an a/b alternation
 * longer than twice the H arena throws TransferError with the simulated
 * H moves of the failing step.
 */
class TransferredStrategy : public ReactiveStrategy
{
public:
    enum Locality : std::int64_t { kStart = 0, kOutside = 1, kEntering = 2, kLeaving = 3 };

    TransferredStrategy(Strategy sigma, ContractionMap map, int k);

    Memory initial_memory() const override { return {kStart}; }
    std::optional<std::pair<Memory, Position>> step(const Memory& memory, const Position& at) const override;

    /** Number of invariant checks performed so far. */
    std::uint64_t invariant_checks() const noexcept { return checks_; }

    const ContractionMap& map() const noexcept { return map_; }

private:
    struct Trace;

    Position cops_reply(const Position& h_at, Trace& trace) const;
    Position robber_step(const Position& h_at, Vertex to, Trace& trace) const;
    Position alternate(Vertex entry, VertexSet cops, Trace& trace) const;

    Strategy sigma_;
    ContractionMap map_;
    int k_;
    std::uint64_t alternation_bound_;
    mutable std::uint64_t checks_ = 0;
};

TransferredStrategy transfer_strategy(const Strategy& sigma_h, const ContractionMap& map, int k);

/**
 * For every contractible edge of H: the strategy transferred from the
 * certificate of Ent(H) wins the generalized game on the contraction with
 * Ent(H) cops.
 */
std::vector<TheoremReport> check_transfer(const Graph& h, EntanglementCache* cache = nullptr);

struct ObstructionMember
{
    Graph graph;
    CanonicalCode code;
    int entanglement = 0;
};

/** Minor-minimal graphs of entanglement above k found among the examined graphs. */
struct ObstructionSet
{
    int k = 0;
    int n_max = 0;
    /** Sorted by (order, canonical code). */
    std::vector<ObstructionMember> members;
    /** True when the examined graphs were every graph with at most n_max vertices. */
    bool complete = false;
    std::size_t examined = 0;
    std::size_t duplicates = 0;
    /** Whether every member has entanglement exactly k + 1. */
    bool all_exactly_k_plus_1 = true;
};

/** Searches `graphs` (isomorphic duplicates are dropped and counted). */
ObstructionSet find_obstructions(int k, int n_max, const std::vector<Graph>& graphs, bool complete = false,
                                 EntanglementCache* cache = nullptr);

/** Searches every graph with at most n_max <= 6 vertices. */
ObstructionSet find_obstructions(int k, int n_max, EntanglementCache* cache = nullptr);

} // namespace entangle
