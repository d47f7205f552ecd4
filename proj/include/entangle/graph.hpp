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

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entangle {

using Vertex = int;

/** Set of vertex ids, bit i standing for vertex i. */
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(Vertex v) noexcept { return VertexSet{1} << v; }
inline int popcount(VertexSet s) noexcept { return std::popcount(s); }

/** Ids in a vertex set, ascending. */
std::vector<Vertex> members(VertexSet s);

using Edge = std::pair<Vertex, Vertex>;

/**
 * Finite simple graph or digraph over vertex ids 0..63.
 *
 * Undirected graphs store every edge in both orientations so that games can
 * treat them as symmetric digraphs. Ids need not be contiguous: contraction
 * leaves a gap that is compacted only when serializing.
 */
class Graph
{
public:
    Graph() = default;

    /** Graph on vertices 0..n-1 without edges. */
    explicit Graph(int n, bool directed = false);

    static Graph from_edges(int n, bool directed, const std::vector<Edge>& edges);

    bool directed() const noexcept { return directed_; }
    VertexSet vertex_set() const noexcept { return vertices_; }
    std::vector<Vertex> vertices() const { return members(vertices_); }
    int order() const noexcept { return popcount(vertices_); }

    /** Number of arcs for a digraph, number of unordered edges otherwise. */
    std::size_t edge_count() const noexcept;

    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < kMaxVertices && (vertices_ & bit(v)); }
    bool has_edge(Vertex u, Vertex v) const noexcept { return has_vertex(u) && has_vertex(v) && (out_[u] & bit(v)); }

    /** Out-neighbourhood of v; no range check. */
    VertexSet successors(Vertex v) const noexcept { return out_[v]; }

    /** Edges ordered by (u, v); undirected edges reported once with u < v. */
    std::vector<Edge> edges() const;

    /** True when no vertex has an incident edge. */
    bool edgeless() const noexcept;

    void add_vertex(Vertex v);
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    void remove_vertex(Vertex v);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    bool directed_ = false;
    VertexSet vertices_ = 0;
    std::array<VertexSet, kMaxVertices> out_{};
};

/** Neighbours of v (out-neighbours for a digraph), ascending. */
std::vector<Vertex> neighbors(const Graph& g, Vertex v);

/** G minus edge (u,v); both orientations are removed in an undirected graph. */
Graph delete_edge(const Graph& g, Vertex u, Vertex v);

/** G minus v and its incident edges. Other ids are unchanged. */
Graph delete_vertex(const Graph& g, Vertex v);

/**
 * Vertex map induced by contracting edge (a,b) of `source` into `merged`.
 * Every vertex other than a and b maps to itself.
 */
struct ContractionMap
{
    Graph source;
    Graph target;
    Edge contracted;
    Vertex merged = 0;

    Vertex operator()(Vertex v) const noexcept
    {
        return v == contracted.first || v == contracted.second ? merged : v;
    }

    VertexSet image(VertexSet s) const noexcept;

    /** Recomputes the contraction from `source` and checks it against `target`. */
    bool valid() const;
};

struct Contraction
{
    Graph graph;
    ContractionMap map;
};

/**
 * Contracts undirected edge (u,v). The merged vertex keeps id min(u,v) and
 * inherits both neighbourhoods; loops and parallel edges vanish.
 */
Contraction contract_edge(const Graph& g, Vertex u, Vertex v);

struct MinorOperation
{
    enum class Kind { DeleteEdge, ContractEdge, DeleteIsolatedVertex };

    Kind kind;
    Vertex u = 0;
    Vertex v = 0; // unused for DeleteIsolatedVertex

    std::string to_string() const;

    friend bool operator==(const MinorOperation&, const MinorOperation&) = default;
};

Graph apply(const Graph& g, const MinorOperation& op);

struct MinorStep
{
    MinorOperation op;
    Graph result;
};

/**
 * Every single application of a minor operation to g: edge deletions, then
 * edge contractions (undirected graphs only), then isolated vertex deletions.
 */
std::vector<MinorStep> one_step_minors(const Graph& g);

/** Canonical code: equal for two graphs iff they are isomorphic. */
using CanonicalCode = std::string;

inline constexpr int kCanonicalMaxOrder = 8;

/**
 * Lexicographically least adjacency bit string over all vertex orderings,
 * prefixed with the order and the directed flag. Throws SizeLimitError for
 * more than eight vertices.
 */
CanonicalCode canonical_form(const Graph& g);

/** The graph on 0..n-1 whose adjacency matrix is spelled out by `code`. */
Graph from_canonical(const CanonicalCode& code);

inline constexpr int kMinorSearchMaxOrder = 7;

/** Whether g is (isomorphic to) a minor of h. h may have at most seven vertices. */
bool is_minor(const Graph& g, const Graph& h);

/** Whether g is a labeled subgraph of h (vertex and edge inclusion). */
bool is_subgraph(const Graph& g, const Graph& h);

/** Copy of g relabeled so that its vertices are 0..n-1, order preserved. */
Graph compacted(const Graph& g);

/** Relabels vertex i to perm[i]; perm must be a permutation of 0..n-1 on a compact graph. */
Graph permuted(const Graph& g, const std::vector<Vertex>& perm);

// Text formats

Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/** One graph per non-empty line; a leading ">>graph6<<" header is tolerated. */
std::vector<Graph> parse_graph6_lines(std::string_view text);

/** Short single-line description: graph6 for graphs, edge-list for digraphs. */
std::string describe(const Graph& g);

// Enumeration

inline constexpr int kEnumerateMaxOrder = 6;
inline constexpr int kEnumerateDigraphMaxOrder = 4;

/**
 * One canonical representative per isomorphism class of graphs (or digraphs)
 * with 1..max_order vertices, ordered by (order, canonical code).
 */
std::vector<Graph> enumerate_graphs(int max_order, bool directed = false);

} // namespace entangle
