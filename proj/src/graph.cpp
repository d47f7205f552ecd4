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

#include "entangle/graph.hpp"

#include "entangle/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace entangle {

std::vector<Vertex>
members(VertexSet s)
{
    std::vector<Vertex> out;
    out.reserve(popcount(s));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n, bool directed) : directed_(directed)
{
    if (n < 0 || n > kMaxVertices) {
        throw DomainError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    }
    vertices_ = n == kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
}

Graph
Graph::from_edges(int n, bool directed, const std::vector<Edge>& edges)
{
    Graph g(n, directed);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::size_t
Graph::edge_count() const noexcept
{
    std::size_t arcs = 0;
    for (Vertex v : members(vertices_)) arcs += popcount(out_[v]);
    return directed_ ? arcs : arcs / 2;
}

std::vector<Edge>
Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u : members(vertices_)) {
        for (Vertex v : members(out_[u])) {
            if (directed_ || u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool
Graph::edgeless() const noexcept
{
    for (Vertex v : members(vertices_)) {
        if (out_[v]) return false;
    }
    return true;
}

void
Graph::add_vertex(Vertex v)
{
    if (v < 0 || v >= kMaxVertices) {
        throw DomainError("vertex id " + std::to_string(v) + " outside 0.." + std::to_string(kMaxVertices - 1));
    }
    vertices_ |= bit(v);
}

void
Graph::add_edge(Vertex u, Vertex v)
{
    if (!has_vertex(u) || !has_vertex(v)) {
        throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside the graph");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    out_[u] |= bit(v);
    if (!directed_) out_[v] |= bit(u);
}

void
Graph::remove_edge(Vertex u, Vertex v)
{
    if (!has_edge(u, v)) {
        throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
    }
    out_[u] &= ~bit(v);
    if (!directed_) out_[v] &= ~bit(u);
}

void
Graph::remove_vertex(Vertex v)
{
    if (!has_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in graph");
    vertices_ &= ~bit(v);
    out_[v] = 0;
    for (Vertex u : members(vertices_)) out_[u] &= ~bit(v);
}

std::vector<Vertex>
neighbors(const Graph& g, Vertex v)
{
    if (!g.has_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in graph");
    return members(g.successors(v));
}

Graph
delete_edge(const Graph& g, Vertex u, Vertex v)
{
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

Graph
delete_vertex(const Graph& g, Vertex v)
{
    Graph out = g;
    out.remove_vertex(v);
    return out;
}

VertexSet
ContractionMap::image(VertexSet s) const noexcept
{
    const VertexSet ab = bit(contracted.first) | bit(contracted.second);
    return (s & ab) ? (s & ~ab) | bit(merged) : s;
}

bool
ContractionMap::valid() const
{
    auto [a, b] = contracted;
    if (!source.has_edge(a, b) || merged != std::min(a, b)) return false;
    if (target.vertex_set() != ((source.vertex_set() & ~(bit(a) | bit(b))) | bit(merged))) return false;
    // Every edge of the target is the image of a source edge and vice versa.
    std::set<Edge> image_edges;
    for (auto [x, y] : source.edges()) {
        Vertex fx = (*this)(x), fy = (*this)(y);
        if (fx == fy) continue;
        if (!target.directed() && fx > fy) std::swap(fx, fy);
        image_edges.emplace(fx, fy);
    }
    auto target_edges = target.edges();
    return std::set<Edge>(target_edges.begin(), target_edges.end()) == image_edges;
}

Contraction
contract_edge(const Graph& g, Vertex u, Vertex v)
{
    if (g.directed()) throw UnsupportedOperation("edge contraction is only defined for undirected graphs");
    if (!g.has_edge(u, v)) {
        throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
    }
    const Vertex z = std::min(u, v);
    const Vertex gone = std::max(u, v);
    Graph out = g;
    const VertexSet inherited = g.successors(gone) & ~bit(z);
    out.remove_vertex(gone);
    for (Vertex w : members(inherited)) {
        if (!out.has_edge(z, w)) out.add_edge(z, w);
    }
    return Contraction{out, ContractionMap{g, out, Edge{u, v}, z}};
}

std::string
MinorOperation::to_string() const
{
    switch (kind) {
    case Kind::DeleteEdge:
        return "delete_edge(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case Kind::ContractEdge:
        return "contract_edge(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case Kind::DeleteIsolatedVertex:
        return "delete_isolated_vertex(" + std::to_string(u) + ")";
    }
    return "?";
}

Graph
apply(const Graph& g, const MinorOperation& op)
{
    switch (op.kind) {
    case MinorOperation::Kind::DeleteEdge:
        return delete_edge(g, op.u, op.v);
    case MinorOperation::Kind::ContractEdge:
        return contract_edge(g, op.u, op.v).graph;
    case MinorOperation::Kind::DeleteIsolatedVertex: {
        if (!g.has_vertex(op.u)) throw DomainError("vertex " + std::to_string(op.u) + " not in graph");
        bool isolated = g.successors(op.u) == 0;
        for (Vertex w : g.vertices()) isolated = isolated && !g.has_edge(w, op.u);
        if (!isolated) throw DomainError("vertex " + std::to_string(op.u) + " is not isolated");
        return delete_vertex(g, op.u);
    }
    }
    throw DomainError("unknown minor operation");
}

std::vector<MinorStep>
one_step_minors(const Graph& g)
{
    using Kind = MinorOperation::Kind;
    std::vector<MinorStep> out;
    const auto edges = g.edges();
    for (auto [u, v] : edges) {
        out.push_back({{Kind::DeleteEdge, u, v}, delete_edge(g, u, v)});
    }
    if (!g.directed()) {
        for (auto [u, v] : edges) {
            out.push_back({{Kind::ContractEdge, u, v}, contract_edge(g, u, v).graph});
        }
    }
    VertexSet touched = 0;
    for (auto [u, v] : edges) touched |= bit(u) | bit(v);
    for (Vertex v : members(g.vertex_set() & ~touched)) {
        out.push_back({{Kind::DeleteIsolatedVertex, v, 0}, delete_vertex(g, v)});
    }
    return out;
}

bool
is_minor(const Graph& g, const Graph& h)
{
    if (h.order() > kMinorSearchMaxOrder) {
        throw SizeLimitError("minor search limited to " + std::to_string(kMinorSearchMaxOrder) + " vertices");
    }
    if (g.directed() != h.directed()) return false;
    if (g.order() > h.order() || g.edge_count() > h.edge_count()) return false;

    const CanonicalCode goal = canonical_form(g);
    std::set<CanonicalCode> seen{canonical_form(h)};
    std::deque<Graph> frontier{h};
    if (*seen.begin() == goal) return true;
    while (!frontier.empty()) {
        Graph cur = std::move(frontier.front());
        frontier.pop_front();
        for (auto& step : one_step_minors(cur)) {
            // Minor operations never add vertices or edges.
            if (step.result.order() < g.order() || step.result.edge_count() < g.edge_count()) continue;
            CanonicalCode code = canonical_form(step.result);
            if (code == goal) return true;
            if (seen.insert(std::move(code)).second) frontier.push_back(std::move(step.result));
        }
    }
    return false;
}

bool
is_subgraph(const Graph& g, const Graph& h)
{
    if (g.directed() != h.directed()) return false;
    if ((g.vertex_set() & ~h.vertex_set()) != 0) return false;
    for (auto [u, v] : g.edges()) {
        if (!h.has_edge(u, v)) return false;
    }
    return true;
}

Graph
compacted(const Graph& g)
{
    const auto ids = g.vertices();
    std::array<Vertex, kMaxVertices> index{};
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<Vertex>(i);
    Graph out(static_cast<int>(ids.size()), g.directed());
    for (auto [u, v] : g.edges()) out.add_edge(index[u], index[v]);
    return out;
}

Graph
permuted(const Graph& g, const std::vector<Vertex>& perm)
{
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n || g.vertex_set() != Graph(n).vertex_set()) {
        throw DomainError("permutation does not match a compact graph");
    }
    Graph out(n, g.directed());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace entangle
