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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace entangle;

namespace {

Graph
path(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph
complete(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// graph6 straight from the format description: N(n) then the upper triangle
// in column order, six bits per byte, offset 63.
std::string
graph6_reference(int n, const std::vector<int>& bits)
{
    std::string s(1, static_cast<char>(63 + n));
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (std::size_t j = 0; j < 6; ++j) v = v * 2 + (i + j < bits.size() ? bits[i + j] : 0);
        s.push_back(static_cast<char>(63 + v));
    }
    return s;
}

Graph
random_graph(std::mt19937_64& rng, int n, bool directed = false)
{
    Graph g(n, directed);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (directed || u < v) && (rng() & 1)) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("edge list parsing")
{
    const Graph k2 = parse_edge_list("0 1");
    CHECK(k2.order() == 2);
    CHECK(k2.has_edge(0, 1));
    CHECK(k2.has_edge(1, 0));
    CHECK_FALSE(k2.directed());

    const Graph c3 = parse_edge_list("0 1\n1 2\n2 0");
    CHECK(c3 == complete(3));

    const Graph dp = parse_edge_list("n 3 directed\n0 1\n1 2");
    CHECK(dp.directed());
    CHECK(dp.order() == 3);
    CHECK(dp.edge_count() == 2);
    CHECK_FALSE(dp.has_edge(1, 0));

    SUBCASE("comments, blanks and duplicates")
    {
        const Graph g = parse_edge_list("# header comment\n\nn 4\n0 1 # trailing\n1 0\n0 1\n");
        CHECK(g.order() == 4);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("errors carry the line number")
    {
        try {
            parse_edge_list("0 1\n1 x\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
        CHECK_THROWS_AS(parse_edge_list("0 1\n2 2"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("0 1\nn 3"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("-1 2"), ParseError);
    }
    SUBCASE("serialization compacts ids")
    {
        const Graph g = contract_edge(path(4), 1, 2).graph; // vertices 0,1,3
        CHECK(to_edge_list(g) == "n 3\n0 1\n1 2\n");
        CHECK(parse_edge_list(to_edge_list(dp)) == dp);
    }
}

TEST_CASE("graph6 known strings")
{
    CHECK(parse_graph6("A_") == complete(2));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(to_graph6(complete(2)) == "A_");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(complete(3)) == "Bw");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete(3));

    CHECK_THROWS_AS(parse_graph6("B"), ParseError);    // too short for 3 vertices
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);  // too long
    CHECK_THROWS_AS(parse_graph6("B "), ParseError);   // byte below 63
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(to_graph6(Graph(2, true)), UnsupportedOperation);
}

TEST_CASE("graph6 round trip over every labeled graph up to seven vertices")
{
    for (int n = 0; n <= 7; ++n) {
        const int slots = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
            std::vector<int> bits(slots);
            for (int i = 0; i < slots; ++i) bits[i] = mask >> i & 1;
            const std::string s = graph6_reference(n, bits);
            const Graph g = parse_graph6(s);
            REQUIRE(g.edge_count() == static_cast<std::size_t>(std::popcount(mask)));
            REQUIRE(to_graph6(g) == s);
        }
    }
}

TEST_CASE("neighbors")
{
    CHECK(neighbors(complete(3), 0) == std::vector<Vertex>{1, 2});
    CHECK(neighbors(Graph(1), 0).empty());
    CHECK(neighbors(parse_edge_list("n 3 directed\n0 1\n1 2"), 2).empty());
    CHECK_THROWS_AS(neighbors(complete(3), 3), DomainError);
}

TEST_CASE("edge and vertex deletion")
{
    CHECK(delete_edge(complete(2), 0, 1) == Graph(2));
    const Graph p = delete_edge(complete(3), 0, 1);
    CHECK(p.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    const Graph arc = delete_edge(parse_edge_list("n 2 directed\n0 1\n1 0"), 1, 0);
    CHECK(arc.edges() == std::vector<Edge>{{0, 1}});
    CHECK_THROWS_AS(delete_edge(path(3), 0, 2), DomainError);

    const Graph one = delete_vertex(complete(2), 0);
    CHECK(one.vertices() == std::vector<Vertex>{1});
    CHECK(one.edge_count() == 0);
    const Graph split = delete_vertex(path(3), 1);
    CHECK(split.vertices() == std::vector<Vertex>{0, 2});
    CHECK(split.edgeless());
    Graph c3_plus(4);
    c3_plus.add_edge(0, 1);
    c3_plus.add_edge(1, 2);
    c3_plus.add_edge(2, 0);
    CHECK(delete_vertex(c3_plus, 3) == complete(3));
    CHECK_THROWS_AS(delete_vertex(complete(2), 5), DomainError);
}

TEST_CASE("edge contraction")
{
    const auto k2 = contract_edge(complete(2), 0, 1);
    CHECK(k2.graph.vertices() == std::vector<Vertex>{0});
    CHECK(k2.graph.edge_count() == 0);

    const auto c3 = contract_edge(complete(3), 0, 1);
    CHECK(c3.graph.vertices() == std::vector<Vertex>{0, 2});
    CHECK(c3.graph.edges() == std::vector<Edge>{{0, 2}});

    const auto p4 = contract_edge(path(4), 1, 2);
    CHECK(p4.graph.vertices() == std::vector<Vertex>{0, 1, 3});
    CHECK(p4.graph.edges() == std::vector<Edge>{{0, 1}, {1, 3}});

    CHECK(p4.map.merged == 1);
    CHECK(p4.map(2) == 1);
    CHECK(p4.map(1) == 1);
    CHECK(p4.map(3) == 3);
    CHECK(p4.map.image(bit(2) | bit(3)) == (bit(1) | bit(3)));
    CHECK(p4.map.valid());

    CHECK_THROWS_AS(contract_edge(path(4), 0, 2), DomainError);
    CHECK_THROWS_AS(contract_edge(parse_edge_list("n 2 directed\n0 1"), 0, 1), UnsupportedOperation);
}

TEST_CASE("contraction map reproduces the target edge set")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        const Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        for (auto [a, b] : h.edges()) {
            const auto c = contract_edge(h, a, b);
            REQUIRE(c.map.valid());
            std::set<Edge> image;
            for (auto [x, y] : h.edges()) {
                Vertex fx = c.map(x), fy = c.map(y);
                if (fx == fy) continue;
                REQUIRE(c.graph.has_edge(fx, fy));
                image.insert({std::min(fx, fy), std::max(fx, fy)});
            }
            const auto edges = c.graph.edges();
            REQUIRE(std::set<Edge>(edges.begin(), edges.end()) == image);
        }
    }
}

TEST_CASE("canonical form")
{
    const Graph tri = complete(3);
    const Graph tri_relabeled = parse_edge_list("2 0\n0 1\n1 2");
    CHECK(canonical_form(tri) == canonical_form(tri_relabeled));
    CHECK(canonical_form(path(3)) != canonical_form(tri));
    CHECK(canonical_form(complete(2)) != canonical_form(parse_edge_list("n 2 directed\n0 1")));
    CHECK(from_canonical(canonical_form(tri)) == tri);
    CHECK_THROWS_AS(canonical_form(Graph(9)), SizeLimitError);

    // Least adjacency string puts edges as late as possible: the path 0-1-2
    // with bits (0,1),(0,2),(1,2) becomes 011 with the centre at position 2.
    CHECK(from_canonical(canonical_form(path(3))).edges() == std::vector<Edge>{{0, 2}, {1, 2}});
}

TEST_CASE("canonical form is invariant under vertex permutations")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 400; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const bool directed = round % 3 == 0;
        const Graph g = random_graph(rng, n, directed);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = permuted(g, perm);
        REQUIRE(canonical_form(g) == canonical_form(h));
        // The code spells out a graph isomorphic to the input.
        REQUIRE(canonical_form(from_canonical(canonical_form(g))) == canonical_form(g));
        REQUIRE(from_canonical(canonical_form(g)).edge_count() == g.edge_count());
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs")
{
    // Brute-force isomorphism over all permutations as the reference.
    auto isomorphic = [](const Graph& a, const Graph& b) {
        if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
        std::vector<Vertex> perm(a.order());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (permuted(a, perm) == b) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    std::mt19937_64 rng(5);
    for (int round = 0; round < 300; ++round) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const Graph a = random_graph(rng, n), b = random_graph(rng, n);
        REQUIRE((canonical_form(a) == canonical_form(b)) == isomorphic(a, b));
    }
}

TEST_CASE("one-step minors")
{
    using Kind = MinorOperation::Kind;
    const auto k2 = one_step_minors(complete(2));
    REQUIRE(k2.size() == 2);
    CHECK(k2[0].op == MinorOperation{Kind::DeleteEdge, 0, 1});
    CHECK(k2[0].result == Graph(2));
    CHECK(k2[1].op == MinorOperation{Kind::ContractEdge, 0, 1});
    CHECK(k2[1].result.order() == 1);

    const auto k1 = one_step_minors(Graph(1));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].op.kind == Kind::DeleteIsolatedVertex);
    CHECK(k1[0].result.order() == 0);

    const auto c3 = one_step_minors(complete(3));
    CHECK(c3.size() == 6);
    std::set<CanonicalCode> classes;
    for (const auto& m : c3) classes.insert(canonical_form(m.result));
    CHECK(classes.size() == 2); // path P3 and K2

    const auto arcs = one_step_minors(parse_edge_list("n 3 directed\n0 1\n1 0"));
    CHECK(arcs.size() == 3); // two arc deletions, one isolated vertex
    CHECK(apply(complete(3), {Kind::ContractEdge, 0, 2}) == contract_edge(complete(3), 0, 2).graph);
    CHECK_THROWS_AS(apply(path(3), {Kind::DeleteIsolatedVertex, 1, 0}), DomainError);
}

TEST_CASE("minor relation")
{
    CHECK(is_minor(complete(2), complete(3)));
    CHECK_FALSE(is_minor(complete(3), path(4)));
    CHECK(is_minor(complete(3), complete(4)));
    CHECK(is_minor(path(3), path(3)));
    CHECK_FALSE(is_minor(complete(4), parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 0"))); // C6
    CHECK_THROWS_AS(is_minor(Graph(1), Graph(8)), SizeLimitError);

    std::mt19937_64 rng(3);
    for (int round = 0; round < 30; ++round) {
        const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 5));
        for (const auto& m : one_step_minors(g)) REQUIRE(is_minor(m.result, g));
    }
}

TEST_CASE("minor relation is reflexive and transitive on graphs up to five vertices")
{
    const auto graphs = enumerate_graphs(5);
    const std::size_t n = graphs.size();
    std::vector<std::vector<char>> rel(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rel[i][j] = is_minor(graphs[i], graphs[j]);
    for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(rel[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (!rel[i][j]) continue;
            for (std::size_t l = 0; l < n; ++l) {
                if (rel[j][l]) REQUIRE(rel[i][l]);
            }
        }
    }
}

TEST_CASE("enumeration counts isomorphism classes")
{
    const std::vector<std::size_t> graphs_per_order{1, 2, 4, 11, 34, 156};
    const auto all = enumerate_graphs(6);
    for (int n = 1; n <= 6; ++n) {
        auto count = std::count_if(all.begin(), all.end(), [n](const Graph& g) { return g.order() == n; });
        CHECK(static_cast<std::size_t>(count) == graphs_per_order[n - 1]);
    }
    const std::vector<std::size_t> digraphs_per_order{1, 3, 16, 218};
    const auto di = enumerate_graphs(4, true);
    for (int n = 1; n <= 4; ++n) {
        auto count = std::count_if(di.begin(), di.end(), [n](const Graph& g) { return g.order() == n; });
        CHECK(static_cast<std::size_t>(count) == digraphs_per_order[n - 1]);
    }
    CHECK_THROWS_AS(enumerate_graphs(7), SizeLimitError);
    CHECK_THROWS_AS(enumerate_graphs(5, true), SizeLimitError);
}
