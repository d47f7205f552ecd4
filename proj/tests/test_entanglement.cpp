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

#include "entangle/entanglement.hpp"
#include "entangle/errors.hpp"

#include <doctest.h>

#include <random>

using namespace entangle;

namespace {

const Graph kK1 = Graph(1);
const Graph kK2 = parse_edge_list("0 1");
const Graph kC3 = parse_edge_list("0 1\n1 2\n2 0");

class AlwaysSkip : public ReactiveStrategy
{
public:
    Memory initial_memory() const override { return {}; }
    std::optional<std::pair<Memory, Position>> step(const Memory& m, const Position& at) const override
    {
        return std::pair{m, Position{at.v, at.cops, Turn::Robber}};
    }
};

// Places a cop on the robber every time, moving the same cop around.
class Chase : public ReactiveStrategy
{
public:
    Memory initial_memory() const override { return {}; }
    std::optional<std::pair<Memory, Position>> step(const Memory& m, const Position& at) const override
    {
        return std::pair{m, Position{at.v, bit(at.v), Turn::Robber}};
    }
};

// Counts moves in memory so that the product graph keeps growing.
class Counter : public ReactiveStrategy
{
public:
    Memory initial_memory() const override { return {0}; }
    std::optional<std::pair<Memory, Position>> step(const Memory& m, const Position& at) const override
    {
        return std::pair{Memory{m[0] + 1}, Position{at.v, at.cops, Turn::Robber}};
    }
};

// Kahn's algorithm as an independent acyclicity test.
bool
acyclic(const Graph& g)
{
    std::vector<int> indeg(kMaxVertices, 0);
    for (auto [u, v] : g.edges()) ++indeg[v];
    std::vector<Vertex> ready;
    for (Vertex v : g.vertices())
        if (indeg[v] == 0) ready.push_back(v);
    int removed = 0;
    while (!ready.empty()) {
        Vertex v = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex w : neighbors(g, v))
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return removed == g.order();
}

int
oracle_entanglement(const Graph& g)
{
    for (int k = 0; k <= g.order(); ++k)
        if (oracle_cops_win(g, k)) return k;
    return -1;
}

} // namespace

TEST_CASE("entanglement of small graphs")
{
    CHECK(entanglement(kK1).value == 0);
    CHECK(entanglement(kK2).value == 1);
    CHECK(entanglement(kC3).value == 2);
    CHECK(entanglement(Graph(5)).value == 0);
    CHECK(entanglement(Graph(0)).value == 0);

    // Values below were computed with oracle_cops_win.
    CHECK(entanglement(parse_edge_list("0 1\n1 2")).value == 1);
    CHECK(entanglement(parse_edge_list("0 1\n1 2\n2 3")).value == 2);
    CHECK(entanglement(parse_edge_list("0 1\n0 2\n0 3")).value == 1);
    CHECK(entanglement(parse_edge_list("0 1\n1 2\n2 3\n3 0")).value == 2);
    CHECK(entanglement(parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 0")).value == 3);
    CHECK(entanglement(parse_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3")).value == 3);
    CHECK(entanglement(parse_edge_list("n 3 directed\n0 1\n1 2\n2 0")).value == 1);
    CHECK(entanglement(parse_edge_list("n 3 directed\n0 1\n1 2")).value == 0);

    const auto r = entanglement(kC3);
    CHECK(r.per_k == std::vector<std::pair<int, bool>>{{0, false}, {1, false}, {2, true}});
    CHECK(r.strategy.k == 2);
    CHECK(entanglement_value(kC3) == 2);
}

TEST_CASE("entanglement matches the oracle minimum up to five vertices")
{
    auto graphs = enumerate_graphs(5);
    const auto digraphs = enumerate_graphs(4, true);
    graphs.insert(graphs.end(), digraphs.begin(), digraphs.end());
    for (const Graph& g : graphs) {
        INFO(describe(g));
        REQUIRE(entanglement(g).value == oracle_entanglement(g));
    }
}

TEST_CASE("zero entanglement means no cycle")
{
    for (const Graph& g : enumerate_graphs(6)) REQUIRE((entanglement_value(g) == 0) == g.edgeless());
    for (const Graph& g : enumerate_graphs(4, true)) REQUIRE((entanglement_value(g) == 0) == acyclic(g));
}

TEST_CASE("strategy extraction")
{
    {
        const Arena arena(kK2, 1, Variant::Standard);
        const Strategy s = extract_strategy(arena, solve(arena));
        CHECK(s.at({1, bit(0), Turn::Cops}) == Position{1, bit(0), Turn::Robber});
        CHECK(s.at({0, 0, Turn::Cops}) == Position{0, bit(0), Turn::Robber});
    }
    {
        const Arena arena(kK1, 0, Variant::Standard);
        const Strategy s = extract_strategy(arena, solve(arena));
        REQUIRE(s.choice.size() == 1);
        CHECK(s.at({0, 0, Turn::Cops}) == Position{0, 0, Turn::Robber});
    }
    {
        const Arena arena(kC3, 2, Variant::Standard);
        const Strategy s = extract_strategy(arena, solve(arena));
        CHECK(s.at({1, bit(0), Turn::Cops}) == Position{1, bit(0) | bit(1), Turn::Robber});
    }
    {
        const Arena small(kK2, 0, Variant::Standard);
        const Arena big(kK2, 1, Variant::Standard);
        CHECK_THROWS_AS(extract_strategy(small, solve(big)), ContractViolation);
    }
}

TEST_CASE("strategy verification")
{
    const auto k2 = entanglement(kK2);
    CHECK(verify_strategy(kK2, 1, Variant::Standard, k2.strategy).win());
    // A standard strategy also wins under the generalized rules.
    CHECK(verify_strategy(kK2, 1, Variant::Generalized, k2.strategy).win());

    const auto skip = verify_strategy(kK2, 1, Variant::Standard, AlwaysSkip{});
    CHECK(skip.verdict == VerificationReport::Verdict::Loss);
    CHECK(skip.play == std::vector<Position>{{0, 0, Turn::Cops}, {0, 0, Turn::Robber}, {1, 0, Turn::Cops},
                                             {1, 0, Turn::Robber}, {0, 0, Turn::Cops}});

    // With one cop on a triangle nothing wins; check two natural attempts.
    CHECK_FALSE(verify_strategy(kC3, 1, Variant::Standard, AlwaysSkip{}).win());
    CHECK_FALSE(verify_strategy(kC3, 1, Variant::Standard, Chase{}).win());
    CHECK_FALSE(verify_strategy(kC3, 1, Variant::Standard, entanglement(kC3).strategy).win());

    SUBCASE("undefined choice is a loss with the play prefix")
    {
        Strategy partial = k2.strategy;
        partial.choice.erase({1, 0, Turn::Cops});
        const auto r = verify_strategy(kK2, 1, Variant::Standard, partial);
        CHECK(r.verdict == VerificationReport::Verdict::Loss);
        REQUIRE_FALSE(r.play.empty());
        CHECK(r.play.back() == Position{1, 0, Turn::Cops});
    }
    SUBCASE("illegal choice is a loss")
    {
        Strategy cheat = k2.strategy;
        cheat.choice[{0, 0, Turn::Cops}] = {0, bit(1), Turn::Robber}; // cop on a vertex Robber is not on
        CHECK(verify_strategy(kK2, 1, Variant::Standard, cheat).verdict == VerificationReport::Verdict::Loss);
        // Retiring is legal only under the generalized rules.
        CHECK(verify_strategy(kK2, 0, Variant::Standard, Chase{}).verdict == VerificationReport::Verdict::Loss);
    }
    SUBCASE("state bound gives an inconclusive verdict")
    {
        VerifyOptions options;
        options.max_states = 50;
        CHECK(verify_strategy(kK2, 1, Variant::Standard, Counter{}, options).verdict ==
              VerificationReport::Verdict::Inconclusive);
    }
}

TEST_CASE("extracted strategies verify on every graph up to six vertices")
{
    for (const Graph& g : enumerate_graphs(6)) {
        const auto r = entanglement(g);
        const auto report = verify_strategy(g, r.value, Variant::Standard, r.strategy);
        INFO(describe(g), " ", report.reason);
        REQUIRE(report.win());
    }
    for (const Graph& g : enumerate_graphs(3, true)) {
        const auto r = entanglement(g);
        REQUIRE(verify_strategy(g, r.value, Variant::Standard, r.strategy).win());
    }
}
