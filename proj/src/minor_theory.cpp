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

#include "entangle/minor_theory.hpp"

#include "entangle/errors.hpp"

#include <algorithm>
#include <set>

namespace entangle {

int
EntanglementCache::value(const Graph& g)
{
    if (g.order() > kCanonicalMaxOrder) return entanglement_value(g);
    const CanonicalCode code = canonical_form(g);
    {
        std::lock_guard lock(mutex_);
        if (auto it = values_.find(code); it != values_.end()) return it->second;
    }
    const int v = entanglement_value(g);
    std::lock_guard lock(mutex_);
    values_.emplace(code, v);
    return v;
}

namespace {

int
ent(const Graph& g, EntanglementCache* cache)
{
    return cache ? cache->value(g) : entanglement_value(g);
}

void
guard_order(const Graph& h)
{
    if (h.order() > kTheoremMaxOrder) {
        throw SizeLimitError("theorem checks limited to " + std::to_string(kTheoremMaxOrder) + " vertices, got " +
                             std::to_string(h.order()));
    }
}

void
require_undirected(const Graph& h, const char* what)
{
    if (h.directed()) throw UnsupportedOperation(std::string(what) + " is stated for undirected graphs");
}

TheoremReport
finish(TheoremReport r, bool pass, const std::string& why)
{
    r.pass = pass;
    if (!pass) r.counterexample = why;
    return r;
}

} // namespace

TheoremReport
check_subgraph_lemma(const Graph& g, const Graph& h, EntanglementCache* cache)
{
    if (!is_subgraph(g, h)) throw DomainError(describe(g) + " is not a labeled subgraph of " + describe(h));
    const int eg = ent(g, cache), eh = ent(h, cache);
    TheoremReport r;
    r.theorem = "lemma1";
    r.instance = {{"G", describe(g)}, {"H", describe(h)}};
    r.relation = "Ent(G) <= Ent(H)";
    r.measured = {{"ent_G", eg}, {"ent_H", eh}};
    return finish(std::move(r), eg <= eh, "subgraph has larger entanglement");
}

std::vector<TheoremReport>
check_minor_monotonicity(const Graph& h, EntanglementCache* cache)
{
    guard_order(h);
    require_undirected(h, "minor closure");
    const int eh = ent(h, cache);
    std::vector<TheoremReport> out;
    for (const auto& [op, g] : one_step_minors(h)) {
        const int eg = ent(g, cache);
        TheoremReport r;
        r.theorem = "theorem2";
        r.instance = {{"H", describe(h)}, {"operation", op.to_string()}, {"G", describe(g)}};
        r.relation = "Ent(G) <= Ent(H)";
        r.measured = {{"ent_G", eg}, {"ent_H", eh}};
        out.push_back(finish(std::move(r), eg <= eh, "minor has larger entanglement"));
    }
    return out;
}

std::vector<TheoremReport>
check_direct_minor_bound(const Graph& h, EntanglementCache* cache)
{
    guard_order(h);
    require_undirected(h, "the direct minor bound");
    const int eh = ent(h, cache);
    std::vector<TheoremReport> out;
    for (const auto& [op, g] : one_step_minors(h)) {
        // H minus this vertex must sit inside G as a labeled subgraph.
        const Vertex removed = op.kind == MinorOperation::Kind::ContractEdge ? std::max(op.u, op.v) : op.u;
        const Graph h_minus = delete_vertex(h, removed);
        const bool witness = is_subgraph(h_minus, g);
        const int eg = ent(g, cache);
        const int eh_minus = ent(h_minus, cache);

        TheoremReport r;
        r.theorem = "prop3";
        r.instance = {{"H", describe(h)},
                      {"operation", op.to_string()},
                      {"G", describe(g)},
                      {"removed_vertex", std::to_string(removed)}};
        r.relation = "Ent(H) - 1 <= Ent(G), H - x subgraph of G";
        r.measured = {{"ent_H", eh}, {"ent_G", eg}, {"ent_H_minus_x", eh_minus}, {"subgraph_witness", witness}};
        const bool pass = eh - 1 <= eg && witness && eh_minus <= eg;
        out.push_back(finish(std::move(r), pass,
                             !witness ? "H - x is not a subgraph of G" : "entanglement drops by more than one"));
    }
    return out;
}

std::vector<TheoremReport>
check_vertex_deletion(const Graph& h, EntanglementCache* cache)
{
    guard_order(h);
    const int eh = ent(h, cache);
    std::vector<TheoremReport> out;
    for (Vertex v : h.vertices()) {
        const Graph g = delete_vertex(h, v);
        const int eg = ent(g, cache);
        TheoremReport r;
        r.theorem = "claim";
        r.instance = {{"H", describe(h)}, {"vertex", std::to_string(v)}, {"H_minus_v", describe(g)}};
        r.relation = "Ent(H) <= Ent(H - v) + 1";
        r.measured = {{"ent_H", eh}, {"ent_H_minus_v", eg}};
        out.push_back(finish(std::move(r), eh <= eg + 1, "deleting one vertex lowers entanglement by more than one"));
    }
    return out;
}

TheoremReport
check_variant_equivalence(const Graph& g)
{
    TheoremReport r;
    r.theorem = "prop1";
    r.instance = {{"G", describe(g)}};
    r.relation = "cops_win(G,k,standard) == cops_win(G,k,generalized) for k = 0..n";
    std::int64_t mismatches = 0;
    std::string first;
    for (int k = 0; k <= g.order(); ++k) {
        const bool standard = cops_win(g, k, Variant::Standard);
        const bool generalized = cops_win(g, k, Variant::Generalized);
        if (standard != generalized) {
            if (mismatches++ == 0) {
                first = "k=" + std::to_string(k) + ": standard " + (standard ? "win" : "loss") + ", generalized " +
                        (generalized ? "win" : "loss");
            }
        }
    }
    r.measured = {{"n", g.order()}, {"k_checked", g.order() + 1}, {"mismatches", mismatches}};
    return finish(std::move(r), mismatches == 0, first);
}

TheoremReport
check_strategy_roundtrip(const Graph& h)
{
    const EntanglementResult result = entanglement(h);
    const VerificationReport report = verify_strategy(h, result.value, Variant::Standard, result.strategy);
    TheoremReport r;
    r.theorem = "strategy";
    r.instance = {{"H", describe(h)}};
    r.relation = "extract_strategy at k = Ent(H) wins";
    r.measured = {{"ent_H", result.value},
                  {"strategy_size", static_cast<std::int64_t>(result.strategy.choice.size())},
                  {"states", static_cast<std::int64_t>(report.states)}};
    return finish(std::move(r), report.win(), to_string(report.verdict) + ": " + report.reason);
}

std::vector<TheoremReport>
check_transfer(const Graph& h, EntanglementCache* cache)
{
    guard_order(h);
    require_undirected(h, "strategy transfer");
    const EntanglementResult eh = entanglement(h);
    std::vector<TheoremReport> out;
    for (auto [a, b] : h.edges()) {
        const Contraction c = contract_edge(h, a, b);
        TheoremReport r;
        r.theorem = "transfer";
        r.instance = {{"H", describe(h)},
                      {"operation", MinorOperation{MinorOperation::Kind::ContractEdge, a, b}.to_string()},
                      {"G", describe(c.graph)}};
        r.relation = "transferred strategy wins ET(G, Ent(H))";
        try {
            const TransferredStrategy s = transfer_strategy(eh.strategy, c.map, eh.value);
            const VerificationReport report = verify_strategy(c.graph, eh.value, Variant::Generalized, s);
            r.measured = {{"ent_H", eh.value},
                          {"ent_G", ent(c.graph, cache)},
                          {"states", static_cast<std::int64_t>(report.states)},
                          {"invariant_checks", static_cast<std::int64_t>(s.invariant_checks())}};
            std::string why = to_string(report.verdict) + ": " + report.reason;
            if (!report.play.empty()) {
                why += "; play";
                for (const auto& p : report.play) why += " " + to_string(p);
            }
            out.push_back(finish(std::move(r), report.win(), why));
        } catch (const TransferError& e) {
            r.measured = {{"ent_H", eh.value}};
            out.push_back(finish(std::move(r), false, e.what()));
        }
    }
    return out;
}

ObstructionSet
find_obstructions(int k, int n_max, const std::vector<Graph>& graphs, bool complete, EntanglementCache* cache)
{
    if (k < 0) throw DomainError("k must be non-negative");
    EntanglementCache local;
    if (!cache) cache = &local;

    ObstructionSet out;
    out.k = k;
    out.n_max = n_max;
    out.complete = complete;

    std::set<CanonicalCode> seen;
    for (const Graph& g : graphs) {
        if (g.directed()) throw UnsupportedOperation("obstruction search is defined for undirected graphs");
        if (g.order() > n_max) continue;
        CanonicalCode code = canonical_form(g);
        if (!seen.insert(code).second) {
            ++out.duplicates;
            continue;
        }
        ++out.examined;
        const int e = cache->value(g);
        if (e <= k) continue;
        const auto minors = one_step_minors(g);
        const bool minimal = std::all_of(minors.begin(), minors.end(),
                                         [&](const MinorStep& m) { return cache->value(m.result) <= k; });
        if (minimal) out.members.push_back({compacted(g), std::move(code), e});
    }
    std::sort(out.members.begin(), out.members.end(), [](const auto& x, const auto& y) {
        return std::pair(x.graph.order(), x.code) < std::pair(y.graph.order(), y.code);
    });
    out.all_exactly_k_plus_1 = std::all_of(out.members.begin(), out.members.end(),
                                           [&](const ObstructionMember& m) { return m.entanglement == k + 1; });
    return out;
}

ObstructionSet
find_obstructions(int k, int n_max, EntanglementCache* cache)
{
    if (n_max < 0) throw DomainError("n_max must be non-negative");
    return find_obstructions(k, n_max, enumerate_graphs(n_max), true, cache);
}

} // namespace entangle
