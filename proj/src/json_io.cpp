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

#include "entangle/json_io.hpp"

namespace entangle {

Json
to_json(const Graph& g, const EntanglementResult& result)
{
    Json per_k = Json::array();
    for (auto [k, win] : result.per_k) per_k.push_back(Json{{"k", k}, {"cops_win", win}});
    return Json{{"n", g.order()},
                {"directed", g.directed()},
                {"entanglement", result.value},
                {"per_k", std::move(per_k)}};
}

Json
to_json(const TheoremReport& report)
{
    Json instance = Json::object();
    for (const auto& [key, value] : report.instance) instance[key] = value;
    Json measured = Json::object();
    for (const auto& [key, value] : report.measured) measured[key] = value;
    Json out{{"theorem", report.theorem},
             {"instance", std::move(instance)},
             {"relation", report.relation},
             {"measured", std::move(measured)},
             {"verdict", report.pass ? "pass" : "fail"}};
    if (!report.pass) out["counterexample"] = report.counterexample;
    return out;
}

Json
to_json(const VerificationReport& report)
{
    Json play = Json::array();
    for (const auto& p : report.play) play.push_back(to_string(p));
    return Json{{"verdict", to_string(report.verdict)},
                {"reason", report.reason},
                {"states", report.states},
                {"play", std::move(play)}};
}

Json
to_json(const ObstructionSet& set)
{
    Json members = Json::array();
    for (const auto& m : set.members) {
        members.push_back(Json{{"graph6", to_graph6(m.graph)},
                               {"n", m.graph.order()},
                               {"edges", m.graph.edge_count()},
                               {"entanglement", m.entanglement}});
    }
    return Json{{"k", set.k},
                {"n_max", set.n_max},
                {"complete", set.complete},
                {"examined", set.examined},
                {"duplicates", set.duplicates},
                {"count", set.members.size()},
                {"members", std::move(members)},
                {"all_exactly_k_plus_1", set.all_exactly_k_plus_1}};
}

} // namespace entangle
