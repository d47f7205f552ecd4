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

#include <map>
#include <mutex>
#include <set>

namespace entangle {

namespace {

std::vector<CanonicalCode>
classes_of_order(int n, bool directed)
{
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = directed ? 0 : u + 1; v < n; ++v) {
            if (u != v) slots.emplace_back(u, v);
        }
    }
    std::set<CanonicalCode> codes;
    const std::uint64_t subsets = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        Graph g(n, directed);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
        }
        codes.insert(canonical_form(g));
    }
    return {codes.begin(), codes.end()};
}

} // namespace

std::vector<Graph>
enumerate_graphs(int max_order, bool directed)
{
    const int limit = directed ? kEnumerateDigraphMaxOrder : kEnumerateMaxOrder;
    if (max_order > limit) {
        throw SizeLimitError(std::string("internal enumeration limited to ") + std::to_string(limit) + " vertices for " +
                             (directed ? "digraphs" : "graphs"));
    }
    static std::mutex mutex;
    static std::map<std::pair<int, bool>, std::vector<CanonicalCode>> memo;

    std::vector<Graph> out;
    for (int n = 1; n <= max_order; ++n) {
        std::vector<CanonicalCode> codes;
        {
            std::lock_guard lock(mutex);
            auto it = memo.find({n, directed});
            if (it == memo.end()) it = memo.emplace(std::pair{n, directed}, classes_of_order(n, directed)).first;
            codes = it->second;
        }
        for (const auto& code : codes) out.push_back(from_canonical(code));
    }
    return out;
}

} // namespace entangle
