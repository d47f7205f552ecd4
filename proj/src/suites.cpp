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

#include "entangle/suites.hpp"

#include "entangle/errors.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

namespace entangle {

namespace {

using Task = std::function<std::vector<TheoremReport>()>;

// Runs tasks on a small pool and hands results to the sink in task order.
SuiteSummary
run_ordered(const std::vector<Task>& tasks, unsigned jobs, const ReportSink& sink)
{
    SuiteSummary summary;
    auto emit = [&](const std::vector<TheoremReport>& reports) {
        for (const auto& r : reports) {
            ++summary.reports;
            if (!r.pass) ++summary.failures;
            sink(r);
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (jobs == 1) {
        for (const auto& t : tasks) emit(t());
        return summary;
    }

    std::vector<std::optional<std::vector<TheoremReport>>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size() && !stop; i = next++) {
                std::vector<TheoremReport> out;
                std::exception_ptr err;
                try {
                    out = tasks[i]();
                } catch (...) {
                    err = std::current_exception();
                }
                std::lock_guard lock(mutex);
                results[i] = std::move(out);
                errors[i] = err;
                ready.notify_all();
            }
        });
    }
    std::exception_ptr failure;
    for (std::size_t i = 0; i < tasks.size() && !failure; ++i) {
        std::vector<TheoremReport> reports;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return results[i].has_value(); });
            failure = errors[i];
            reports = std::move(*results[i]);
        }
        if (!failure) emit(reports);
    }
    stop = true;
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return summary;
}

template <typename Check>
std::vector<Task>
per_graph(const std::vector<Graph>& graphs, Check check)
{
    std::vector<Task> tasks;
    for (const Graph& g : graphs) tasks.push_back([g, check] { return check(g); });
    return tasks;
}

std::vector<Task>
make_tasks(std::string_view name, const SuiteOptions& options, EntanglementCache& cache)
{
    const auto graphs = enumerate_graphs(options.n_max);
    auto* c = &cache;
    auto one = [](auto f) {
        return [f](const Graph& g) { return std::vector<TheoremReport>{f(g)}; };
    };

    if (name == "prop1") {
        auto all = graphs;
        const auto digraphs = enumerate_graphs(std::min(options.n_max, kEnumerateDigraphMaxOrder), true);
        all.insert(all.end(), digraphs.begin(), digraphs.end());
        return per_graph(all, one([](const Graph& g) { return check_variant_equivalence(g); }));
    }
    if (name == "lemma1") {
        std::vector<Task> tasks;
        for (auto& [g, h] : random_subgraph_pairs(options.n_max, options.samples, options.seed)) {
            tasks.push_back([g, h, c] { return std::vector<TheoremReport>{check_subgraph_lemma(g, h, c)}; });
        }
        return tasks;
    }
    if (name == "theorem2") return per_graph(graphs, [c](const Graph& h) { return check_minor_monotonicity(h, c); });
    if (name == "prop3") return per_graph(graphs, [c](const Graph& h) { return check_direct_minor_bound(h, c); });
    if (name == "claim") return per_graph(graphs, [c](const Graph& h) { return check_vertex_deletion(h, c); });
    if (name == "strategy") return per_graph(graphs, one([](const Graph& h) { return check_strategy_roundtrip(h); }));
    if (name == "transfer") return per_graph(graphs, [c](const Graph& h) { return check_transfer(h, c); });
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

} // namespace

const std::vector<std::string>&
suite_names()
{
    static const std::vector<std::string> names{"prop1", "lemma1", "theorem2", "prop3",
                                                "claim", "strategy", "transfer", "all"};
    return names;
}

std::vector<std::pair<Graph, Graph>>
random_subgraph_pairs(int n_max, int count, std::uint64_t seed)
{
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Graph, Graph>> out;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
        Graph h(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() & 1) h.add_edge(u, v);
            }
        }
        Graph g = h;
        for (int v = 0; v < n; ++v) {
            if (rng() & 1) g.remove_vertex(v);
        }
        for (auto [u, v] : g.edges()) {
            if (rng() & 1) g.remove_edge(u, v);
        }
        out.emplace_back(std::move(g), std::move(h));
    }
    return out;
}

SuiteSummary
run_suite(std::string_view name, const SuiteOptions& options, const ReportSink& sink)
{
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
        throw DomainError("unknown suite '" + std::string(name) + "'");
    }
    if (options.n_max > kTheoremMaxOrder) {
        throw SizeLimitError("suites limited to n_max <= " + std::to_string(kTheoremMaxOrder));
    }
    if (options.n_max < 1) throw DomainError("n_max must be at least 1");

    EntanglementCache cache;
    if (name != "all") return run_ordered(make_tasks(name, options, cache), options.jobs, sink);

    SuiteSummary total;
    for (const auto& suite : suite_names()) {
        if (suite == "all") continue;
        const auto s = run_ordered(make_tasks(suite, options, cache), options.jobs, sink);
        total.reports += s.reports;
        total.failures += s.failures;
    }
    return total;
}

} // namespace entangle
