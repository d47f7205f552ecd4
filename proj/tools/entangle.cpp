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
#include "entangle/json_io.hpp"
#include "entangle/minor_theory.hpp"
#include "entangle/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace entangle;

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kGuard = 3 };

struct RunConfig
{
    std::string edges;
    std::string graph6;
    std::string input;
    std::string format;
    std::string output = "json";
    std::string variant = "standard";
    std::string suite;
    std::string graph6_out;
    int k = 0;
    int n_max = 5;
    bool n_max_given = false;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    int samples = 500;
};

std::string
slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string
infer_format(const RunConfig& cfg)
{
    if (!cfg.format.empty()) return cfg.format;
    const auto& p = cfg.input;
    for (const char* ext : {".g6", ".graph6"}) {
        const std::string e(ext);
        if (p.size() >= e.size() && p.compare(p.size() - e.size(), e.size(), e) == 0) return "graph6";
    }
    return "edgelist";
}

std::vector<Graph>
load_graphs(const RunConfig& cfg)
{
    const int given = !cfg.edges.empty() + !cfg.graph6.empty() + !cfg.input.empty();
    if (given != 1) throw ParseError("give exactly one of --edges, --graph6, --input");
    if (!cfg.edges.empty()) return {parse_edge_list(cfg.edges)};
    if (!cfg.graph6.empty()) return {parse_graph6(cfg.graph6)};
    const std::string text = slurp(cfg.input);
    if (infer_format(cfg) == "graph6") return parse_graph6_lines(text);
    return {parse_edge_list(text)};
}

int
cmd_compute(const RunConfig& cfg)
{
    const Variant variant = *parse_variant(cfg.variant);
    for (const Graph& g : load_graphs(cfg)) {
        EntanglementResult result;
        if (variant == Variant::Standard) {
            result = entanglement(g);
        } else {
            for (int k = 0; k <= g.order(); ++k) {
                const bool win = cops_win(g, k, variant);
                result.per_k.emplace_back(k, win);
                if (win) {
                    result.value = k;
                    break;
                }
            }
        }
        if (cfg.output == "text") {
            std::cout << describe(g) << " n=" << g.order() << " directed=" << (g.directed() ? "true" : "false")
                      << " entanglement=" << result.value << '\n';
        } else {
            std::cout << to_json(g, result).dump() << '\n';
        }
    }
    return kOk;
}

int
cmd_verify(const RunConfig& cfg)
{
    SuiteOptions options;
    options.n_max = cfg.n_max;
    options.seed = cfg.seed;
    options.samples = cfg.samples;
    options.jobs = cfg.jobs;
    const auto summary = run_suite(cfg.suite, options, [&](const TheoremReport& r) {
        if (cfg.output == "text") {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.theorem;
            for (const auto& [key, value] : r.instance) std::cout << ' ' << key << '=' << value;
            if (!r.pass) std::cout << " : " << r.counterexample;
            std::cout << '\n';
        } else {
            std::cout << to_json(r).dump() << '\n';
        }
    });
    std::cout.flush();
    std::cerr << "suite " << cfg.suite << ": " << summary.reports << " reports, " << summary.failures << " failures\n";
    return summary.failures == 0 ? kOk : kFailed;
}

int
cmd_obstructions(const RunConfig& cfg)
{
    ObstructionSet set;
    if (!cfg.input.empty()) {
        const auto graphs = parse_graph6_lines(slurp(cfg.input));
        int n_max = cfg.n_max;
        if (!cfg.n_max_given) {
            n_max = 0;
            for (const auto& g : graphs) n_max = std::max(n_max, g.order());
        }
        set = find_obstructions(cfg.k, n_max, graphs);
        if (set.duplicates) {
            std::cerr << "warning: " << set.duplicates << " isomorphic duplicate(s) in input dropped\n";
        }
    } else {
        set = find_obstructions(cfg.k, cfg.n_max);
    }
    if (!cfg.graph6_out.empty()) {
        std::ofstream out(cfg.graph6_out, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + cfg.graph6_out + "'");
        for (const auto& m : set.members) out << to_graph6(m.graph) << '\n';
    }
    std::cout << to_json(set).dump() << '\n';
    return set.all_exactly_k_plus_1 ? kOk : kFailed;
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Entanglement of graphs via Robber and Cops games"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_graph_input = [&](CLI::App* cmd) {
        cmd->add_option("--edges", cfg.edges, "inline edge list ('u v' lines, optional 'n <count> [directed]' header)");
        cmd->add_option("--graph6", cfg.graph6, "inline graph6 string");
        cmd->add_option("--input", cfg.input, "graph file (edge list, or graph6 one per line)");
        cmd->add_option("--format", cfg.format, "format of --input")->check(CLI::IsMember({"graph6", "edgelist"}));
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", cfg.output, "output style")->check(CLI::IsMember({"json", "text"}));
    };

    auto* compute = app.add_subcommand("compute", "compute the entanglement of a graph");
    add_graph_input(compute);
    add_output(compute);
    compute->add_option("--variant", cfg.variant, "rule set")->check(CLI::IsMember({"standard", "generalized"}));

    auto* verify = app.add_subcommand("verify", "run a theorem verification suite, one JSON report per line");
    verify->add_option("--suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--nmax", cfg.n_max, "largest graph order examined");
    verify->add_option("--seed", cfg.seed, "seed for the randomized lemma1 pairs");
    verify->add_option("--samples", cfg.samples, "number of lemma1 pairs")->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_output(verify);

    auto* obstructions = app.add_subcommand("obstructions", "search minor-minimal graphs of entanglement above k");
    obstructions->add_option("--k", cfg.k, "entanglement bound")->required()->check(CLI::NonNegativeNumber);
    obstructions->add_option("--nmax", cfg.n_max, "largest graph order examined")
        ->each([&](const std::string&) { cfg.n_max_given = true; });
    obstructions->add_option("--input", cfg.input, "graph6 file to search instead of internal enumeration");
    obstructions->add_option("--graph6-out", cfg.graph6_out, "write members here, one graph6 per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*compute) return cmd_compute(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*obstructions) return cmd_obstructions(cfg);
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kGuard;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedOperation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
