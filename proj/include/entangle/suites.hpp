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

#include "entangle/minor_theory.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace entangle {

struct SuiteOptions
{
    int n_max = 5;
    std::uint64_t seed = 1;
    /** Random (subgraph, supergraph) pairs drawn by the lemma1 suite. */
    int samples = 500;
    unsigned jobs = 1;
};

struct SuiteSummary
{
    std::size_t reports = 0;
    std::size_t failures = 0;
};

using ReportSink = std::function<void(const TheoremReport&)>;

/**
 * Suites: prop1, lemma1, theorem2, prop3, claim, strategy, transfer, all.
 * Instances are evaluated on `jobs` threads; reports reach the sink in a
 * fixed order regardless of scheduling.
 */
SuiteSummary run_suite(std::string_view name, const SuiteOptions& options, const ReportSink& sink);

const std::vector<std::string>& suite_names();

/** Random labeled (subgraph, supergraph) pairs with at most n_max vertices. */
std::vector<std::pair<Graph, Graph>> random_subgraph_pairs(int n_max, int count, std::uint64_t seed);

} // namespace entangle
