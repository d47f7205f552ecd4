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

#include "entangle/entanglement.hpp"
#include "entangle/minor_theory.hpp"

#include <json.hpp>

namespace entangle {

using Json = nlohmann::ordered_json;

/** {"n", "directed", "entanglement", "per_k": [{"k", "cops_win"}...]} */
Json to_json(const Graph& g, const EntanglementResult& result);

Json to_json(const TheoremReport& report);

Json to_json(const VerificationReport& report);

/** {"k", "n_max", "complete", "examined", "duplicates", "count", "members", "all_exactly_k_plus_1"} */
Json to_json(const ObstructionSet& set);

} // namespace entangle
