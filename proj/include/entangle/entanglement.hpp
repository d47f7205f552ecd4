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

#include "entangle/game.hpp"
#include "entangle/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace entangle {

/** Positional Cops strategy: one chosen move per Cops position in its domain. */
struct Strategy
{
    int k = 0;
    Variant variant = Variant::Standard;
    std::map<Position, Position> choice;

    std::optional<Position> at(const Position& p) const
    {
        auto it = choice.find(p);
        if (it == choice.end()) return std::nullopt;
        return it->second;
    }
};

/**
 * For each Cops node in the region, the successor of least rank (ties go to
 * the smaller canonical key).
 */
Strategy extract_strategy(const Arena& arena, const WinningRegion& region);

struct EntanglementResult
{
    int value = 0;
    /** (k, cops win) for k = 0..value. */
    std::vector<std::pair<int, bool>> per_k;
    /** Winning Cops strategy in the standard game with `value` cops. */
    Strategy strategy;
};

/** Least k for which Cops win the standard game, found by a scan from k = 0. */
EntanglementResult entanglement(const Graph& g);

/** Value-only form of entanglement(). */
int entanglement_value(const Graph& g);

/** Opaque strategy memory. The verifier only compares memories for equality. */
using Memory = std::vector<std::int64_t>;

/** Cops strategy with memory, consulted at every Cops position of a play. */
class ReactiveStrategy
{
public:
    virtual ~ReactiveStrategy() = default;

    virtual Memory initial_memory() const = 0;

    /**
     * Given the memory and the current Cops position (which reflects the
     * Robber's last move), returns the updated memory and the Robber position
     * Cops move to, or nothing when the strategy has no answer.
     */
    virtual std::optional<std::pair<Memory, Position>> step(const Memory& memory, const Position& at) const = 0;
};

struct VerificationReport
{
    enum class Verdict { Win, Loss, Inconclusive };

    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
    /** Offending play on failure; for a cycle the last position repeats an earlier one. */
    std::vector<Position> play;
    std::uint64_t states = 0;

    bool win() const noexcept { return verdict == Verdict::Win; }
};

std::string to_string(VerificationReport::Verdict v);

struct VerifyOptions
{
    /** Product states (position x memory) explored before giving up. */
    std::uint64_t max_states = 2'000'000;
};

/**
 * Explores every play consistent with the strategy against all Robber moves.
 * The strategy wins iff no such play is infinite, i.e. the explored graph is
 * acyclic. Missing or illegal choices count as losses.
 */
VerificationReport verify_strategy(const Graph& g, int k, Variant variant, const Strategy& s,
                                   const VerifyOptions& options = {});

VerificationReport verify_strategy(const Graph& g, int k, Variant variant, const ReactiveStrategy& s,
                                   const VerifyOptions& options = {});

} // namespace entangle
