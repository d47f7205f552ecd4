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

#include <algorithm>

namespace entangle {

Strategy
extract_strategy(const Arena& arena, const WinningRegion& region)
{
    if (region.rank.size() != arena.size()) {
        throw ContractViolation("winning region has " + std::to_string(region.rank.size()) + " nodes, arena has " +
                                std::to_string(arena.size()));
    }
    Strategy s{arena.k(), arena.variant(), {}};
    for (Arena::Node u = 1; u < arena.size(); ++u) {
        if (arena.owner(u) != Turn::Cops || !region.contains(u)) continue;
        std::optional<Arena::Node> best;
        for (Arena::Node w : arena.successors(u)) {
            if (region.contains(w) && (!best || region.rank[w] < region.rank[*best])) best = w;
        }
        if (!best || region.rank[*best] >= region.rank[u]) {
            throw ContractViolation("region is not an attractor of this arena at " + to_string(arena.position(u)));
        }
        s.choice.emplace(arena.position(u), arena.position(*best));
    }
    return s;
}

EntanglementResult
entanglement(const Graph& g)
{
    EntanglementResult result;
    for (int k = 0; k <= g.order(); ++k) {
        const Arena arena(g, k, Variant::Standard);
        const WinningRegion region = solve(arena);
        const bool win = region.contains(Arena::kInitial);
        result.per_k.emplace_back(k, win);
        if (win) {
            result.value = k;
            result.strategy = extract_strategy(arena, region);
            return result;
        }
    }
    throw Error("Cops lose with " + std::to_string(g.order()) + " cops on " + describe(g) +
                "; one cop per vertex must always win");
}

int
entanglement_value(const Graph& g)
{
    for (int k = 0; k <= g.order(); ++k) {
        if (cops_win(g, k, Variant::Standard)) return k;
    }
    throw Error("Cops lose with " + std::to_string(g.order()) + " cops on " + describe(g) +
                "; one cop per vertex must always win");
}

std::string
to_string(VerificationReport::Verdict v)
{
    switch (v) {
    case VerificationReport::Verdict::Win:
        return "WIN";
    case VerificationReport::Verdict::Loss:
        return "LOSS";
    case VerificationReport::Verdict::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

/** Plays consistent with a strategy, explored depth first over (position, memory). */
class PlayExplorer
{
public:
    PlayExplorer(const Graph& g, int k, Variant variant, const ReactiveStrategy& s, const VerifyOptions& options)
        : g_(g), k_(k), variant_(variant), strategy_(s), options_(options)
    {
    }

    VerificationReport run()
    {
        VerificationReport report;
        const Memory start = strategy_.initial_memory();
        for (Vertex v0 : g_.vertices()) {
            if (!explore({{v0, 0, Turn::Cops}, start}, report)) {
                report.states = marks_.size();
                return report;
            }
        }
        report.verdict = VerificationReport::Verdict::Win;
        report.reason = "every play consistent with the strategy is finite";
        report.states = marks_.size();
        return report;
    }

private:
    using State = std::pair<Position, Memory>;
    enum class Mark : std::uint8_t { Open, Done };

    struct Frame
    {
        State state;
        std::vector<State> next;
        std::size_t index = 0;
    };

    std::vector<Position> path(const std::vector<Frame>& stack) const
    {
        std::vector<Position> out;
        for (const auto& f : stack) out.push_back(f.state.first);
        return out;
    }

    bool fail(VerificationReport& report, VerificationReport::Verdict verdict, std::string reason,
              std::vector<Position> play)
    {
        report.verdict = verdict;
        report.reason = std::move(reason);
        report.play = std::move(play);
        return false;
    }

    // Expands a state; returns false (after filling the report) on a losing or undefined choice.
    bool successors(const std::vector<Frame>& stack, const State& s, std::vector<State>& out,
                    VerificationReport& report)
    {
        const auto& [pos, memory] = s;
        if (pos.turn == Turn::Robber) {
            for (const Position& q : robber_moves(pos, g_)) out.emplace_back(q, memory);
            return true;
        }
        auto reply = strategy_.step(memory, pos);
        if (!reply) {
            auto play = path(stack);
            return fail(report, VerificationReport::Verdict::Loss, "strategy undefined at " + to_string(pos), play);
        }
        const auto legal = cops_moves(pos, k_, variant_);
        if (!std::binary_search(legal.begin(), legal.end(), reply->second)) {
            auto play = path(stack);
            play.push_back(reply->second);
            return fail(report, VerificationReport::Verdict::Loss,
                        "illegal move " + to_string(pos) + " -> " + to_string(reply->second), play);
        }
        out.emplace_back(reply->second, std::move(reply->first));
        return true;
    }

    bool explore(State root, VerificationReport& report)
    {
        if (auto it = marks_.find(root); it != marks_.end()) return true;
        std::vector<Frame> stack;
        auto push = [&](State s) -> bool {
            if (marks_.size() >= options_.max_states) {
                return fail(report, VerificationReport::Verdict::Inconclusive,
                            "state bound " + std::to_string(options_.max_states) + " exceeded", path(stack));
            }
            marks_.emplace(s, Mark::Open);
            stack.push_back({std::move(s), {}, 0});
            return successors(stack, stack.back().state, stack.back().next, report);
        };
        if (!push(std::move(root))) return false;

        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.index == top.next.size()) {
                marks_[top.state] = Mark::Done;
                stack.pop_back();
                continue;
            }
            State next = top.next[top.index++];
            auto it = marks_.find(next);
            if (it == marks_.end()) {
                if (!push(std::move(next))) return false;
            } else if (it->second == Mark::Open) {
                auto play = path(stack);
                play.push_back(next.first);
                return fail(report, VerificationReport::Verdict::Loss,
                            "infinite play: revisits " + to_string(next.first), play);
            }
        }
        return true;
    }

    const Graph& g_;
    int k_;
    Variant variant_;
    const ReactiveStrategy& strategy_;
    VerifyOptions options_;
    std::map<State, Mark> marks_;
};

class PositionalAdapter : public ReactiveStrategy
{
public:
    explicit PositionalAdapter(const Strategy& s) : s_(s) {}

    Memory initial_memory() const override { return {}; }

    std::optional<std::pair<Memory, Position>> step(const Memory& memory, const Position& at) const override
    {
        auto move = s_.at(at);
        if (!move) return std::nullopt;
        return std::pair{memory, *move};
    }

private:
    const Strategy& s_;
};

} // namespace

VerificationReport
verify_strategy(const Graph& g, int k, Variant variant, const ReactiveStrategy& s, const VerifyOptions& options)
{
    if (k < 0) throw DomainError("negative cop count");
    return PlayExplorer(g, k, variant, s, options).run();
}

VerificationReport
verify_strategy(const Graph& g, int k, Variant variant, const Strategy& s, const VerifyOptions& options)
{
    return verify_strategy(g, k, variant, PositionalAdapter(s), options);
}

} // namespace entangle
