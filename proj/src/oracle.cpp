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
#include "entangle/game.hpp"

#include <map>
#include <set>
#include <tuple>

namespace entangle {

namespace {

// Cops win from a state within `depth` moves iff the attractor stage of that
// state is at most `depth`. Stages never exceed the number of states, so a
// depth equal to the state count decides the game. Win/lose answers are
// monotone in depth, which is what the two memo tables exploit.
class Minimax
{
public:
    Minimax(const Graph& g, int k) : g_(g), k_(k) {}

    bool cops_win()
    {
        const std::vector<Vertex> vs = g_.vertices();
        std::size_t states = 1;
        {
            std::size_t sets = 1, c = 1;
            for (int i = 1; i <= k_; ++i) {
                c = c * (vs.size() - i + 1) / i;
                sets += c;
            }
            states += 2 * vs.size() * sets;
        }
        const int depth = static_cast<int>(states);
        for (Vertex v0 : vs) {
            if (!win({v0, {}, true}, depth - 1)) return false;
        }
        return true;
    }

private:
    struct State
    {
        Vertex robber;
        std::set<Vertex> cops;
        bool cops_to_move;

        bool operator<(const State& o) const
        {
            return std::tie(robber, cops, cops_to_move) < std::tie(o.robber, o.cops, o.cops_to_move);
        }
    };

    bool win(const State& s, int depth)
    {
        if (auto it = won_within_.find(s); it != won_within_.end() && it->second <= depth) return true;
        if (auto it = lost_within_.find(s); it != lost_within_.end() && it->second >= depth) return false;

        bool result;
        if (!s.cops_to_move) {
            result = true;
            bool stuck = true;
            for (Vertex w = 0; w < kMaxVertices && result; ++w) {
                if (!g_.has_edge(s.robber, w) || s.cops.count(w)) continue;
                stuck = false;
                result = depth > 0 && win({w, s.cops, true}, depth - 1);
            }
            result = result || stuck;
        } else {
            result = false;
            if (depth > 0) {
                for (const auto& next : cop_options(s)) {
                    if (win({s.robber, next, false}, depth - 1)) {
                        result = true;
                        break;
                    }
                }
            }
        }
        if (result) {
            auto [it, fresh] = won_within_.emplace(s, depth);
            if (!fresh && depth < it->second) it->second = depth;
        } else {
            auto [it, fresh] = lost_within_.emplace(s, depth);
            if (!fresh && depth > it->second) it->second = depth;
        }
        return result;
    }

    std::vector<std::set<Vertex>> cop_options(const State& s) const
    {
        std::vector<std::set<Vertex>> out{s.cops};
        if (static_cast<int>(s.cops.size()) < k_ && !s.cops.count(s.robber)) {
            auto more = s.cops;
            more.insert(s.robber);
            out.push_back(more);
        }
        for (Vertex x : s.cops) {
            auto moved = s.cops;
            moved.erase(x);
            moved.insert(s.robber);
            out.push_back(moved);
        }
        return out;
    }

    const Graph& g_;
    int k_;
    std::map<State, int> won_within_;
    std::map<State, int> lost_within_;
};

} // namespace

bool
oracle_cops_win(const Graph& g, int k)
{
    if (g.order() > kOracleMaxOrder) {
        throw SizeLimitError("oracle limited to " + std::to_string(kOracleMaxOrder) + " vertices");
    }
    if (k < 0 || k > g.order()) {
        throw DomainError("cop count " + std::to_string(k) + " outside 0.." + std::to_string(g.order()));
    }
    return Minimax(g, k).cops_win();
}

} // namespace entangle
