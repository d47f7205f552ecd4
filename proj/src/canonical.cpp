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

#include <array>
#include <cstdint>

namespace entangle {

namespace {

/**
 * Branch and bound over vertex orderings. Placing the vertex at position j
 * fixes the bits of column j against positions 0..j-1, so a partial ordering
 * whose prefix already exceeds the best code is abandoned.
 */
class CanonicalSearch
{
public:
    CanonicalSearch(const Graph& g) : n_(g.order()), directed_(g.directed())
    {
        const Graph c = compacted(g);
        for (int v = 0; v < n_; ++v) adj_[v] = c.successors(v);
    }

    std::vector<std::uint8_t> run()
    {
        search(0);
        return best_;
    }

private:
    // Sign of bits_ against the same-length prefix of best_.
    int compare_prefix() const
    {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] != best_[i]) return bits_[i] < best_[i] ? -1 : 1;
        }
        return 0;
    }

    void search(int pos)
    {
        if (pos == n_) {
            if (!have_best_ || compare_prefix() < 0) {
                best_ = bits_;
                have_best_ = true;
            }
            return;
        }
        for (int x = 0; x < n_; ++x) {
            if (used_ & bit(x)) continue;
            const std::size_t mark = bits_.size();
            for (int i = 0; i < pos; ++i) {
                bits_.push_back((adj_[order_[i]] & bit(x)) != 0);
                if (directed_) bits_.push_back((adj_[x] & bit(order_[i])) != 0);
            }
            if (!have_best_ || compare_prefix() <= 0) {
                order_[pos] = x;
                used_ |= bit(x);
                search(pos + 1);
                used_ &= ~bit(x);
            }
            bits_.resize(mark);
        }
    }

    int n_;
    bool directed_;
    std::array<VertexSet, kCanonicalMaxOrder> adj_{};
    std::array<int, kCanonicalMaxOrder> order_{};
    VertexSet used_ = 0;
    std::vector<std::uint8_t> bits_;
    std::vector<std::uint8_t> best_;
    bool have_best_ = false;
};

std::size_t
code_bits(int n, bool directed)
{
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    return directed ? 2 * pairs : pairs;
}

} // namespace

CanonicalCode
canonical_form(const Graph& g)
{
    if (g.order() > kCanonicalMaxOrder) {
        throw SizeLimitError("canonical form limited to " + std::to_string(kCanonicalMaxOrder) + " vertices, got " +
                             std::to_string(g.order()));
    }
    const auto bits = CanonicalSearch(g).run();
    CanonicalCode code;
    code.push_back(static_cast<char>(g.order()));
    code.push_back(static_cast<char>(g.directed() ? 1 : 0));
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        unsigned byte = 0;
        for (std::size_t j = 0; j < 8; ++j) {
            byte = (byte << 1) | (i + j < bits.size() ? bits[i + j] : 0u);
        }
        code.push_back(static_cast<char>(byte));
    }
    return code;
}

Graph
from_canonical(const CanonicalCode& code)
{
    if (code.size() < 2) throw ParseError("canonical code too short");
    const int n = static_cast<unsigned char>(code[0]);
    const bool directed = code[1] != 0;
    if (n > kCanonicalMaxOrder || code.size() != 2 + (code_bits(n, directed) + 7) / 8) {
        throw ParseError("malformed canonical code");
    }
    auto bit_at = [&](std::size_t i) {
        return (static_cast<unsigned char>(code[2 + i / 8]) >> (7 - i % 8)) & 1u;
    };
    Graph g(n, directed);
    std::size_t at = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit_at(at++)) g.add_edge(i, j);
            if (directed && bit_at(at++)) g.add_edge(j, i);
        }
    }
    return g;
}

} // namespace entangle
