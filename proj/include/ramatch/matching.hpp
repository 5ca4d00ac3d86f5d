/**
 * \file matching.hpp
 *
 * Exact maximum matching on small simple graphs, and the win test built on
 * top of it. Boards stay tiny (n <= ~12), so matching sizes come from a
 * subset DP over vertex masks rather than a blossom implementation.
 *
 * Copyright 2026 the ramatch authors.
 * License: Apache License 2.0
 */

#ifndef RAMATCH_MATCHING_HPP
#define RAMATCH_MATCHING_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ramatch/game.hpp"

namespace ramatch {

/// Vertex count plus a duplicate-free list of normalized edges.
struct SimpleGraph {
    int n = 0;
    std::vector<Edge> edges;

    void add_edge(int a, int b) {
        Edge e = make_edge(a, b);
        if (e.v >= n) throw std::invalid_argument("endpoint outside the graph");
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
};

/// Vertices supported by the mask-based matching DP (memo is 2^n bytes).
constexpr int kMaxMatchingVertices = 20;

/// Maximum matching size from adjacency masks. adj[v] holds the neighbour
/// set of v as a bitmask. Exact on general graphs.
///
/// f(S) for a vertex set S: either the lowest vertex of S stays unmatched,
/// or it pairs with one neighbour in S; both branches recurse on smaller
/// sets, so a single pass over subsets in increasing order fills the table.
inline int max_matching_size(int n, std::span<const uint32_t> adj) {
    if (n < 0 || n > kMaxMatchingVertices)
        throw std::invalid_argument("vertex count outside matching DP range");
    if (n <= 1) return 0;
    thread_local std::vector<int8_t> table;
    const uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
    table.assign(static_cast<size_t>(full) + 1, 0);
    for (uint32_t s = 1; s <= full; ++s) {
        const int v = std::countr_zero(s);
        const uint32_t rest = s & (s - 1);  // s without v
        int8_t best = table[rest];
        uint32_t candidates = adj[static_cast<size_t>(v)] & rest;
        while (candidates) {
            const int u = std::countr_zero(candidates);
            candidates &= candidates - 1;
            best = std::max<int8_t>(best, static_cast<int8_t>(1 + table[rest & ~(1u << u)]));
        }
        table[s] = best;
    }
    return table[full];
}

inline std::vector<uint32_t> adjacency_masks(const SimpleGraph& g) {
    std::vector<uint32_t> adj(static_cast<size_t>(g.n), 0);
    for (const Edge& e : g.edges) {
        adj[static_cast<size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<size_t>(e.v)] |= 1u << e.u;
    }
    return adj;
}

inline int max_matching_size(const SimpleGraph& g) {
    const auto adj = adjacency_masks(g);
    return max_matching_size(g.n, adj);
}

inline bool has_matching(const SimpleGraph& g, int r) {
    if (r <= 0) return true;
    if (2 * r > g.n || static_cast<int>(g.edges.size()) < r) return false;
    return max_matching_size(g) >= r;
}

/// Edges of one colour class as a standalone graph.
inline SimpleGraph color_subgraph(const BoardState& state, Color c) {
    SimpleGraph g;
    g.n = state.n();
    for (int i = 0; i < state.edge_slots(); ++i)
        if (state.color_at_index(i) == c) g.edges.push_back(edge_at(i, state.n()));
    return g;
}

/// Least colour whose class already contains its target matching, if any.
/// Checked after every move in a real game, so two colours winning at once
/// cannot happen there; the least-index rule keeps the function total.
inline std::optional<Color> builder_won(const BoardState& state, const GameConfig& config) {
    for (Color c = 1; c <= config.colors; ++c)
        if (has_matching(color_subgraph(state, c), config.target(c))) return c;
    return std::nullopt;
}

}  // namespace ramatch

#endif  // RAMATCH_MATCHING_HPP
