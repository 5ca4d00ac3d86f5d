// Copyright 2026 the ramatch authors.
// License: Apache License 2.0

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "ramatch/canon.hpp"

using namespace ramatch;

namespace {

BoardState board_of(const GameConfig& config, uint64_t index) {
    BoardState board(config.n, config.colors);
    for (int e = 0; e < board.edge_slots(); ++e) {
        board.place(e, static_cast<Color>(index % (config.colors + 1)));
        index /= static_cast<uint64_t>(config.colors + 1);
    }
    return board;
}

uint64_t index_of(const BoardState& board, const GameConfig& config) {
    uint64_t index = 0;
    for (int e = board.edge_slots() - 1; e >= 0; --e)
        index = index * static_cast<uint64_t>(config.colors + 1) +
                static_cast<uint64_t>(board.color_at_index(e));
    return index;
}

BoardState permute_vertices(const BoardState& board, const std::vector<int>& sigma) {
    BoardState out(board.n(), board.colors());
    for (int e = 0; e < board.edge_slots(); ++e) {
        const Edge src = edge_at(e, board.n());
        const Edge dst = make_edge(sigma[static_cast<size_t>(src.u)],
                                   sigma[static_cast<size_t>(src.v)]);
        out.place(edge_index(dst, board.n()), board.color_at_index(e));
    }
    return out;
}

BoardState swap_colors(const BoardState& board, Color x, Color y) {
    BoardState out(board.n(), board.colors());
    for (int e = 0; e < board.edge_slots(); ++e) {
        Color c = board.color_at_index(e);
        if (c == x) c = y;
        else if (c == y) c = x;
        out.place(e, c);
    }
    return out;
}

}  // namespace

TEST_CASE("key examples") {
    const GameConfig config{2, {2, 2}, 5};

    BoardState star_a = new_game(config);
    star_a = apply_move(star_a, {0, 1}, 1);
    star_a = apply_move(star_a, {0, 2}, 1);
    BoardState star_b = new_game(config);
    star_b = apply_move(star_b, {3, 4}, 1);
    star_b = apply_move(star_b, {2, 3}, 1);
    CHECK(canonical_key(star_a, config) == canonical_key(star_b, config));

    BoardState one_c1 = apply_move(new_game(config), {0, 1}, 1);
    BoardState one_c2 = apply_move(new_game(config), {0, 1}, 2);
    CHECK(canonical_key(one_c1, config) == canonical_key(one_c2, config));

    CHECK_FALSE(canonical_key(one_c1, config) == canonical_key(star_a, config));
}

TEST_CASE("colour swap is only allowed between equal targets") {
    const GameConfig config{2, {2, 1}, 4};
    const BoardState c1 = apply_move(new_game(config), {0, 1}, 1);
    const BoardState c2 = apply_move(new_game(config), {0, 1}, 2);
    CHECK_FALSE(canonical_key(c1, config) == canonical_key(c2, config));
}

TEST_CASE("orbit examples") {
    const GameConfig config{2, {2, 2}, 4};
    SECTION("empty board has a single orbit") {
        const auto orbits = canonical_edge_orbits(new_game(config), config);
        REQUIRE(orbits.size() == 1);
        CHECK(orbits.front().size() == 6);
    }
    SECTION("one coloured edge splits the rest into touching and opposite") {
        const BoardState board = apply_move(new_game(config), {0, 1}, 1);
        const auto orbits = canonical_edge_orbits(board, config);
        REQUIRE(orbits.size() == 2);
        const std::vector<Edge> touching{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
        CHECK(orbits[0] == touching);
        CHECK(orbits[1] == std::vector<Edge>{{2, 3}});
    }
    SECTION("full board has no orbits") {
        BoardState board = new_game(config);
        for (const Edge& e : uncolored_edges(board)) board = apply_move(board, e, 1);
        CHECK(canonical_edge_orbits(board, config).empty());
    }
}

TEST_CASE("key is invariant under random group elements") {
    std::mt19937_64 rng(5);
    const std::vector<GameConfig> configs = {
        {2, {2, 2}, 6}, {3, {2, 2, 2}, 5}, {2, {2, 1}, 5}, {4, {2, 2, 2, 2}, 6}};
    for (const GameConfig& config : configs) {
        for (int round = 0; round < 60; ++round) {
            BoardState board = new_game(config);
            const int moves = static_cast<int>(rng() % board.edge_slots());
            for (int i = 0; i < moves; ++i) {
                const auto open = uncolored_edges(board);
                board = apply_move(board, open[rng() % open.size()],
                                   static_cast<Color>(1 + rng() % config.colors));
            }
            const CanonicalKey key = canonical_key(board, config);

            std::vector<int> sigma(static_cast<size_t>(config.n));
            std::iota(sigma.begin(), sigma.end(), 0);
            std::shuffle(sigma.begin(), sigma.end(), rng);
            BoardState mapped = permute_vertices(board, sigma);
            // plus a random allowed colour swap
            const Color x = static_cast<Color>(1 + rng() % config.colors);
            const Color y = static_cast<Color>(1 + rng() % config.colors);
            if (config.target(x) == config.target(y)) mapped = swap_colors(mapped, x, y);
            REQUIRE(canonical_key(mapped, config) == key);
        }
    }
}

TEST_CASE("completeness: distinct keys biject with isomorphism classes") {
    // Union-find closure over generators (adjacent vertex swaps, adjacent
    // equal-target colour swaps) partitions all raw assignments into
    // isomorphism classes. The key must be constant on every class and
    // distinct across classes, which is exactly |classes| == |keys| plus
    // generator invariance.
    const std::vector<GameConfig> configs = {
        {2, {2, 2}, 4}, {2, {2, 2}, 5}, {3, {2, 2, 2}, 4}, {2, {2, 1}, 4}};
    for (const GameConfig& config : configs) {
        uint64_t total = 1;
        for (int e = 0; e < edge_count(config.n); ++e)
            total *= static_cast<uint64_t>(config.colors + 1);

        std::vector<uint32_t> parent(total);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        const auto unite = [&](uint32_t a, uint32_t b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        };

        std::set<std::string> keys;
        bool invariant = true;
        for (uint64_t index = 0; index < total; ++index) {
            const BoardState board = board_of(config, index);
            const CanonicalKey key = canonical_key(board, config);
            keys.insert(key.bytes);
            for (int i = 0; i + 1 < config.n; ++i) {
                std::vector<int> sigma(static_cast<size_t>(config.n));
                std::iota(sigma.begin(), sigma.end(), 0);
                std::swap(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(i + 1)]);
                const BoardState mapped = permute_vertices(board, sigma);
                unite(static_cast<uint32_t>(index),
                      static_cast<uint32_t>(index_of(mapped, config)));
                invariant &= canonical_key(mapped, config) == key;
            }
            for (Color c = 1; c < config.colors; ++c) {
                if (config.target(c) != config.target(c + 1)) continue;
                const BoardState mapped = swap_colors(board, c, c + 1);
                unite(static_cast<uint32_t>(index),
                      static_cast<uint32_t>(index_of(mapped, config)));
                invariant &= canonical_key(mapped, config) == key;
            }
        }
        std::set<uint32_t> classes;
        for (uint64_t index = 0; index < total; ++index)
            classes.insert(find(static_cast<uint32_t>(index)));

        CAPTURE(config.colors, config.n);
        CHECK(invariant);
        CHECK(classes.size() == keys.size());
    }
}

TEST_CASE("orbit members map to the representative's children") {
    // Every edge in an orbit must lead to a child isomorphic to the one the
    // representative leads to, for every colour.
    std::mt19937_64 rng(23);
    const GameConfig config{2, {2, 2}, 5};
    for (int round = 0; round < 40; ++round) {
        BoardState board = new_game(config);
        const int moves = static_cast<int>(rng() % 6);
        for (int i = 0; i < moves; ++i) {
            const auto open = uncolored_edges(board);
            board = apply_move(board, open[rng() % open.size()],
                               static_cast<Color>(1 + rng() % 2));
        }
        for (const auto& orbit : canonical_edge_orbits(board, config)) {
            // the automorphism may permute colours, so compare the sorted
            // multiset of child keys per edge
            const auto child_keys = [&](const Edge& e) {
                std::vector<std::string> keys;
                for (Color c = 1; c <= 2; ++c)
                    keys.push_back(canonical_key(apply_move(board, e, c), config).bytes);
                std::sort(keys.begin(), keys.end());
                return keys;
            };
            const auto rep_keys = child_keys(orbit.front());
            for (const Edge& e : orbit) REQUIRE(child_keys(e) == rep_keys);
        }
    }
}

TEST_CASE("size guard") {
    const GameConfig config{1, {1}, 13};
    CHECK_THROWS_AS(canonical_key(new_game(config), config), std::invalid_argument);
}
