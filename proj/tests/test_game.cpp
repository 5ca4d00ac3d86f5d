// Copyright 2026 the ramatch authors.
// License: Apache License 2.0

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramatch/game.hpp"
#include "ramatch/matching.hpp"

using namespace ramatch;

TEST_CASE("new_game produces fully uncoloured boards") {
    CHECK(new_game({2, {2, 2}, 5}).edge_slots() == 10);
    CHECK(new_game({1, {1}, 2}).edge_slots() == 1);
    CHECK(new_game({3, {2, 2, 2}, 6}).edge_slots() == 15);
    const BoardState board = new_game({2, {2, 2}, 5});
    for (int i = 0; i < board.edge_slots(); ++i) CHECK(board.color_at_index(i) == kUncolored);
    CHECK(board.moves_played() == 0);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(new_game({0, {}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(new_game({1, {0}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(new_game({2, {1}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(new_game({1, {1}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(new_game({10, std::vector<int>(10, 1), 3}), std::invalid_argument);
    CHECK_NOTHROW(new_game({1, {1}, 1}));  // edgeless board is legal
}

TEST_CASE("edge index round trip") {
    const int n = 7;
    for (int i = 0; i < edge_count(n); ++i) CHECK(edge_index(edge_at(i, n), n) == i);
    CHECK(edge_index(Edge{0, 1}, 5) == 0);
    CHECK(edge_index(Edge{3, 4}, 5) == 9);
    CHECK_THROWS_AS(make_edge(2, 2), std::invalid_argument);
    CHECK(make_edge(4, 1) == Edge{1, 4});
}

TEST_CASE("apply_move colours one edge and rejects bad moves") {
    const GameConfig config{2, {2, 2}, 5};
    const BoardState empty = new_game(config);
    const BoardState one = apply_move(empty, {0, 1}, 1);
    CHECK(one.color_at({0, 1}) == 1);
    CHECK(one.moves_played() == 1);
    CHECK(empty.moves_played() == 0);  // value semantics

    CHECK_THROWS_AS(apply_move(one, {0, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(empty, {0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(empty, {0, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(empty, {0, 7}, 1), std::invalid_argument);
}

TEST_CASE("frame property: all other edges unchanged") {
    const GameConfig config{3, {1, 1, 2}, 5};
    std::mt19937_64 rng(7);
    BoardState board = new_game(config);
    for (int step = 0; step < 8; ++step) {
        const auto open = uncolored_edges(board);
        const Edge e = open[rng() % open.size()];
        const Color c = static_cast<Color>(1 + rng() % 3);
        const BoardState next = apply_move(board, e, c);
        CHECK(next.color_at(e) == c);
        for (int i = 0; i < board.edge_slots(); ++i)
            if (i != edge_index(e, board.n()))
                CHECK(next.color_at_index(i) == board.color_at_index(i));
        board = next;
    }
}

TEST_CASE("uncolored_edges is deterministic and lexicographic") {
    const GameConfig config{1, {1}, 3};
    const BoardState board = new_game(config);
    CHECK(uncolored_edges(board) ==
          std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

    GameConfig big{1, {2}, 5};
    BoardState b5 = apply_move(new_game(big), {0, 1}, 1);
    const auto open = uncolored_edges(b5);
    CHECK(open.size() == 9);
    CHECK(std::find(open.begin(), open.end(), Edge{0, 1}) == open.end());

    BoardState full = new_game({1, {1}, 2});
    full = apply_move(full, {0, 1}, 1);
    CHECK(uncolored_edges(full).empty());
}

TEST_CASE("builder_won detects matchings per colour") {
    const GameConfig config{2, {2, 2}, 5};
    BoardState board = new_game(config);
    board = apply_move(board, {0, 1}, 1);
    CHECK_FALSE(builder_won(board, config).has_value());
    board = apply_move(board, {2, 3}, 1);
    CHECK(builder_won(board, config) == 1);

    SECTION("star has no 2-matching") {
        BoardState star = new_game(config);
        star = apply_move(star, {0, 1}, 1);
        star = apply_move(star, {0, 2}, 1);
        star = apply_move(star, {0, 3}, 1);
        CHECK_FALSE(builder_won(star, config).has_value());
    }
    SECTION("triangle has no 2-matching") {
        BoardState tri = new_game(config);
        tri = apply_move(tri, {0, 1}, 1);
        tri = apply_move(tri, {1, 2}, 1);
        tri = apply_move(tri, {0, 2}, 1);
        CHECK_FALSE(builder_won(tri, config).has_value());
    }
}

TEST_CASE("builder_won is monotone under adding edges of the winning colour") {
    const GameConfig config{2, {2, 2}, 6};
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        BoardState board = new_game(config);
        while (!builder_won(board, config)) {
            const auto open = uncolored_edges(board);
            if (open.empty()) break;
            board = apply_move(board, open[rng() % open.size()],
                               static_cast<Color>(1 + rng() % 2));
        }
        const auto winner = builder_won(board, config);
        if (!winner) continue;
        auto open = uncolored_edges(board);
        for (int extra = 0; extra < 2 && !open.empty(); ++extra) {
            board = apply_move(board, open[rng() % open.size()], *winner);
            CHECK(builder_won(board, config) == *winner);
            open = uncolored_edges(board);
        }
    }
}

TEST_CASE("replay reproduces a board deterministically") {
    const GameConfig config{2, {2, 2}, 5};
    PlayRecord record;
    record.moves = {{{0, 1}, 1}, {{2, 3}, 2}, {{1, 4}, 1}};
    const BoardState a = replay(config, record);
    const BoardState b = replay(config, record);
    CHECK(a == b);
    CHECK(a.moves_played() == 3);
    CHECK(a.color_at({2, 3}) == 2);
}

TEST_CASE("board text encoding") {
    const GameConfig config{2, {2, 2}, 5};
    BoardState board = new_game(config);
    CHECK(encode_board(board) == "..........");
    board = apply_move(board, {0, 1}, 1);
    board = apply_move(board, {2, 3}, 2);
    const std::string text = encode_board(board);
    CHECK(text.size() == 10);
    CHECK(text[0] == '1');
    CHECK(text[static_cast<size_t>(edge_index({2, 3}, 5))] == '2');
    CHECK(decode_board(text, config) == board);

    CHECK_THROWS_AS(decode_board("....", config), std::invalid_argument);
    CHECK_THROWS_AS(decode_board(".3........", config), std::invalid_argument);
}
