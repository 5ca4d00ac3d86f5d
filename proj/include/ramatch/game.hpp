/**
 * \file game.hpp
 *
 * Board core for the Builder-Painter edge-colouring game on K_n.
 * Builder reveals one uncoloured edge per move, Painter assigns it one of
 * t colours, and Builder wins as soon as colour i contains a matching of
 * targets[i] pairwise disjoint edges.
 *
 * Copyright 2026 the ramatch authors.
 * License: Apache License 2.0
 */

#ifndef RAMATCH_GAME_HPP
#define RAMATCH_GAME_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramatch {

/// Colour index. 1..t are real colours, 0 means "not coloured yet".
using Color = int;

constexpr Color kUncolored = 0;

/// Largest colour count representable in the board text encoding ('1'..'9').
constexpr int kMaxColors = 9;

struct GameConfig {
    int colors = 0;            ///< t
    std::vector<int> targets;  ///< r_1..r_t, required matching size per colour
    int n = 0;                 ///< vertices of the board K_n

    /// Throws std::invalid_argument when the config is unusable.
    /// n = 1 is accepted (an edgeless board); it shows up when probing
    /// values just below the Ramsey threshold of small targets.
    void validate() const {
        if (colors < 1) throw std::invalid_argument("colour count must be >= 1");
        if (colors > kMaxColors)
            throw std::invalid_argument("colour count above supported range (9)");
        if (static_cast<int>(targets.size()) != colors)
            throw std::invalid_argument("targets list length must equal colour count");
        for (int r : targets)
            if (r < 1) throw std::invalid_argument("every target must be >= 1");
        if (n < 1) throw std::invalid_argument("board must have at least one vertex");
    }

    int target(Color c) const { return targets[static_cast<size_t>(c - 1)]; }

    bool operator==(const GameConfig&) const = default;
};

/// Unordered pair of vertices stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Normalizes (a,b) into an Edge. Loops are rejected.
inline Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("loop is not an edge");
    if (a < 0 || b < 0) throw std::invalid_argument("negative vertex index");
    return a < b ? Edge{a, b} : Edge{b, a};
}

constexpr int edge_count(int n) { return n * (n - 1) / 2; }

/// Position of e in the lexicographic edge order (0,1),(0,2),...,(n-2,n-1).
constexpr int edge_index(Edge e, int n) {
    return e.u * (2 * n - e.u - 1) / 2 + (e.v - e.u - 1);
}

inline Edge edge_at(int index, int n) {
    int u = 0;
    int row = n - 1;
    while (index >= row) {
        index -= row;
        --row;
        ++u;
    }
    return Edge{u, u + 1 + index};
}

/// A partially edge-coloured K_n. Cheap to copy; never mutated through the
/// public game operations, which return fresh values instead.
class BoardState {
  public:
    BoardState() = default;
    BoardState(int n, int colors)
        : n_(n), colors_(colors), cells_(static_cast<size_t>(edge_count(n)), 0) {}

    int n() const { return n_; }
    int colors() const { return colors_; }
    int edge_slots() const { return static_cast<int>(cells_.size()); }

    Color color_at(Edge e) const { return cells_[idx(e)]; }
    Color color_at_index(int edge_idx) const { return cells_[static_cast<size_t>(edge_idx)]; }

    int moves_played() const {
        int k = 0;
        for (uint8_t c : cells_) k += (c != kUncolored);
        return k;
    }

    bool full() const {
        for (uint8_t c : cells_) if (c == kUncolored) return false;
        return true;
    }

    /// Unchecked fast path used by search internals; asserts nothing in
    /// release builds. Checked mutation goes through apply_move().
    void place(int edge_idx, Color c) { cells_[static_cast<size_t>(edge_idx)] = static_cast<uint8_t>(c); }
    void clear(int edge_idx) { cells_[static_cast<size_t>(edge_idx)] = kUncolored; }

    const std::vector<uint8_t>& cells() const { return cells_; }

    bool operator==(const BoardState&) const = default;

  private:
    size_t idx(Edge e) const {
        if (e.u < 0 || e.v >= n_ || e.u >= e.v)
            throw std::out_of_range("edge outside the board");
        return static_cast<size_t>(edge_index(e, n_));
    }

    int n_ = 0;
    int colors_ = 0;
    std::vector<uint8_t> cells_;
};

inline BoardState new_game(const GameConfig& config) {
    config.validate();
    return BoardState(config.n, config.colors);
}

/// Colours one still-uncoloured edge. Throws on recolouring, loops, edges
/// outside the board, and colours outside 1..t.
inline BoardState apply_move(const BoardState& state, Edge e, Color c) {
    if (e.u >= e.v) e = make_edge(e.u, e.v);
    if (e.u < 0 || e.v >= state.n())
        throw std::invalid_argument("edge outside the board");
    if (c < 1 || c > state.colors())
        throw std::invalid_argument("colour out of range");
    if (state.color_at(e) != kUncolored)
        throw std::invalid_argument("edge already coloured");
    BoardState next = state;
    next.place(edge_index(e, state.n()), c);
    return next;
}

inline std::vector<Edge> uncolored_edges(const BoardState& state) {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(state.edge_slots()));
    for (int i = 0; i < state.edge_slots(); ++i)
        if (state.color_at_index(i) == kUncolored) out.push_back(edge_at(i, state.n()));
    return out;
}

/// Ordered list of (edge, colour) moves. Replaying it from an empty board
/// reproduces the board it was recorded from.
struct PlayRecord {
    std::vector<std::pair<Edge, Color>> moves;
};

inline BoardState replay(const GameConfig& config, const PlayRecord& record) {
    BoardState state = new_game(config);
    for (const auto& [e, c] : record.moves) state = apply_move(state, e, c);
    return state;
}

/// Text form of a board: one char per edge in lexicographic edge order,
/// '.' for uncoloured and '1'..'9' for colours.
inline std::string encode_board(const BoardState& state) {
    std::string out(static_cast<size_t>(state.edge_slots()), '.');
    for (int i = 0; i < state.edge_slots(); ++i) {
        Color c = state.color_at_index(i);
        if (c != kUncolored) out[static_cast<size_t>(i)] = static_cast<char>('0' + c);
    }
    return out;
}

inline BoardState decode_board(std::string_view text, const GameConfig& config) {
    config.validate();
    if (static_cast<int>(text.size()) != edge_count(config.n))
        throw std::invalid_argument("encoded board has wrong length");
    BoardState state(config.n, config.colors);
    for (int i = 0; i < static_cast<int>(text.size()); ++i) {
        char ch = text[static_cast<size_t>(i)];
        if (ch == '.') continue;
        if (ch < '1' || ch > '0' + config.colors)
            throw std::invalid_argument("encoded board has a colour out of range");
        state.place(i, ch - '0');
    }
    return state;
}

}  // namespace ramatch

#endif  // RAMATCH_GAME_HPP
