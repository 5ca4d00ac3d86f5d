/**
 * \file painter.hpp
 *
 * The edge-role Painter strategy and its move ledger.
 *
 * Painter tags every coloured edge as free or rooted-at-a-vertex. A vertex
 * is type I when it roots an edge, type II when it merely touches a free
 * edge, type III otherwise. On a new edge ab (oriented so a has the
 * stronger type) the move rule is picked by a's type:
 *
 *   type I   -> ab is rooted at a and copies the colour of an edge already
 *               rooted at a                                        (rule i)
 *   type II  -> a free edge ac at a is promoted to rooted-at-a, ab is also
 *               rooted at a, and ab copies ac's colour             (rule ii)
 *   type III -> ab is declared free and gets the smallest colour c whose
 *               ledger sum A(c)+B(c) is at most target(c)-2, falling back
 *               to colour 1 when no colour qualifies               (rule iii)
 *
 * A(c) counts vertices rooting at least one colour-c edge, B(c) counts free
 * colour-c edges. These sums bound the matching any colour can reach, which
 * is what makes the strategy survive until the horizon move count.
 *
 * Copyright 2026 the ramatch authors.
 * License: Apache License 2.0
 */

#ifndef RAMATCH_PAINTER_HPP
#define RAMATCH_PAINTER_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramatch/game.hpp"

namespace ramatch {

enum class EdgeRoleKind : uint8_t { kNone = 0, kFree = 1, kRooted = 2 };

enum class VertexType : uint8_t { kTypeI, kTypeII, kTypeIII };

enum class MoveRule : uint8_t { kRuleI, kRuleII, kRuleIII };

inline const char* to_string(MoveRule r) {
    switch (r) {
        case MoveRule::kRuleI: return "i";
        case MoveRule::kRuleII: return "ii";
        default: return "iii";
    }
}

inline const char* to_string(VertexType t) {
    switch (t) {
        case VertexType::kTypeI: return "I";
        case VertexType::kTypeII: return "II";
        default: return "III";
    }
}

/// Per-edge roles plus the back-references needed to answer "which edges
/// are rooted here / free here" without scanning the whole board.
struct PainterAnnotations {
    int n = 0;
    std::vector<EdgeRoleKind> kind;       ///< per edge index
    std::vector<int8_t> root;             ///< per edge index, -1 unless rooted
    std::vector<uint16_t> colored_at;     ///< move number that coloured the edge, 0 = uncoloured
    std::vector<std::vector<int>> rooted_at;  ///< per vertex: edges rooted at it
    std::vector<std::vector<int>> free_at;    ///< per vertex: incident free edges

    explicit PainterAnnotations(int vertices = 0)
        : n(vertices),
          kind(static_cast<size_t>(edge_count(vertices)), EdgeRoleKind::kNone),
          root(static_cast<size_t>(edge_count(vertices)), -1),
          colored_at(static_cast<size_t>(edge_count(vertices)), 0),
          rooted_at(static_cast<size_t>(vertices)),
          free_at(static_cast<size_t>(vertices)) {}
};

inline VertexType classify_vertex(const PainterAnnotations& ann, int v) {
    if (!ann.rooted_at[static_cast<size_t>(v)].empty()) return VertexType::kTypeI;
    if (!ann.free_at[static_cast<size_t>(v)].empty()) return VertexType::kTypeII;
    return VertexType::kTypeIII;
}

/// Orders the endpoints of an uncoloured edge so the first one has the
/// stronger type (I before II before III), ties broken by vertex index.
inline std::pair<int, int> orient_edge(const PainterAnnotations& ann, Edge e) {
    if (ann.kind[static_cast<size_t>(edge_index(e, ann.n))] != EdgeRoleKind::kNone)
        throw std::invalid_argument("edge already coloured");
    const auto rank = [&](int v) { return static_cast<int>(classify_vertex(ann, v)); };
    if (std::pair(rank(e.u), e.u) <= std::pair(rank(e.v), e.v)) return {e.u, e.v};
    return {e.v, e.u};
}

/// Move counters: A(c), B(c), the rule-(ii)/(iii) totals and moves played.
struct PainterLedger {
    std::vector<int> roots_per_color;  ///< A(c), index c-1: vertices rooting a colour-c edge
    std::vector<int> free_per_color;   ///< B(c), index c-1: free edges of colour c
    int rule2_moves = 0;               ///< C2
    int rule3_moves = 0;               ///< C3
    int moves = 0;                     ///< j

    explicit PainterLedger(int colors = 0)
        : roots_per_color(static_cast<size_t>(colors), 0),
          free_per_color(static_cast<size_t>(colors), 0) {}

    int a(Color c) const { return roots_per_color[static_cast<size_t>(c - 1)]; }
    int b(Color c) const { return free_per_color[static_cast<size_t>(c - 1)]; }
    int sum(Color c) const { return a(c) + b(c); }
    int total() const {
        return std::accumulate(roots_per_color.begin(), roots_per_color.end(), 0) +
               std::accumulate(free_per_color.begin(), free_per_color.end(), 0);
    }
};

/// Number of moves the strategy is guaranteed to survive:
/// T = 3(sum of targets - t + 1) - n - 1. May be <= 0, in which case the
/// guarantee is vacuous.
inline int survival_horizon(const GameConfig& config) {
    const int sum = std::accumulate(config.targets.begin(), config.targets.end(), 0);
    return 3 * (sum - config.colors + 1) - config.n - 1;
}

/// Resolves the strategy's "pick one arbitrarily" spots: deterministic mode
/// takes the earliest-coloured edge / smallest colour, seeded mode samples
/// uniformly so property tests cover other resolutions.
class ChoiceResolver {
  public:
    static ChoiceResolver deterministic() { return ChoiceResolver(false, 0); }
    static ChoiceResolver seeded(uint64_t seed) { return ChoiceResolver(true, seed); }

    size_t pick(size_t count) {
        if (!random_ || count <= 1) return 0;
        return std::uniform_int_distribution<size_t>(0, count - 1)(rng_);
    }

  private:
    ChoiceResolver(bool random, uint64_t seed) : random_(random), rng_(seed) {}
    bool random_;
    std::mt19937_64 rng_;
};

struct RoleChange {
    Edge edge;
    EdgeRoleKind kind = EdgeRoleKind::kNone;
    int root = -1;
};

struct PainterMove {
    int move_index = 0;
    Edge edge;
    Color color = kUncolored;
    MoveRule rule = MoveRule::kRuleIII;
    std::vector<RoleChange> roles_changed;
};

/// One Painter-side game: board, roles and ledger move in lockstep.
struct PainterGame {
    GameConfig config;
    BoardState board;
    PainterAnnotations ann;
    PainterLedger ledger;
};

inline PainterGame new_painter_game(const GameConfig& config) {
    config.validate();
    return PainterGame{config, new_game(config), PainterAnnotations(config.n),
                       PainterLedger(config.colors)};
}

namespace detail {

inline int earliest_colored(const PainterAnnotations& ann, const std::vector<int>& edges) {
    int best = edges.front();
    for (int e : edges)
        if (ann.colored_at[static_cast<size_t>(e)] < ann.colored_at[static_cast<size_t>(best)])
            best = e;
    return best;
}

inline void drop_free_ref(std::vector<int>& list, int edge_idx) {
    list.erase(std::find(list.begin(), list.end(), edge_idx));
}

}  // namespace detail

/// Plays Painter's answer to Builder revealing edge e. Mutates the game in
/// place and reports colour, rule and every role that changed.
inline PainterMove painter_move(PainterGame& game, Edge e,
                                ChoiceResolver& choices) {
    if (e.u >= e.v) e = make_edge(e.u, e.v);
    if (e.u < 0 || e.v >= game.board.n())
        throw std::invalid_argument("edge outside the board");
    const int ei = edge_index(e, game.board.n());
    if (game.board.color_at_index(ei) != kUncolored)
        throw std::invalid_argument("edge already coloured");

    PainterAnnotations& ann = game.ann;
    PainterLedger& led = game.ledger;
    const auto [a, b] = orient_edge(ann, e);

    PainterMove out;
    out.move_index = ++led.moves;
    out.edge = e;

    const auto root_new_edge_at = [&](int root) {
        ann.kind[static_cast<size_t>(ei)] = EdgeRoleKind::kRooted;
        ann.root[static_cast<size_t>(ei)] = static_cast<int8_t>(root);
        ann.rooted_at[static_cast<size_t>(root)].push_back(ei);
        out.roles_changed.push_back({e, EdgeRoleKind::kRooted, root});
    };

    switch (classify_vertex(ann, a)) {
        case VertexType::kTypeI: {
            out.rule = MoveRule::kRuleI;
            const auto& rooted = ann.rooted_at[static_cast<size_t>(a)];
            int chosen;
            if (rooted.size() == 1) {
                chosen = rooted.front();
            } else {
                std::vector<int> sorted = rooted;
                std::sort(sorted.begin(), sorted.end(), [&](int x, int y) {
                    return ann.colored_at[static_cast<size_t>(x)] < ann.colored_at[static_cast<size_t>(y)];
                });
                chosen = sorted[choices.pick(sorted.size())];
            }
            out.color = game.board.color_at_index(chosen);
            root_new_edge_at(a);
            break;
        }
        case VertexType::kTypeII: {
            out.rule = MoveRule::kRuleII;
            std::vector<int> frees = ann.free_at[static_cast<size_t>(a)];
            std::sort(frees.begin(), frees.end(), [&](int x, int y) {
                return ann.colored_at[static_cast<size_t>(x)] < ann.colored_at[static_cast<size_t>(y)];
            });
            const int promoted = frees[choices.pick(frees.size())];
            const Edge pe = edge_at(promoted, game.board.n());
            out.color = game.board.color_at_index(promoted);

            detail::drop_free_ref(ann.free_at[static_cast<size_t>(pe.u)], promoted);
            detail::drop_free_ref(ann.free_at[static_cast<size_t>(pe.v)], promoted);
            ann.kind[static_cast<size_t>(promoted)] = EdgeRoleKind::kRooted;
            ann.root[static_cast<size_t>(promoted)] = static_cast<int8_t>(a);
            ann.rooted_at[static_cast<size_t>(a)].push_back(promoted);
            out.roles_changed.push_back({pe, EdgeRoleKind::kRooted, a});
            root_new_edge_at(a);

            led.free_per_color[static_cast<size_t>(out.color - 1)] -= 1;
            led.roots_per_color[static_cast<size_t>(out.color - 1)] += 1;
            led.rule2_moves += 1;
            break;
        }
        case VertexType::kTypeIII: {
            out.rule = MoveRule::kRuleIII;
            std::vector<Color> eligible;
            for (Color c = 1; c <= game.config.colors; ++c)
                if (led.sum(c) <= game.config.target(c) - 2) eligible.push_back(c);
            if (eligible.empty())
                for (Color c = 1; c <= game.config.colors; ++c) eligible.push_back(c);
            out.color = eligible[choices.pick(eligible.size())];

            ann.kind[static_cast<size_t>(ei)] = EdgeRoleKind::kFree;
            ann.free_at[static_cast<size_t>(e.u)].push_back(ei);
            ann.free_at[static_cast<size_t>(e.v)].push_back(ei);
            out.roles_changed.push_back({e, EdgeRoleKind::kFree, -1});

            led.free_per_color[static_cast<size_t>(out.color - 1)] += 1;
            led.rule3_moves += 1;
            break;
        }
    }

    game.board.place(ei, out.color);
    ann.colored_at[static_cast<size_t>(ei)] = static_cast<uint16_t>(out.move_index);
    (void)b;
    return out;
}

inline PainterMove painter_move(PainterGame& game, Edge e) {
    ChoiceResolver det = ChoiceResolver::deterministic();
    return painter_move(game, e, det);
}

/// Ledger counters recomputed from the annotations alone.
struct LedgerAudit {
    std::vector<int> roots_per_color;  ///< A(c) by full scan
    std::vector<int> free_per_color;   ///< B(c) by full scan
    int root_vertices = 0;             ///< vertices rooting >= 1 edge
    int type_iii_count = 0;
};

inline LedgerAudit audit_ledger(const PainterGame& game) {
    const int t = game.config.colors;
    LedgerAudit audit;
    audit.roots_per_color.assign(static_cast<size_t>(t), 0);
    audit.free_per_color.assign(static_cast<size_t>(t), 0);

    for (int v = 0; v < game.board.n(); ++v) {
        std::vector<bool> roots_color(static_cast<size_t>(t + 1), false);
        for (int ei : game.ann.rooted_at[static_cast<size_t>(v)])
            roots_color[static_cast<size_t>(game.board.color_at_index(ei))] = true;
        bool any = false;
        for (Color c = 1; c <= t; ++c)
            if (roots_color[static_cast<size_t>(c)]) {
                audit.roots_per_color[static_cast<size_t>(c - 1)] += 1;
                any = true;
            }
        audit.root_vertices += any;
        if (classify_vertex(game.ann, v) == VertexType::kTypeIII) audit.type_iii_count += 1;
    }
    for (int ei = 0; ei < game.board.edge_slots(); ++ei)
        if (game.ann.kind[static_cast<size_t>(ei)] == EdgeRoleKind::kFree)
            audit.free_per_color[static_cast<size_t>(game.board.color_at_index(ei) - 1)] += 1;
    return audit;
}

inline int type_iii_count(const PainterAnnotations& ann) {
    int count = 0;
    for (int v = 0; v < ann.n; ++v)
        count += (classify_vertex(ann, v) == VertexType::kTypeIII);
    return count;
}

/// Per-edge symbol stream identifying the annotated state: 0 for an
/// uncoloured edge, otherwise colour and role (free / rooted at the lower /
/// rooted at the upper endpoint) packed into one byte. Distinct annotated
/// states give distinct strings, so this doubles as a transposition key.
inline std::string annotated_labels(const PainterGame& game) {
    std::string out(static_cast<size_t>(game.board.edge_slots()), '\0');
    for (int ei = 0; ei < game.board.edge_slots(); ++ei) {
        const Color c = game.board.color_at_index(ei);
        if (c == kUncolored) continue;
        int tag = 0;
        if (game.ann.kind[static_cast<size_t>(ei)] == EdgeRoleKind::kRooted) {
            const Edge e = edge_at(ei, game.board.n());
            tag = (game.ann.root[static_cast<size_t>(ei)] == e.u) ? 1 : 2;
        }
        out[static_cast<size_t>(ei)] = static_cast<char>(1 + 3 * (c - 1) + tag);
    }
    return out;
}

}  // namespace ramatch

#endif  // RAMATCH_PAINTER_HPP
