/**
 * \file interactive.hpp
 *
 * Terminal exploration aid: a human plays Builder against the edge-role
 * Painter, move by move, with the ledger echoed after every reply.
 *
 * Copyright 2026 the ramatch authors.
 * License: Apache License 2.0
 */

#ifndef RAMATCH_INTERACTIVE_HPP
#define RAMATCH_INTERACTIVE_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ramatch/bounds.hpp"
#include "ramatch/io.hpp"
#include "ramatch/matching.hpp"
#include "ramatch/painter.hpp"

namespace ramatch {

/// Runs one interactive game on the given streams. Moves are entered as
/// "u v"; "quit" (or end of input) leaves. Returns a process exit status.
inline int play_session(std::istream& in, std::ostream& out, const GameConfig& config,
                        std::ostream* trace = nullptr) {
    config.validate();
    PainterGame game = new_painter_game(config);
    const int horizon = survival_horizon(config);
    const bool lower_applies = config.colors >= 2 && config.n >= cockayne_lorimer(config.targets);
    const int lower = theorem3_lower(config.colors, config.targets, config.n);

    out << "board K_" << config.n << ", colours 1.." << config.colors << ", targets";
    for (size_t i = 0; i < config.targets.size(); ++i)
        out << (i ? "," : " ") << config.targets[i];
    out << " (painter survives " << horizon << " moves";
    if (lower_applies) out << "; builder needs >= " << lower;
    out << ")\n";
    out << "enter moves as \"u v\" with 0 <= u,v < " << config.n << ", or \"quit\"\n";

    std::string line;
    while (true) {
        out << "move " << (game.ledger.moves + 1) << "> " << std::flush;
        if (!std::getline(in, line)) {
            out << "\n";
            return 0;
        }
        std::istringstream parse(line);
        std::string word;
        if (!(parse >> word)) continue;
        if (word == "quit" || word == "q" || word == "exit") return 0;

        int u = 0, v = 0;
        std::istringstream nums(line);
        if (!(nums >> u >> v)) {
            out << "  could not parse; enter two vertex indices like \"0 3\"\n";
            continue;
        }
        Edge e;
        try {
            e = make_edge(u, v);
            if (e.v >= config.n) throw std::invalid_argument("vertex outside the board");
            if (game.board.color_at(e) != kUncolored)
                throw std::invalid_argument("edge already coloured");
        } catch (const std::invalid_argument& err) {
            out << "  rejected: " << err.what() << "\n";
            continue;
        }

        const PainterMove move = painter_move(game, e);
        out << "  painter: colour " << move.color << ", rule " << to_string(move.rule) << "  [A=";
        for (size_t i = 0; i < game.ledger.roots_per_color.size(); ++i)
            out << (i ? "," : "") << game.ledger.roots_per_color[i];
        out << " B=";
        for (size_t i = 0; i < game.ledger.free_per_color.size(); ++i)
            out << (i ? "," : "") << game.ledger.free_per_color[i];
        out << " C2=" << game.ledger.rule2_moves << " C3=" << game.ledger.rule3_moves
            << " typeIII=" << type_iii_count(game.ann) << "]\n";
        if (trace) *trace << trace_record(game, move).dump() << "\n";

        if (const auto winner = builder_won(game.board, config)) {
            out << "builder wins with colour " << *winner << " after " << game.ledger.moves
                << " moves";
            if (lower_applies) out << " (lower bound " << lower << ")";
            out << "; painter horizon was " << horizon << "\n";
            return 0;
        }
        if (game.board.full()) {
            out << "board is full after " << game.ledger.moves
                << " moves and no colour reached its target; painter survives\n";
            return 0;
        }
    }
}

}  // namespace ramatch

#endif  // RAMATCH_INTERACTIVE_HPP
