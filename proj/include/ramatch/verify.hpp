/**
 * \file verify.hpp
 *
 * Verification campaigns for the Painter strategy: every move of every
 * Builder sequence (exhaustive with transposition on annotated states, or
 * seeded random sampling) is checked against the strategy's invariants:
 *
 *  - type-III count deltas per rule (0 / 0 or +1 / exactly -2)
 *  - per-colour A+B conservation, +1 only on the freeing rule's colour
 *  - the incremental ledger against a full recount
 *  - type-III bounds n - 2*C3 <= #III <= n + C2 - 2*C3
 *  - sum over colours of A+B equals C3
 *  - structural counts (C2 = root vertices, free edges = C3 - C2, ...)
 *  - A_T + B_T <= sum(targets) - t at the horizon move T
 *  - every colour's matching is at most its A+B
 *  - once any colour's A+B reaches its target, every colour is within 1
 *  - annotation shape: at most one free edge per vertex, one colour per
 *    root, roles only on coloured edges
 *  - and no Builder win on or before move T.
 *
 * Transposition is sound here because the deterministic strategy is a
 * function of the annotated state, and C2/C3 are recomputable from it.
 *
 * Copyright 2026 the ramatch authors.
 * License: Apache License 2.0
 */

#ifndef RAMATCH_VERIFY_HPP
#define RAMATCH_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "ramatch/game.hpp"
#include "ramatch/matching.hpp"
#include "ramatch/painter.hpp"

namespace ramatch {

struct VerifyOptions {
    uint64_t state_cap = 1'000'000'000;  ///< exhaustive mode: max states expanded
    int threads = 1;                     ///< random mode only
    bool painter_random_choices = false; ///< random mode: seeded choice resolution
    size_t max_recorded_failures = 100;
};

struct VerifyReport {
    GameConfig config;
    std::string mode;
    int depth = 0;
    int horizon = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    uint64_t sequences_tested = 0;
    uint64_t states_explored = 0;
    uint64_t transitions_checked = 0;
    uint64_t wins_after_horizon = 0;
    std::vector<PlayRecord> failures;
    std::map<std::string, uint64_t> violations;
    bool success = false;
    bool complete = false;
    bool vacuous = false;
    double wall_time_s = 0.0;
};

namespace detail {

struct LedgerSnapshot {
    std::vector<int> sums;  ///< A+B per colour
    int type3 = 0;
};

inline LedgerSnapshot snapshot(const PainterGame& game) {
    LedgerSnapshot snap;
    snap.sums.reserve(static_cast<size_t>(game.config.colors));
    for (Color c = 1; c <= game.config.colors; ++c) snap.sums.push_back(game.ledger.sum(c));
    snap.type3 = type_iii_count(game.ann);
    return snap;
}

/// Names of the invariants violated by this transition, empty when clean.
inline std::vector<std::string> check_transition(const PainterGame& after,
                                                 const PainterMove& move,
                                                 const LedgerSnapshot& before, int horizon) {
    std::vector<std::string> bad;
    const GameConfig& config = after.config;
    const PainterLedger& led = after.ledger;
    const int t = config.colors;
    const int n = config.n;
    const LedgerAudit audit = audit_ledger(after);
    const int type3 = audit.type_iii_count;

    switch (move.rule) {
        case MoveRule::kRuleI:
            if (type3 != before.type3) bad.push_back("obs5_type_iii_delta");
            break;
        case MoveRule::kRuleII:
            if (type3 != before.type3 && type3 != before.type3 + 1)
                bad.push_back("obs5_type_iii_delta");
            break;
        case MoveRule::kRuleIII:
            if (type3 != before.type3 - 2) bad.push_back("obs5_type_iii_delta");
            break;
    }

    for (Color c = 1; c <= t; ++c) {
        const int expected = before.sums[static_cast<size_t>(c - 1)] +
                             ((move.rule == MoveRule::kRuleIII && c == move.color) ? 1 : 0);
        if (led.sum(c) != expected) {
            bad.push_back("obs6_color_sums");
            break;
        }
    }

    if (audit.roots_per_color != led.roots_per_color ||
        audit.free_per_color != led.free_per_color)
        bad.push_back("ledger_audit");

    if (!(n - 2 * led.rule3_moves <= type3 &&
          type3 <= n + led.rule2_moves - 2 * led.rule3_moves))
        bad.push_back("type_iii_bounds");

    if (led.total() != led.rule3_moves) bad.push_back("sum_ab_equals_c3");

    {
        const int total_roots = std::accumulate(led.roots_per_color.begin(),
                                                led.roots_per_color.end(), 0);
        const int total_free = std::accumulate(led.free_per_color.begin(),
                                               led.free_per_color.end(), 0);
        const bool ok = audit.root_vertices == led.rule2_moves &&
                        total_roots == led.rule2_moves &&
                        total_free == led.rule3_moves - led.rule2_moves &&
                        led.rule2_moves + led.rule3_moves <= led.moves;
        if (!ok) bad.push_back("counts_consistent");
    }

    if (led.moves == horizon) {
        const int target_sum = std::accumulate(config.targets.begin(), config.targets.end(), 0);
        if (led.total() > target_sum - t) bad.push_back("lemma7_horizon");
    }

    for (Color c = 1; c <= t; ++c)
        if (max_matching_size(color_subgraph(after.board, c)) > led.sum(c)) {
            bad.push_back("matching_ledger_domination");
            break;
        }

    {
        bool saturated = false;
        for (Color c = 1; c <= t; ++c) saturated |= led.sum(c) >= config.target(c);
        if (saturated)
            for (Color c = 1; c <= t; ++c)
                if (led.sum(c) < config.target(c) - 1) {
                    bad.push_back("slack_propagation");
                    break;
                }
    }

    {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            ok = after.ann.free_at[static_cast<size_t>(v)].size() <= 1;
            Color root_color = kUncolored;
            for (int ei : after.ann.rooted_at[static_cast<size_t>(v)]) {
                const Color c = after.board.color_at_index(ei);
                if (root_color == kUncolored) root_color = c;
                ok = ok && c == root_color;
                const Edge e = edge_at(ei, n);
                ok = ok && (e.u == v || e.v == v);
            }
        }
        for (int ei = 0; ei < after.board.edge_slots() && ok; ++ei) {
            const bool colored = after.board.color_at_index(ei) != kUncolored;
            ok = (after.ann.kind[static_cast<size_t>(ei)] != EdgeRoleKind::kNone) == colored;
        }
        if (!ok) bad.push_back("annotation_structure");
    }

    if (led.moves <= horizon && builder_won(after.board, config))
        bad.push_back("no_win_within_horizon");

    return bad;
}

inline uint64_t falling_factorial_clamped(int base, int length) {
    unsigned __int128 product = 1;
    for (int i = 0; i < length; ++i) {
        product *= static_cast<unsigned>(base - i);
        if (product > std::numeric_limits<uint64_t>::max())
            return std::numeric_limits<uint64_t>::max();
    }
    return static_cast<uint64_t>(product);
}

struct CapExceeded {};

}  // namespace detail

/// Plays every Builder sequence of the given length against the strategy,
/// deduplicating on annotated states. depth < 0 means "use the survival
/// horizon". Throws when depth exceeds the edge count.
inline VerifyReport verify_painter_exhaustive(const GameConfig& config, int depth = -1,
                                              const VerifyOptions& options = {}) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    VerifyReport report;
    report.config = config;
    report.mode = "exhaustive";
    report.horizon = survival_horizon(config);
    if (depth < 0) depth = std::max(report.horizon, 0);
    if (depth > edge_count(config.n))
        throw std::invalid_argument("depth exceeds the number of edges");
    report.depth = depth;

    if (depth == 0) {
        report.vacuous = true;
        report.success = true;
        report.complete = true;
        report.sequences_tested = 1;  // the empty sequence
        report.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    std::unordered_set<std::string> visited;
    PlayRecord prefix;
    bool capped = false;

    const auto record_failure = [&](const std::vector<std::string>& names) {
        for (const std::string& name : names) report.violations[name] += 1;
        if (!names.empty() && report.failures.size() < options.max_recorded_failures)
            report.failures.push_back(prefix);
    };

    const auto dfs = [&](auto&& self, PainterGame& game, int depth_left) -> void {
        if (report.states_explored >= options.state_cap) throw detail::CapExceeded{};
        report.states_explored += 1;
        for (int ei = 0; ei < game.board.edge_slots(); ++ei) {
            if (game.board.color_at_index(ei) != kUncolored) continue;
            const Edge e = edge_at(ei, config.n);
            PainterGame child = game;
            const detail::LedgerSnapshot before = detail::snapshot(child);
            const PainterMove mv = painter_move(child, e);
            prefix.moves.push_back({e, mv.color});
            report.transitions_checked += 1;
            record_failure(detail::check_transition(child, mv, before, report.horizon));
            const bool won = builder_won(child.board, config).has_value();
            if (won && child.ledger.moves > report.horizon) report.wins_after_horizon += 1;
            if (!won && depth_left > 1 &&
                visited.insert(annotated_labels(child)).second)
                self(self, child, depth_left - 1);
            prefix.moves.pop_back();
        }
    };

    try {
        PainterGame root = new_painter_game(config);
        visited.insert(annotated_labels(root));
        dfs(dfs, root, depth);
        report.complete = true;
        report.sequences_tested =
            detail::falling_factorial_clamped(edge_count(config.n), depth);
    } catch (const detail::CapExceeded&) {
        capped = true;
    }
    report.complete = !capped && report.complete;
    report.success = report.failures.empty() && report.violations.empty();
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Plays `trials` uniformly random Builder sequences of the given length.
/// Fully reproducible from (config, trials, seed, depth); workers shard by
/// trial index and merge deterministically.
inline VerifyReport verify_painter_random(const GameConfig& config, uint64_t trials,
                                          uint64_t seed, int depth,
                                          const VerifyOptions& options = {}) {
    config.validate();
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    if (depth > edge_count(config.n))
        throw std::invalid_argument("depth exceeds the number of edges");
    const auto start = std::chrono::steady_clock::now();

    VerifyReport report;
    report.config = config;
    report.mode = "random";
    report.horizon = survival_horizon(config);
    report.depth = depth;
    report.trials = trials;
    report.seed = seed;

    struct TrialFailure {
        uint64_t trial;
        PlayRecord record;
    };
    struct WorkerReport {
        std::map<std::string, uint64_t> violations;
        std::vector<TrialFailure> failures;
        uint64_t transitions = 0;
        uint64_t states = 0;
        uint64_t wins_after_horizon = 0;
    };

    const int nworkers = std::max(1, options.threads);
    std::vector<WorkerReport> parts(static_cast<size_t>(nworkers));
    const auto run_shard = [&](int worker) {
        WorkerReport& part = parts[static_cast<size_t>(worker)];
        for (uint64_t trial = static_cast<uint64_t>(worker); trial < trials;
             trial += static_cast<uint64_t>(nworkers)) {
            std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (trial + 1));
            ChoiceResolver resolver = options.painter_random_choices
                                          ? ChoiceResolver::seeded(rng())
                                          : ChoiceResolver::deterministic();
            PainterGame game = new_painter_game(config);
            PlayRecord prefix;
            for (int step = 0; step < depth; ++step) {
                const std::vector<Edge> open = uncolored_edges(game.board);
                const Edge e = open[std::uniform_int_distribution<size_t>(
                    0, open.size() - 1)(rng)];
                const detail::LedgerSnapshot before = detail::snapshot(game);
                const PainterMove mv = painter_move(game, e, resolver);
                prefix.moves.push_back({e, mv.color});
                part.transitions += 1;
                part.states += 1;
                const auto bad = detail::check_transition(game, mv, before, report.horizon);
                for (const std::string& name : bad) part.violations[name] += 1;
                if (!bad.empty()) part.failures.push_back({trial, prefix});
                if (builder_won(game.board, config)) {
                    if (game.ledger.moves > report.horizon) part.wins_after_horizon += 1;
                    break;
                }
            }
        }
    };

    if (nworkers == 1) {
        run_shard(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nworkers));
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(run_shard, w);
        for (auto& th : pool) th.join();
    }

    std::vector<TrialFailure> all_failures;
    for (const WorkerReport& part : parts) {
        for (const auto& [name, count] : part.violations) report.violations[name] += count;
        all_failures.insert(all_failures.end(), part.failures.begin(), part.failures.end());
        report.transitions_checked += part.transitions;
        report.states_explored += part.states;
        report.wins_after_horizon += part.wins_after_horizon;
    }
    std::sort(all_failures.begin(), all_failures.end(),
              [](const TrialFailure& x, const TrialFailure& y) { return x.trial < y.trial; });
    for (const TrialFailure& f : all_failures) {
        if (report.failures.size() >= options.max_recorded_failures) break;
        report.failures.push_back(f.record);
    }

    report.sequences_tested = trials;
    report.complete = true;
    report.success = report.failures.empty() && report.violations.empty();
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace ramatch

#endif  // RAMATCH_VERIFY_HPP
