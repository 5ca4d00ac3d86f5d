/**
 * \file solver.hpp
 *
 * Exact game values by minimax search.
 *
 * Builder minimizes the number of moves to a monochromatic target matching,
 * Painter maximizes it; value(S) = 0 on a won board, NoWin when the board
 * fills up first, else 1 + min over uncoloured edges of max over colours.
 *
 * solve_exact runs iterative deepening on the Builder budget with
 *   - one Builder branch per canonical edge orbit,
 *   - a transposition table keyed on canonical state keys (moves elapsed
 *     equals the coloured-edge count, so no depth component is needed),
 *   - the admissible bound "remaining >= min over colours of
 *     target - matching", which is exact-wins-only safe because a move
 *     grows exactly one colour's matching by at most one.
 *
 * solve_naive is the independent oracle: a bottom-up table over every raw
 * edge assignment, no canonicalization, no orbit reduction, no pruning.
 *
 * best_builder_vs_painter fixes Painter to the edge-role strategy and
 * searches Builder move sequences only. Its memo key is the annotated
 * state; the deterministic strategy is a pure function of it.
 *
 * Copyright 2026 the ramatch authors.
 * License: Apache License 2.0
 */

#ifndef RAMATCH_SOLVER_HPP
#define RAMATCH_SOLVER_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "ramatch/canon.hpp"
#include "ramatch/game.hpp"
#include "ramatch/matching.hpp"
#include "ramatch/painter.hpp"

namespace ramatch {

/// Outcome of a solve: an exact optimal move count, a proof that Painter
/// can fill the whole board, or "no win within `bound` moves" when the
/// search stopped at its budget or deadline.
struct GameValue {
    enum class Kind : uint8_t { kFinite, kNoWin, kBudgetExceeded };
    Kind kind = Kind::kNoWin;
    int value = 0;  ///< finite move count, or the proven bound

    static GameValue finite(int k) { return {Kind::kFinite, k}; }
    static GameValue no_win() { return {Kind::kNoWin, 0}; }
    static GameValue budget_exceeded(int bound) { return {Kind::kBudgetExceeded, bound}; }

    bool is_finite() const { return kind == Kind::kFinite; }
    bool operator==(const GameValue&) const = default;
};

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t memo_hits = 0;
    uint64_t memo_size = 0;
    double wall_time_s = 0.0;
    int max_depth = 0;
};

struct SolveResult {
    GameValue value;
    SearchStats stats;
};

struct SolveOptions {
    int threads = 1;
    double time_limit_s = 0.0;  ///< 0 = unlimited
};

namespace detail {

constexpr int kNoWinValue = 1 << 29;
constexpr int kUnknown = std::numeric_limits<int32_t>::max();
constexpr int kInfBest = 1 << 28;

struct TimeoutError {};

enum class Outcome : uint8_t { kExact, kCut, kNoWin };

struct NodeResult {
    Outcome outcome;
    int value = 0;  ///< meaningful for kExact only
};

/// Sharded transposition table. Entries are facts about a state (exact
/// value, NoWin, or a lower bound), so concurrent workers may insert the
/// same fact without coordination beyond the shard lock.
class MemoTable {
  public:
    struct Entry {
        int32_t lower = 0;
        int32_t upper = kUnknown;  ///< == lower once the value is exact
    };

    std::optional<Entry> find(const std::string& key) {
        Shard& s = shard(key);
        std::scoped_lock lock(s.mu);
        auto it = s.map.find(key);
        if (it == s.map.end()) return std::nullopt;
        return it->second;
    }

    void raise_lower(const std::string& key, int lower) {
        Shard& s = shard(key);
        std::scoped_lock lock(s.mu);
        Entry& e = s.map[key];
        e.lower = std::max(e.lower, static_cast<int32_t>(lower));
    }

    void set_exact(const std::string& key, int value) {
        Shard& s = shard(key);
        std::scoped_lock lock(s.mu);
        Entry& e = s.map[key];
        e.lower = value;
        e.upper = value;
    }

    size_t size() {
        size_t total = 0;
        for (Shard& s : shards_) {
            std::scoped_lock lock(s.mu);
            total += s.map.size();
        }
        return total;
    }

  private:
    struct Shard {
        std::mutex mu;
        std::unordered_map<std::string, Entry> map;
    };
    Shard& shard(const std::string& key) {
        return shards_[std::hash<std::string>{}(key) % shards_.size()];
    }
    std::array<Shard, 16> shards_;
};

struct SearchShared {
    GameConfig config;
    MemoTable memo;
    std::atomic<uint64_t> nodes{0};
    std::atomic<uint64_t> memo_hits{0};
    std::atomic<int> max_depth{0};
    std::atomic<bool> timed_out{false};
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;

    void check_deadline() {
        if (timed_out.load(std::memory_order_relaxed)) throw TimeoutError{};
        if (has_deadline && std::chrono::steady_clock::now() >= deadline) {
            timed_out.store(true, std::memory_order_relaxed);
            throw TimeoutError{};
        }
    }
};

/// One search context: a mutable board plus per-colour adjacency masks,
/// walked depth-first with apply/undo.
class ExactWorker {
  public:
    ExactWorker(SearchShared& shared, const BoardState& start)
        : shared_(shared), config_(shared.config), board_(start),
          adj_(static_cast<size_t>(config_.colors + 1),
               std::vector<uint32_t>(static_cast<size_t>(config_.n), 0)),
          colored_(0) {
        for (int ei = 0; ei < board_.edge_slots(); ++ei) {
            const Color c = board_.color_at_index(ei);
            if (c != kUncolored) {
                link(ei, c);
                ++colored_;
            }
        }
    }

    /// Bounded minimax from the current (not yet won) position.
    NodeResult search(int allowance) {
        if ((shared_.nodes.fetch_add(1, std::memory_order_relaxed) & 1023) == 0)
            shared_.check_deadline();
        track_depth();

        const int remaining = board_.edge_slots() - colored_;
        if (remaining == 0) return {Outcome::kNoWin, 0};
        const int d = std::min(allowance, remaining);

        const std::string key = canonical_key(board_, config_).bytes;
        if (auto entry = shared_.memo.find(key)) {
            if (entry->lower == entry->upper) {
                shared_.memo_hits.fetch_add(1, std::memory_order_relaxed);
                if (entry->lower == kNoWinValue) return {Outcome::kNoWin, 0};
                if (entry->lower <= d) return {Outcome::kExact, entry->lower};
                return {Outcome::kCut, 0};
            }
            if (entry->lower > d) {
                shared_.memo_hits.fetch_add(1, std::memory_order_relaxed);
                return {Outcome::kCut, 0};
            }
        }

        const int bound = admissible_bound();
        if (bound > remaining) {
            // not enough edges left for any colour to reach its target
            shared_.memo.set_exact(key, kNoWinValue);
            return {Outcome::kNoWin, 0};
        }
        if (bound > d) {
            shared_.memo.raise_lower(key, bound);
            return {Outcome::kCut, 0};
        }

        const std::vector<int> reps = orbit_representatives(board_, config_);
        // one matching row per representative: row[c-1] = colour-c matching
        // size after playing the edge in colour c
        std::vector<std::vector<int>> rows(reps.size());
        std::vector<std::pair<int, size_t>> order;
        order.reserve(reps.size());
        for (size_t i = 0; i < reps.size(); ++i) {
            rows[i] = child_matchings(reps[i]);
            order.push_back({builder_threat(rows[i]), i});
        }
        std::sort(order.begin(), order.end());

        int best = kInfBest;
        bool saw_cut = false;
        for (const auto& [threat, i] : order) {
            if (best <= bound) break;  // already at the admissible floor
            const int child_allowance = std::min(d - 1, best - 2);
            const NodeResult r = painter_best(reps[i], rows[i], child_allowance);
            if (r.outcome == Outcome::kExact) best = std::min(best, r.value + 1);
            else if (r.outcome == Outcome::kCut) saw_cut = true;
            // kNoWin branches never help Builder
        }

        if (best < kInfBest) {
            shared_.memo.set_exact(key, best);
            return {Outcome::kExact, best};
        }
        if (!saw_cut) {
            shared_.memo.set_exact(key, kNoWinValue);
            return {Outcome::kNoWin, 0};
        }
        shared_.memo.raise_lower(key, d + 1);
        return {Outcome::kCut, 0};
    }

    /// Painter's best reply on one edge: max over colours. Returns kCut as
    /// soon as any reply escapes the allowance, kNoWin as soon as any reply
    /// reaches a full-board survival.
    NodeResult painter_best(int edge_idx, const std::vector<int>& row, int allowance) {
        if (allowance < 0) return {Outcome::kCut, 0};
        std::vector<std::pair<int, Color>> order;
        order.reserve(static_cast<size_t>(config_.colors));
        for (Color c = 1; c <= config_.colors; ++c)
            order.push_back({-(config_.target(c) - row[static_cast<size_t>(c - 1)]), c});
        std::sort(order.begin(), order.end());  // most Painter slack first

        int best = -1;
        for (const auto& [neg_slack, c] : order) {
            if (row[static_cast<size_t>(c - 1)] >= config_.target(c)) {
                best = std::max(best, 0);  // Builder wins immediately here
                continue;
            }
            apply(edge_idx, c);
            NodeResult r = search(allowance);
            undo(edge_idx, c);
            if (r.outcome != Outcome::kExact) return r;
            best = std::max(best, r.value);
        }
        return {Outcome::kExact, best};
    }

    std::vector<int> child_matchings(int edge_idx) {
        std::vector<int> row(static_cast<size_t>(config_.colors), 0);
        for (Color c = 1; c <= config_.colors; ++c) {
            apply(edge_idx, c);
            row[static_cast<size_t>(c - 1)] = color_matching(c);
            undo(edge_idx, c);
        }
        return row;
    }

    int admissible_bound() {
        int bound = std::numeric_limits<int>::max();
        for (Color c = 1; c <= config_.colors; ++c)
            bound = std::min(bound, config_.target(c) - color_matching(c));
        return bound;
    }

    void apply(int edge_idx, Color c) {
        board_.place(edge_idx, c);
        link(edge_idx, c);
        ++colored_;
    }

    void undo(int edge_idx, Color c) {
        board_.clear(edge_idx);
        unlink(edge_idx, c);
        --colored_;
    }

    const BoardState& board() const { return board_; }

  private:
    void link(int edge_idx, Color c) {
        const Edge e = edge_at(edge_idx, config_.n);
        adj_[static_cast<size_t>(c)][static_cast<size_t>(e.u)] |= 1u << e.v;
        adj_[static_cast<size_t>(c)][static_cast<size_t>(e.v)] |= 1u << e.u;
    }
    void unlink(int edge_idx, Color c) {
        const Edge e = edge_at(edge_idx, config_.n);
        adj_[static_cast<size_t>(c)][static_cast<size_t>(e.u)] &= ~(1u << e.v);
        adj_[static_cast<size_t>(c)][static_cast<size_t>(e.v)] &= ~(1u << e.u);
    }
    int color_matching(Color c) { return max_matching_size(config_.n, adj_[static_cast<size_t>(c)]); }

    int builder_threat(const std::vector<int>& row) {
        // Painter answers with the reply that keeps the largest deficit.
        int worst = 0;
        for (Color c = 1; c <= config_.colors; ++c) {
            int deficit = std::numeric_limits<int>::max();
            for (Color c2 = 1; c2 <= config_.colors; ++c2) {
                const int m = (c2 == c) ? row[static_cast<size_t>(c2 - 1)] : color_matching(c2);
                deficit = std::min(deficit, config_.target(c2) - m);
            }
            worst = std::max(worst, deficit);
        }
        return worst;
    }

    void track_depth() {
        int depth = colored_;
        int prev = shared_.max_depth.load(std::memory_order_relaxed);
        while (depth > prev &&
               !shared_.max_depth.compare_exchange_weak(prev, depth, std::memory_order_relaxed)) {
        }
    }

    SearchShared& shared_;
    GameConfig config_;
    BoardState board_;
    std::vector<std::vector<uint32_t>> adj_;
    int colored_;
};

/// Root of one deepening iteration, optionally fanning the grandchildren
/// (orbit representative x colour) out to a thread pool. Values do not
/// depend on the worker count; only visit statistics do.
inline NodeResult root_search(SearchShared& shared, const BoardState& root, int allowance,
                              int threads) {
    if (threads <= 1) {
        ExactWorker worker(shared, root);
        return worker.search(allowance);
    }

    const GameConfig& config = shared.config;
    const int remaining = root.edge_slots();
    if (remaining == 0) return {Outcome::kNoWin, 0};
    const int d = std::min(allowance, remaining);

    ExactWorker probe(shared, root);
    const int bound = probe.admissible_bound();
    if (bound > remaining) return {Outcome::kNoWin, 0};
    if (bound > d) return {Outcome::kCut, 0};

    struct Task {
        int edge_idx;
        Color color;
        bool wins = false;
        NodeResult result{Outcome::kCut, 0};
    };
    const std::vector<int> reps = orbit_representatives(root, config);
    std::vector<Task> tasks;
    for (int rep : reps) {
        const auto row = probe.child_matchings(rep);
        for (Color c = 1; c <= config.colors; ++c) {
            Task task{rep, c};
            task.wins = row[static_cast<size_t>(c - 1)] >= config.target(c);
            tasks.push_back(task);
        }
    }

    std::atomic<size_t> next{0};
    const auto pump = [&]() {
        try {
            for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                Task& task = tasks[i];
                if (task.wins) {
                    task.result = {Outcome::kExact, 0};
                    continue;
                }
                BoardState child = root;
                child.place(task.edge_idx, task.color);
                ExactWorker worker(shared, child);
                task.result = worker.search(d - 1);
            }
        } catch (const TimeoutError&) {
            shared.timed_out.store(true, std::memory_order_relaxed);
        }
    };
    std::vector<std::thread> pool;
    const int nworkers = std::min<int>(threads, static_cast<int>(tasks.size()));
    pool.reserve(static_cast<size_t>(nworkers));
    for (int i = 0; i < nworkers; ++i) pool.emplace_back(pump);
    for (auto& th : pool) th.join();
    if (shared.timed_out.load()) throw TimeoutError{};

    int best = kInfBest;
    bool saw_cut = false;
    size_t cursor = 0;
    for (size_t r = 0; r < reps.size(); ++r) {
        int worst = -1;
        bool rep_cut = false, rep_nowin = false;
        for (Color c = 1; c <= config.colors; ++c, ++cursor) {
            const NodeResult& child = tasks[cursor].result;
            if (child.outcome == Outcome::kCut) rep_cut = true;
            else if (child.outcome == Outcome::kNoWin) rep_nowin = true;
            else worst = std::max(worst, child.value);
        }
        if (rep_nowin) continue;       // Painter survives this opening
        if (rep_cut) { saw_cut = true; continue; }
        best = std::min(best, worst + 1);
    }
    if (best < kInfBest) return {Outcome::kExact, best};
    if (!saw_cut) return {Outcome::kNoWin, 0};
    return {Outcome::kCut, 0};
}

}  // namespace detail

/// Exact restricted online Ramsey value of the configuration, as far as the
/// Builder move budget allows. Deterministic across runs and thread counts.
inline SolveResult solve_exact(const GameConfig& config, int budget,
                               const SolveOptions& options = {}) {
    config.validate();
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    detail::check_canon_range(config.n);

    const auto start = std::chrono::steady_clock::now();
    detail::SearchShared shared;
    shared.config = config;
    if (options.time_limit_s > 0) {
        shared.has_deadline = true;
        shared.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                      std::chrono::duration<double>(options.time_limit_s));
    }

    const BoardState root = new_game(config);
    const int total_edges = root.edge_slots();
    const int budget_eff = std::min(budget, total_edges);
    int start_bound = std::numeric_limits<int>::max();
    for (Color c = 1; c <= config.colors; ++c)
        start_bound = std::min(start_bound, config.target(c));

    SolveResult out;
    out.value = GameValue::budget_exceeded(std::max(start_bound - 1, 0));
    try {
        for (int b = std::min(start_bound, budget_eff); b <= budget_eff; ++b) {
            const detail::NodeResult r = detail::root_search(shared, root, b, options.threads);
            if (r.outcome == detail::Outcome::kExact) {
                out.value = GameValue::finite(r.value);
                break;
            }
            if (r.outcome == detail::Outcome::kNoWin) {
                out.value = GameValue::no_win();
                break;
            }
            out.value = GameValue::budget_exceeded(b);
        }
    } catch (const detail::TimeoutError&) {
        // keep the bound proven by the last completed iteration
    }

    out.stats.nodes = shared.nodes.load();
    out.stats.memo_hits = shared.memo_hits.load();
    out.stats.memo_size = shared.memo.size();
    out.stats.max_depth = shared.max_depth.load();
    out.stats.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

/// Minimax-optimal Builder openings, one per orbit of the empty board, each
/// paired with the game value it achieves. Empty unless the value is finite
/// within the budget.
inline std::vector<std::pair<Edge, int>> optimal_first_moves(const GameConfig& config,
                                                             int budget = 0,
                                                             const SolveOptions& options = {}) {
    config.validate();
    const int total_edges = edge_count(config.n);
    if (budget <= 0) budget = std::max(total_edges, 1);
    const SolveResult solved = solve_exact(config, budget, options);
    if (!solved.value.is_finite()) return {};
    const int value = solved.value.value;

    detail::SearchShared shared;
    shared.config = config;
    const BoardState root = new_game(config);
    detail::ExactWorker worker(shared, root);

    std::vector<std::pair<Edge, int>> openings;
    for (int rep : orbit_representatives(root, config)) {
        const auto row = worker.child_matchings(rep);
        const detail::NodeResult r = worker.painter_best(rep, row, value - 1);
        if (r.outcome == detail::Outcome::kExact && r.value + 1 == value)
            openings.push_back({edge_at(rep, config.n), value});
    }
    return openings;
}

/// Size cap for the naive full-table oracle ((t+1)^edges states).
constexpr uint64_t kNaiveMaxStates = 4u << 20;

/// Independent oracle: tabulates the value of every raw assignment, most
/// coloured first. No canonicalization, no orbit reduction, no pruning.
inline SolveResult solve_naive(const GameConfig& config, int budget) {
    config.validate();
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    const int ecount = edge_count(config.n);
    const uint64_t radix = static_cast<uint64_t>(config.colors) + 1;
    uint64_t total = 1;
    for (int e = 0; e < ecount; ++e) {
        total *= radix;
        if (total > kNaiveMaxStates)
            throw std::invalid_argument("instance too large for the naive solver");
    }

    std::vector<uint64_t> pow(static_cast<size_t>(ecount + 1), 1);
    for (int e = 0; e < ecount; ++e) pow[static_cast<size_t>(e + 1)] = pow[static_cast<size_t>(e)] * radix;

    std::vector<uint8_t> colored_count(total, 0);
    std::vector<int32_t> value(total, 0);
    std::vector<uint8_t> digits(static_cast<size_t>(ecount), 0);
    std::vector<uint32_t> adj;

    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t rest = idx;
        uint8_t cnt = 0;
        for (int e = 0; e < ecount; ++e) {
            cnt += (rest % radix) != 0;
            rest /= radix;
        }
        colored_count[idx] = cnt;
    }

    for (int level = ecount; level >= 0; --level) {
        for (uint64_t idx = 0; idx < total; ++idx) {
            if (colored_count[idx] != level) continue;
            uint64_t rest = idx;
            for (int e = 0; e < ecount; ++e) {
                digits[static_cast<size_t>(e)] = static_cast<uint8_t>(rest % radix);
                rest /= radix;
            }
            bool won = false;
            for (Color c = 1; c <= config.colors && !won; ++c) {
                adj.assign(static_cast<size_t>(config.n), 0);
                int edges_in_color = 0;
                for (int e = 0; e < ecount; ++e) {
                    if (digits[static_cast<size_t>(e)] != c) continue;
                    const Edge edge = edge_at(e, config.n);
                    adj[static_cast<size_t>(edge.u)] |= 1u << edge.v;
                    adj[static_cast<size_t>(edge.v)] |= 1u << edge.u;
                    ++edges_in_color;
                }
                won = edges_in_color >= config.target(c) &&
                      max_matching_size(config.n, adj) >= config.target(c);
            }
            if (won) {
                value[idx] = 0;
                continue;
            }
            if (level == ecount) {
                value[idx] = detail::kNoWinValue;
                continue;
            }
            int32_t best = detail::kNoWinValue;
            for (int e = 0; e < ecount; ++e) {
                if (digits[static_cast<size_t>(e)] != 0) continue;
                int32_t worst = -1;
                for (Color c = 1; c <= config.colors; ++c)
                    worst = std::max(worst,
                                     value[idx + static_cast<uint64_t>(c) * pow[static_cast<size_t>(e)]]);
                best = std::min(best, worst);
            }
            value[idx] = (best >= detail::kNoWinValue) ? detail::kNoWinValue : best + 1;
        }
    }

    SolveResult out;
    const int32_t v = value[0];
    if (v >= detail::kNoWinValue) out.value = GameValue::no_win();
    else if (v <= budget) out.value = GameValue::finite(v);
    else out.value = GameValue::budget_exceeded(budget);
    out.stats.nodes = total;
    out.stats.memo_size = total;
    out.stats.max_depth = ecount;
    out.stats.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

namespace detail {

/// Builder-only search against the fixed Painter strategy. States carry the
/// full annotations; the deterministic strategy is a function of them, so
/// the annotated label string is a sound memo key. No vertex-isomorphism
/// reduction: the strategy breaks ties by vertex index, so relabelled
/// states need not play alike.
class VsPainterSearch {
  public:
    VsPainterSearch(SearchShared& shared) : shared_(shared) {}

    NodeResult search(PainterGame& game, int allowance) {
        if ((shared_.nodes.fetch_add(1, std::memory_order_relaxed) & 1023) == 0)
            shared_.check_deadline();

        const int colored = game.ledger.moves;
        const int remaining = game.board.edge_slots() - colored;
        {
            int prev = shared_.max_depth.load(std::memory_order_relaxed);
            while (colored > prev &&
                   !shared_.max_depth.compare_exchange_weak(prev, colored,
                                                            std::memory_order_relaxed)) {
            }
        }
        if (remaining == 0) return {Outcome::kNoWin, 0};
        const int d = std::min(allowance, remaining);

        const std::string key = annotated_labels(game);
        if (auto entry = shared_.memo.find(key)) {
            if (entry->lower == entry->upper) {
                shared_.memo_hits.fetch_add(1, std::memory_order_relaxed);
                if (entry->lower == kNoWinValue) return {Outcome::kNoWin, 0};
                if (entry->lower <= d) return {Outcome::kExact, entry->lower};
                return {Outcome::kCut, 0};
            }
            if (entry->lower > d) {
                shared_.memo_hits.fetch_add(1, std::memory_order_relaxed);
                return {Outcome::kCut, 0};
            }
        }

        const int bound = admissible_bound(game);
        if (bound > remaining) {
            shared_.memo.set_exact(key, kNoWinValue);
            return {Outcome::kNoWin, 0};
        }
        if (bound > d) {
            shared_.memo.raise_lower(key, bound);
            return {Outcome::kCut, 0};
        }

        int best = kInfBest;
        bool saw_cut = false;
        for (int ei = 0; ei < game.board.edge_slots(); ++ei) {
            if (game.board.color_at_index(ei) != kUncolored) continue;
            if (best <= bound) break;
            const int child_allowance = std::min(d - 1, best - 2);

            PainterGame child = game;
            const PainterMove mv = painter_move(child, edge_at(ei, game.board.n()));
            if (color_matching(child.board, mv.color) >= game.config.target(mv.color)) {
                best = std::min(best, 1);
                continue;
            }
            const NodeResult r = search(child, child_allowance);
            if (r.outcome == Outcome::kExact) best = std::min(best, r.value + 1);
            else if (r.outcome == Outcome::kCut) saw_cut = true;
        }

        if (best < kInfBest) {
            shared_.memo.set_exact(key, best);
            return {Outcome::kExact, best};
        }
        if (!saw_cut) {
            shared_.memo.set_exact(key, kNoWinValue);
            return {Outcome::kNoWin, 0};
        }
        shared_.memo.raise_lower(key, d + 1);
        return {Outcome::kCut, 0};
    }

  private:
    static int color_matching(const BoardState& board, Color c) {
        std::vector<uint32_t> adj(static_cast<size_t>(board.n()), 0);
        for (int ei = 0; ei < board.edge_slots(); ++ei) {
            if (board.color_at_index(ei) != c) continue;
            const Edge e = edge_at(ei, board.n());
            adj[static_cast<size_t>(e.u)] |= 1u << e.v;
            adj[static_cast<size_t>(e.v)] |= 1u << e.u;
        }
        return max_matching_size(board.n(), adj);
    }

    int admissible_bound(const PainterGame& game) {
        int bound = std::numeric_limits<int>::max();
        for (Color c = 1; c <= game.config.colors; ++c)
            bound = std::min(bound, game.config.target(c) - color_matching(game.board, c));
        return bound;
    }

    SearchShared& shared_;
};

}  // namespace detail

/// Fewest Builder moves that beat the fixed edge-role Painter (deterministic
/// choice resolution). At least the optimal-play value, and at least the
/// closed-form lower bound whenever that applies.
inline SolveResult best_builder_vs_painter(const GameConfig& config, int budget,
                                           const SolveOptions& options = {}) {
    config.validate();
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    detail::SearchShared shared;
    shared.config = config;
    if (options.time_limit_s > 0) {
        shared.has_deadline = true;
        shared.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                      std::chrono::duration<double>(options.time_limit_s));
    }

    PainterGame root = new_painter_game(config);
    const int total_edges = root.board.edge_slots();
    const int budget_eff = std::min(budget, total_edges);
    int start_bound = std::numeric_limits<int>::max();
    for (Color c = 1; c <= config.colors; ++c)
        start_bound = std::min(start_bound, config.target(c));

    SolveResult out;
    out.value = GameValue::budget_exceeded(std::max(start_bound - 1, 0));
    detail::VsPainterSearch search(shared);
    try {
        for (int b = std::min(start_bound, budget_eff); b <= budget_eff; ++b) {
            PainterGame game = root;
            const detail::NodeResult r = search.search(game, b);
            if (r.outcome == detail::Outcome::kExact) {
                out.value = GameValue::finite(r.value);
                break;
            }
            if (r.outcome == detail::Outcome::kNoWin) {
                out.value = GameValue::no_win();
                break;
            }
            out.value = GameValue::budget_exceeded(b);
        }
    } catch (const detail::TimeoutError&) {
    }

    out.stats.nodes = shared.nodes.load();
    out.stats.memo_hits = shared.memo_hits.load();
    out.stats.memo_size = shared.memo.size();
    out.stats.max_depth = shared.max_depth.load();
    out.stats.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace ramatch

#endif  // RAMATCH_SOLVER_HPP
