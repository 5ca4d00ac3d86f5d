/**
 * \file io.hpp
 *
 * JSON wire formats: solver result records, Painter trace records, bound
 * tables, and the append-only JSON Lines results store with its regression
 * check against the known-value table.
 *
 * Copyright 2026 the ramatch authors.
 * License: Apache License 2.0
 */

#ifndef RAMATCH_IO_HPP
#define RAMATCH_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramatch/bounds.hpp"
#include "ramatch/game.hpp"
#include "ramatch/painter.hpp"
#include "ramatch/solver.hpp"
#include "ramatch/verify.hpp"
#include "ramatch/version.hpp"

namespace ramatch {

using nlohmann::json;

inline json config_to_json(const GameConfig& config) {
    return json{{"colors", config.colors}, {"targets", config.targets}, {"n", config.n}};
}

inline GameConfig config_from_json(const json& j) {
    GameConfig config;
    config.colors = j.at("colors").get<int>();
    config.targets = j.at("targets").get<std::vector<int>>();
    config.n = j.at("n").get<int>();
    config.validate();
    return config;
}

inline json value_to_json(const GameValue& value) {
    switch (value.kind) {
        case GameValue::Kind::kFinite: return json{{"finite", value.value}};
        case GameValue::Kind::kNoWin: return json("no_win");
        default: return json{{"budget_exceeded", value.value}};
    }
}

inline GameValue value_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "no_win") return GameValue::no_win();
    if (j.is_object() && j.contains("finite")) return GameValue::finite(j.at("finite").get<int>());
    if (j.is_object() && j.contains("budget_exceeded"))
        return GameValue::budget_exceeded(j.at("budget_exceeded").get<int>());
    throw std::invalid_argument("unrecognized game value encoding");
}

inline json stats_to_json(const SearchStats& stats) {
    return json{{"nodes", stats.nodes},
                {"memo_hits", stats.memo_hits},
                {"memo_size", stats.memo_size},
                {"wall_time_s", stats.wall_time_s},
                {"max_depth", stats.max_depth}};
}

inline json edge_to_json(const Edge& e) { return json::array({e.u, e.v}); }

/// One solver result line for the results store.
inline json solve_record(const GameConfig& config, const SolveResult& result,
                         const std::vector<std::pair<Edge, int>>& openings) {
    json moves = json::array();
    for (const auto& [edge, value] : openings)
        moves.push_back(json{{"edge", edge_to_json(edge)}, {"value", value}});
    return json{{"config", config_to_json(config)},
                {"value", value_to_json(result.value)},
                {"optimal_first_moves", moves},
                {"stats", stats_to_json(result.stats)},
                {"tool_version", std::string(kToolVersion)}};
}

/// One Painter trace line: everything the move changed plus the ledger.
inline json trace_record(const PainterGame& game, const PainterMove& move) {
    json roles = json::array();
    for (const RoleChange& rc : move.roles_changed) {
        json entry{{"edge", edge_to_json(rc.edge)},
                   {"role", rc.kind == EdgeRoleKind::kFree ? "free" : "rooted"}};
        if (rc.kind == EdgeRoleKind::kRooted) entry["root"] = rc.root;
        roles.push_back(entry);
    }
    return json{{"move_index", move.move_index},
                {"edge", edge_to_json(move.edge)},
                {"rule", to_string(move.rule)},
                {"color", move.color},
                {"roles_changed", roles},
                {"A", game.ledger.roots_per_color},
                {"B", game.ledger.free_per_color},
                {"C2", game.ledger.rule2_moves},
                {"C3", game.ledger.rule3_moves},
                {"typeIII_count", type_iii_count(game.ann)}};
}

inline json bound_report_to_json(const GameConfig& config, const BoundReport& report) {
    json j{{"t", config.colors},
           {"r", config.targets},
           {"n", config.n},
           {"ramsey_n", report.ramsey_n},
           {"lower", report.lower},
           {"lower_valid", report.lower_valid},
           {"survival_T", report.survival_t}};
    if (config.colors >= 2) {
        json upper{{"approx", report.upper.approx}, {"exact", report.upper.exact}};
        if (report.upper.exact) {
            upper["num"] = report.upper.value.num;
            upper["den"] = report.upper.value.den;
        } else {
            upper["note"] = report.upper.note;
        }
        j["upper"] = upper;
        j["upper_valid"] = report.upper_valid;
    }
    if (report.known) {
        if (report.known->exact()) j["known_value"] = report.known->lo;
        else j["known_value"] = json::array({report.known->lo, report.known->hi});
    }
    return j;
}

/// Campaign report; pass include_wall_time = false when comparing reports
/// for reproducibility.
inline json verify_report_to_json(const VerifyReport& report, bool include_wall_time = true) {
    json failures = json::array();
    for (const PlayRecord& record : report.failures) {
        json moves = json::array();
        for (const auto& [edge, color] : record.moves)
            moves.push_back(json{{"edge", edge_to_json(edge)}, {"color", color}});
        failures.push_back(json{{"moves", moves}});
    }
    json violations = json::object();
    for (const auto& [name, count] : report.violations) violations[name] = count;
    json j{{"config", config_to_json(report.config)},
           {"mode", report.mode},
           {"depth", report.depth},
           {"horizon", report.horizon},
           {"sequences_tested", report.sequences_tested},
           {"states_explored", report.states_explored},
           {"transitions_checked", report.transitions_checked},
           {"wins_after_horizon", report.wins_after_horizon},
           {"failures", failures},
           {"violations", violations},
           {"success", report.success},
           {"complete", report.complete},
           {"vacuous", report.vacuous}};
    if (report.mode == "random") {
        j["trials"] = report.trials;
        j["seed"] = report.seed;
    }
    if (include_wall_time) j["wall_time_s"] = report.wall_time_s;
    return j;
}

// ---------------------------------------------------------------------------
// Results store: append-only JSON Lines keyed by (config, tool_version).

inline std::vector<json> read_results(const std::string& path) {
    std::ifstream in(path);
    std::vector<json> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(json::parse(line));
    }
    return records;
}

/// Appends a record unless an identical (config, tool_version) record is
/// already present; returns whether the record was written.
inline bool append_result(const std::string& path, const json& record) {
    for (const json& existing : read_results(path)) {
        if (existing.contains("config") && existing.contains("tool_version") &&
            existing.at("config") == record.at("config") &&
            existing.at("tool_version") == record.at("tool_version"))
            return false;
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open results store: " + path);
    out << record.dump() << "\n";
    return true;
}

// ---------------------------------------------------------------------------
// Regression against the known-value table.

struct RegressionRow {
    GameConfig config;
    KnownValue expected;
    std::optional<GameValue> found;
    enum class Status { kPass, kFail, kSkipped } status = Status::kSkipped;
};

struct RegressionReport {
    std::vector<RegressionRow> rows;
    bool all_passed = true;  ///< skipped rows do not fail the report
};

/// Compares every stored result that has a known value against the table,
/// and reports table entries up to probe_max_r with no stored result as
/// skipped.
inline RegressionReport run_regression(const std::string& store_path, int probe_max_r = 2) {
    RegressionReport report;
    std::vector<GameConfig> seen;
    for (const json& record : read_results(store_path)) {
        if (!record.contains("config") || !record.contains("value")) continue;
        GameConfig config = config_from_json(record.at("config"));
        const auto expected = known_value(config);
        if (!expected) continue;
        RegressionRow row{config, *expected, value_from_json(record.at("value")),
                          RegressionRow::Status::kSkipped};
        if (row.found->is_finite() && expected->contains(row.found->value))
            row.status = RegressionRow::Status::kPass;
        else if (row.found->kind == GameValue::Kind::kBudgetExceeded &&
                 row.found->value < expected->hi)
            row.status = RegressionRow::Status::kSkipped;  // inconclusive bound
        else
            row.status = RegressionRow::Status::kFail;
        if (row.status == RegressionRow::Status::kFail) report.all_passed = false;
        report.rows.push_back(row);
        seen.push_back(config);
    }
    for (const KnownValueRow& entry : known_values(probe_max_r)) {
        if (std::find(seen.begin(), seen.end(), entry.config) != seen.end()) continue;
        report.rows.push_back({entry.config, entry.value, std::nullopt,
                               RegressionRow::Status::kSkipped});
    }
    return report;
}

inline json regression_report_to_json(const RegressionReport& report) {
    json rows = json::array();
    for (const RegressionRow& row : report.rows) {
        json r{{"config", config_to_json(row.config)},
               {"expected", row.expected.exact()
                                ? json(row.expected.lo)
                                : json(json::array({row.expected.lo, row.expected.hi}))},
               {"status", row.status == RegressionRow::Status::kPass     ? "pass"
                          : row.status == RegressionRow::Status::kFail   ? "fail"
                                                                         : "skipped"}};
        if (row.found) r["found"] = value_to_json(*row.found);
        rows.push_back(r);
    }
    return json{{"rows", rows}, {"all_passed", report.all_passed}};
}

}  // namespace ramatch

#endif  // RAMATCH_IO_HPP
