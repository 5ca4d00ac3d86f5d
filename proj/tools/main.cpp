// Copyright 2026 the ramatch authors.
// License: Apache License 2.0
//
// Command-line front end: exact solving, painter verification campaigns,
// bound tables, interactive play and regression checks.
//
// Exit codes: 0 success, 1 assertion or regression failure, 2 usage error,
// 3 budget or cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramatch/interactive.hpp"
#include "ramatch/io.hpp"
#include "ramatch/solver.hpp"
#include "ramatch/verify.hpp"

namespace {

using namespace ramatch;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct ConfigArgs {
    int colors = 2;
    std::vector<int> targets;
    int n = 0;

    GameConfig config() const {
        GameConfig config{colors, targets, n};
        config.validate();
        return config;
    }
};

void add_config_options(CLI::App* cmd, ConfigArgs& args, bool need_n = true) {
    cmd->add_option("--colors", args.colors, "number of colours t")->required();
    cmd->add_option("--targets", args.targets, "target matching sizes r_1,...,r_t")
        ->required()
        ->delimiter(',');
    auto* n = cmd->add_option("--n", args.n, "board vertices");
    if (need_n) n->required();
}

std::string describe(const GameValue& value) {
    switch (value.kind) {
        case GameValue::Kind::kFinite: return "finite " + std::to_string(value.value);
        case GameValue::Kind::kNoWin: return "no win (painter fills the board)";
        default:
            return "budget exceeded (no win within " + std::to_string(value.value) + " moves)";
    }
}

void print_solve_human(const GameConfig& config, const SolveResult& result,
                       const std::vector<std::pair<Edge, int>>& openings) {
    std::cout << "config: t=" << config.colors << " targets=";
    for (size_t i = 0; i < config.targets.size(); ++i)
        std::cout << (i ? "," : "") << config.targets[i];
    std::cout << " n=" << config.n << "\n";
    std::cout << "value: " << describe(result.value) << "\n";
    if (!openings.empty()) {
        std::cout << "optimal first moves:";
        for (const auto& [e, v] : openings)
            std::cout << " (" << e.u << "," << e.v << ")->" << v;
        std::cout << "\n";
    }
    std::cout << "nodes=" << result.stats.nodes << " memo=" << result.stats.memo_size
              << " hits=" << result.stats.memo_hits << " max_depth=" << result.stats.max_depth
              << " wall=" << result.stats.wall_time_s << "s\n";
}

int finish_solve(const GameConfig& config, const SolveResult& result,
                 const std::vector<std::pair<Edge, int>>& openings, bool json_out,
                 const std::string& out_path) {
    const json record = solve_record(config, result, openings);
    if (json_out) std::cout << record.dump() << "\n";
    else print_solve_human(config, result, openings);
    if (!out_path.empty()) {
        if (!append_result(out_path, record))
            std::cerr << "note: store already holds this config at this tool version; "
                         "not appended\n";
    }
    return result.value.kind == GameValue::Kind::kBudgetExceeded ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"builder-painter matching game: exact values, painter verification, bounds"};
    app.require_subcommand(1);

    ConfigArgs args;
    int budget = 0;
    int threads = 1;
    double time_limit = 0.0;
    int depth = -1;
    uint64_t trials = 10000;
    uint64_t seed = 1;
    uint64_t state_cap = 1'000'000'000;
    std::string mode = "exhaustive";
    std::string painter_choices = "deterministic";
    std::string out_path;
    std::string store_path;
    int max_r = 2;
    bool json_out = false;

    auto* solve = app.add_subcommand("solve", "exact game value by minimax");
    add_config_options(solve, args);
    solve->add_option("--budget", budget, "builder move budget (0 = whole board)");
    solve->add_option("--threads", threads, "worker threads")->envname("RAMATCH_THREADS");
    solve->add_option("--time-limit", time_limit, "wall-clock cap in seconds (0 = none)");
    solve->add_option("--out", out_path, "append the result record to this JSONL store");
    solve->add_flag("--json", json_out, "machine-readable output");

    auto* vs = app.add_subcommand("solve-vs-painter",
                                  "fewest builder moves against the fixed painter strategy");
    add_config_options(vs, args);
    vs->add_option("--budget", budget, "builder move budget (0 = whole board)");
    vs->add_option("--time-limit", time_limit, "wall-clock cap in seconds (0 = none)");
    vs->add_option("--out", out_path, "append the result record to this JSONL store");
    vs->add_flag("--json", json_out, "machine-readable output");

    auto* verify = app.add_subcommand("verify-painter",
                                      "check the painter invariants over builder sequences");
    add_config_options(verify, args);
    verify->add_option("--mode", mode, "exhaustive | random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    verify->add_option("--depth", depth, "sequence length (default: survival horizon)");
    verify->add_option("--trials", trials, "random mode: number of sequences");
    verify->add_option("--seed", seed, "random mode: RNG seed");
    verify->add_option("--threads", threads, "random mode: worker threads")
        ->envname("RAMATCH_THREADS");
    verify->add_option("--cap", state_cap, "exhaustive mode: max states expanded");
    verify->add_option("--painter-choices", painter_choices,
                       "deterministic | random resolution of the strategy's free choices")
        ->check(CLI::IsMember({"deterministic", "random"}));
    verify->add_option("--out", out_path, "write the report JSON to this file");
    verify->add_flag("--json", json_out, "machine-readable output");

    auto* bounds = app.add_subcommand("bounds", "closed-form bound table");
    add_config_options(bounds, args, /*need_n=*/false);
    bounds->add_flag("--json", json_out, "machine-readable output");

    auto* play = app.add_subcommand("play", "interactive builder session");
    add_config_options(play, args);
    play->add_option("--out", out_path, "write a JSONL move trace to this file");

    auto* regress = app.add_subcommand("regress", "compare a results store to known values");
    regress->add_option("--store", store_path, "JSONL results store")->required();
    regress->add_option("--max-r", max_r, "report missing table entries up to this r");
    regress->add_flag("--json", json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve || *vs) {
            const GameConfig config = args.config();
            if (budget <= 0) budget = std::max(edge_count(config.n), 1);
            SolveOptions options;
            options.threads = std::max(threads, 1);
            options.time_limit_s = time_limit;
            if (*solve) {
                const SolveResult result = solve_exact(config, budget, options);
                const auto openings = result.value.is_finite()
                                          ? optimal_first_moves(config, budget, options)
                                          : std::vector<std::pair<Edge, int>>{};
                return finish_solve(config, result, openings, json_out, out_path);
            }
            const SolveResult result = best_builder_vs_painter(config, budget, options);
            return finish_solve(config, result, {}, json_out, out_path);
        }

        if (*verify) {
            const GameConfig config = args.config();
            VerifyOptions options;
            options.state_cap = state_cap;
            options.threads = std::max(threads, 1);
            options.painter_random_choices = painter_choices == "random";
            const VerifyReport report =
                mode == "random" ? verify_painter_random(config, trials, seed, depth < 0
                                                             ? std::max(survival_horizon(config), 0)
                                                             : depth,
                                                         options)
                                 : verify_painter_exhaustive(config, depth, options);
            const json j = verify_report_to_json(report);
            if (json_out) std::cout << j.dump() << "\n";
            else
                std::cout << (report.vacuous ? "vacuous guarantee (horizon <= 0); " : "")
                          << (report.success ? "OK" : "FAILED") << ": mode=" << report.mode
                          << " depth=" << report.depth << " sequences=" << report.sequences_tested
                          << " states=" << report.states_explored
                          << " violations=" << report.violations.size()
                          << (report.complete ? "" : " (incomplete: cap hit)") << " wall="
                          << report.wall_time_s << "s\n";
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << j.dump() << "\n";
            }
            if (!report.success) return kExitFailure;
            return report.complete ? kExitOk : kExitBudget;
        }

        if (*bounds) {
            if (args.n == 0) args.n = cockayne_lorimer(args.targets);
            const GameConfig config = args.config();
            const json j = bound_report_to_json(config, bound_report(config));
            if (json_out) {
                std::cout << j.dump() << "\n";
            } else {
                const BoundReport report = bound_report(config);
                std::cout << "t=" << config.colors << " n=" << config.n
                          << " ramsey_n=" << report.ramsey_n << " lower=" << report.lower
                          << (report.lower_valid ? "" : " (below ramsey threshold)")
                          << " upper~=" << (config.colors >= 2 ? report.upper.approx : 0.0)
                          << " survival_T=" << report.survival_t;
                if (report.known) {
                    std::cout << " known=";
                    if (report.known->exact()) std::cout << report.known->lo;
                    else std::cout << "{" << report.known->lo << "," << report.known->hi << "}";
                }
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (*play) {
            const GameConfig config = args.config();
            std::ofstream trace;
            if (!out_path.empty()) trace.open(out_path);
            return play_session(std::cin, std::cout, config,
                                out_path.empty() ? nullptr : &trace);
        }

        if (*regress) {
            const RegressionReport report = run_regression(store_path, max_r);
            if (json_out) {
                std::cout << regression_report_to_json(report).dump() << "\n";
            } else {
                for (const RegressionRow& row : report.rows) {
                    std::cout << (row.status == RegressionRow::Status::kPass     ? "PASS "
                                  : row.status == RegressionRow::Status::kFail   ? "FAIL "
                                                                                 : "SKIP ")
                              << "t=" << row.config.colors << " n=" << row.config.n
                              << " expected=";
                    if (row.expected.exact()) std::cout << row.expected.lo;
                    else std::cout << "{" << row.expected.lo << "," << row.expected.hi << "}";
                    if (row.found) std::cout << " found=" << describe(*row.found);
                    std::cout << "\n";
                }
                std::cout << (report.all_passed ? "all passed" : "regression FAILED") << "\n";
            }
            return report.all_passed ? kExitOk : kExitFailure;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
