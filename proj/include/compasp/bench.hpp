#pragma once

// Timing harness for blocks-world planning.

#include "compasp/blocks_world.hpp"
#include "compasp/pipeline.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace compasp {

enum class BenchOutcome { PlanFound, Unsolvable };

[[nodiscard]] const char* to_string(BenchOutcome o);

struct BenchRow {
    std::string problem;
    std::size_t blocks = 0;
    std::int64_t steps = 0;
    std::chrono::nanoseconds search_time{0};  ///< SAT search only
    std::chrono::nanoseconds total_time{0};   ///< grounding through certification
    BenchOutcome outcome = BenchOutcome::Unsolvable;
    std::optional<Plan> plan;
    std::size_t ground_rules = 0;
    std::size_t ground_atoms = 0;
    std::size_t completion_models = 0;
    std::size_t cnf_vars = 0;
    std::size_t cnf_clauses = 0;
};

struct BenchOptions {
    sat::SolverOptions solver;
    bool cross_check = false;
};

/// Grounds, completes, clausifies and searches. A horizon is declared
/// unsolvable only once every completion model has been examined.
[[nodiscard]] BenchRow run_benchmark(const BlocksInstance& i, const BenchOptions& options = {});

/// One row per horizon 0, 1, ... up to i.horizon, stopping after the
/// first solvable one.
[[nodiscard]] std::vector<BenchRow> scan_horizons(const BlocksInstance& i, const BenchOptions& options = {});

/// `n` blocks stacked in one tower b1 on b2 on ... on bn, to be reversed.
[[nodiscard]] BlocksInstance reversal_instance(std::size_t n, std::int64_t horizon);

[[nodiscard]] std::string render_bench_table(const std::vector<BenchRow>& rows);

}  // namespace compasp
