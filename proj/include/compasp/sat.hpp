#pragma once

// A small deterministic SAT solver.
//
// Search is DPLL with two watched literals per clause and a fixed branching
// rule: the lowest-numbered unassigned variable, tried true first. Conflict
// analysis with clause learning (first UIP, non-chronological backjumping)
// can be switched on; it keeps the same branching rule. There are no
// restarts, so identical inputs give identical model sequences.

#include "compasp/completion.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace compasp::sat {

/// Value of variable v (1-based) is stored at index v - 1.
using Assignment = std::vector<bool>;

struct SolveStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
    std::chrono::nanoseconds elapsed{0};

    SolveStats& operator+=(const SolveStats& o);
};

struct SolverOptions {
    bool learning = false;
};

class Solver {
public:
    explicit Solver(int num_vars, SolverOptions options = {});
    explicit Solver(const ClauseSet& cs, SolverOptions options = {});

    /// Adds a clause over variables 1..num_vars. Any model returned by a
    /// previous solve() is discarded and search restarts from the root.
    void add_clause(std::span<const int> clause);

    /// Next model, or nullopt once the clauses are unsatisfiable.
    [[nodiscard]] std::optional<Assignment> solve();

    [[nodiscard]] const SolveStats& stats() const { return stats_; }
    [[nodiscard]] int num_vars() const { return num_vars_; }

private:
    using Lit = std::uint32_t;
    static constexpr std::uint32_t kNoReason = UINT32_MAX;

    static Lit encode(int dimacs);
    [[nodiscard]] std::int8_t value(Lit l) const;
    void assign(Lit l, std::uint32_t reason);
    [[nodiscard]] std::uint32_t propagate();
    void backtrack(std::size_t level);
    [[nodiscard]] std::size_t level() const { return trail_lim_.size(); }
    std::uint32_t attach(std::vector<Lit> clause);
    bool resolve_conflict(std::uint32_t conflict);
    void analyze(std::uint32_t conflict, std::vector<Lit>& learnt, std::size_t& backjump);

    int num_vars_;
    SolverOptions options_;
    bool unsat_ = false;
    std::vector<std::vector<Lit>> clauses_;
    std::vector<std::vector<std::uint32_t>> watches_;  // by literal: clauses watching it
    std::vector<std::int8_t> values_;                  // by variable: -1, 0, 1
    std::vector<std::uint32_t> levels_;
    std::vector<std::uint32_t> reasons_;
    std::vector<Lit> trail_;
    std::vector<std::size_t> trail_lim_;
    std::vector<char> flipped_;  // by level, for chronological backtracking
    std::vector<char> seen_;
    std::size_t qhead_ = 0;
    std::size_t next_var_ = 0;
    SolveStats stats_;
};

struct SolveResult {
    std::optional<Assignment> model;
    SolveStats stats;
};

[[nodiscard]] SolveResult solve(const ClauseSet& cs, SolverOptions options = {});

/// Enumerates distinct assignments to `projection` lazily. After each model
/// a clause excluding its projection is added, so variables outside the
/// projection never produce repeated projected models.
class ModelEnumerator {
public:
    ModelEnumerator(const ClauseSet& cs, std::vector<int> projection, SolverOptions options = {});

    /// Full assignment of the next model, or nullopt when exhausted.
    [[nodiscard]] std::optional<Assignment> next();

    [[nodiscard]] const SolveStats& stats() const { return solver_.stats(); }
    [[nodiscard]] const std::vector<int>& projection() const { return projection_; }

private:
    Solver solver_;
    std::vector<int> projection_;
    bool done_ = false;
};

/// Projected assignments, aligned with `projection`. At most `limit` are
/// returned; fewer means the enumeration is complete.
[[nodiscard]] std::vector<std::vector<bool>> enumerate_models(const ClauseSet& cs, const std::vector<int>& projection,
                                                              std::size_t limit, SolverOptions options = {});

/// True iff `a` satisfies every clause of `cs`.
[[nodiscard]] bool satisfies(const ClauseSet& cs, const Assignment& a);

}  // namespace compasp::sat
