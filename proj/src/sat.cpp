#include "compasp/sat.hpp"

#include <algorithm>
#include <stdexcept>

namespace compasp::sat {

SolveStats& SolveStats::operator+=(const SolveStats& o) {
    decisions += o.decisions;
    propagations += o.propagations;
    conflicts += o.conflicts;
    elapsed += o.elapsed;
    return *this;
}

Solver::Solver(int num_vars, SolverOptions options)
    : num_vars_(num_vars),
      options_(options),
      watches_(2 * static_cast<std::size_t>(num_vars)),
      values_(static_cast<std::size_t>(num_vars), -1),
      levels_(static_cast<std::size_t>(num_vars), 0),
      reasons_(static_cast<std::size_t>(num_vars), kNoReason),
      seen_(static_cast<std::size_t>(num_vars), 0) {
    if (num_vars < 0) {
        throw std::invalid_argument("negative variable count");
    }
}

Solver::Solver(const ClauseSet& cs, SolverOptions options) : Solver(cs.num_vars(), options) {
    for (const auto& clause : cs.clauses) {
        add_clause(clause);
    }
}

Solver::Lit Solver::encode(int dimacs) {
    auto v = static_cast<Lit>(dimacs < 0 ? -dimacs : dimacs) - 1;
    return 2 * v + (dimacs < 0 ? 1u : 0u);
}

std::int8_t Solver::value(Lit l) const {
    std::int8_t v = values_[l >> 1];
    return v < 0 ? v : static_cast<std::int8_t>(v ^ static_cast<std::int8_t>(l & 1u));
}

void Solver::assign(Lit l, std::uint32_t reason) {
    Lit var = l >> 1;
    values_[var] = (l & 1u) ? 0 : 1;
    levels_[var] = static_cast<std::uint32_t>(level());
    reasons_[var] = reason;
    trail_.push_back(l);
}

std::uint32_t Solver::attach(std::vector<Lit> clause) {
    auto index = static_cast<std::uint32_t>(clauses_.size());
    watches_[clause[0]].push_back(index);
    watches_[clause[1]].push_back(index);
    clauses_.push_back(std::move(clause));
    return index;
}

void Solver::add_clause(std::span<const int> clause) {
    backtrack(0);
    if (unsat_) {
        return;
    }
    std::vector<Lit> lits;
    lits.reserve(clause.size());
    for (int d : clause) {
        if (d == 0 || d > num_vars_ || d < -num_vars_) {
            throw std::invalid_argument("clause literal out of range: " + std::to_string(d));
        }
        lits.push_back(encode(d));
    }
    std::ranges::sort(lits);
    auto dup = std::ranges::unique(lits);
    lits.erase(dup.begin(), dup.end());
    for (std::size_t i = 1; i < lits.size(); ++i) {
        if ((lits[i] ^ 1u) == lits[i - 1]) {
            return;  // tautology
        }
    }
    if (std::ranges::any_of(lits, [&](Lit l) { return value(l) == 1; })) {
        return;
    }
    std::erase_if(lits, [&](Lit l) { return value(l) == 0; });
    if (lits.empty()) {
        unsat_ = true;
    } else if (lits.size() == 1) {
        assign(lits[0], kNoReason);
        if (propagate() != kNoReason) {
            unsat_ = true;
        }
    } else {
        attach(std::move(lits));
    }
}

std::uint32_t Solver::propagate() {
    while (qhead_ < trail_.size()) {
        const Lit false_lit = trail_[qhead_++] ^ 1u;
        auto& ws = watches_[false_lit];
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < ws.size()) {
            const std::uint32_t ci = ws[i++];
            auto& c = clauses_[ci];
            if (c[0] == false_lit) {
                std::swap(c[0], c[1]);
            }
            if (value(c[0]) == 1) {
                ws[j++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.size(); ++k) {
                if (value(c[k]) != 0) {
                    std::swap(c[1], c[k]);
                    watches_[c[1]].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) {
                continue;
            }
            ws[j++] = ci;
            if (value(c[0]) == 0) {
                while (i < ws.size()) {
                    ws[j++] = ws[i++];
                }
                ws.resize(j);
                qhead_ = trail_.size();
                return ci;
            }
            assign(c[0], ci);
            ++stats_.propagations;
        }
        ws.resize(j);
    }
    return kNoReason;
}

void Solver::backtrack(std::size_t target) {
    if (level() <= target) {
        return;
    }
    const std::size_t keep = trail_lim_[target];
    for (std::size_t i = trail_.size(); i > keep; --i) {
        Lit var = trail_[i - 1] >> 1;
        values_[var] = -1;
        reasons_[var] = kNoReason;
        next_var_ = std::min<std::size_t>(next_var_, var);
    }
    trail_.resize(keep);
    trail_lim_.resize(target);
    flipped_.resize(target);
    qhead_ = trail_.size();
}

void Solver::analyze(std::uint32_t conflict, std::vector<Lit>& learnt, std::size_t& backjump) {
    learnt.assign(1, 0);
    int open = 0;
    bool have_pivot = false;
    Lit pivot = 0;
    std::size_t index = trail_.size();
    std::uint32_t reason = conflict;
    do {
        const auto& c = clauses_[reason];
        for (std::size_t j = have_pivot ? 1 : 0; j < c.size(); ++j) {
            Lit q = c[j];
            Lit var = q >> 1;
            if (seen_[var] || levels_[var] == 0) {
                continue;
            }
            seen_[var] = 1;
            if (levels_[var] >= level()) {
                ++open;
            } else {
                learnt.push_back(q);
            }
        }
        while (!seen_[trail_[index - 1] >> 1]) {
            --index;
        }
        pivot = trail_[--index];
        have_pivot = true;
        reason = reasons_[pivot >> 1];
        seen_[pivot >> 1] = 0;
        --open;
    } while (open > 0);
    learnt[0] = pivot ^ 1u;

    backjump = 0;
    std::size_t best = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
        if (levels_[learnt[i] >> 1] > backjump) {
            backjump = levels_[learnt[i] >> 1];
            best = i;
        }
    }
    if (learnt.size() > 1) {
        std::swap(learnt[1], learnt[best]);
    }
    for (Lit l : learnt) {
        seen_[l >> 1] = 0;
    }
}

bool Solver::resolve_conflict(std::uint32_t conflict) {
    if (level() == 0) {
        return false;
    }
    if (options_.learning) {
        std::vector<Lit> learnt;
        std::size_t backjump = 0;
        analyze(conflict, learnt, backjump);
        backtrack(backjump);
        if (learnt.size() == 1) {
            assign(learnt[0], kNoReason);
        } else {
            Lit asserting = learnt[0];
            std::uint32_t index = attach(std::move(learnt));
            assign(asserting, index);
        }
        return true;
    }
    // Chronological backtracking: flip the deepest decision whose other
    // branch has not been explored yet.
    std::size_t d = level();
    while (d > 0 && flipped_[d - 1]) {
        --d;
    }
    if (d == 0) {
        return false;
    }
    const Lit decision = trail_[trail_lim_[d - 1]];
    backtrack(d - 1);
    trail_lim_.push_back(trail_.size());
    flipped_.push_back(1);
    assign(decision ^ 1u, kNoReason);
    return true;
}

std::optional<Assignment> Solver::solve() {
    const auto start = std::chrono::steady_clock::now();
    struct Timer {
        SolveStats& stats;
        std::chrono::steady_clock::time_point start;
        ~Timer() { stats.elapsed += std::chrono::steady_clock::now() - start; }
    } timer{stats_, start};

    if (unsat_) {
        return std::nullopt;
    }
    backtrack(0);
    const auto n = static_cast<std::size_t>(num_vars_);
    for (;;) {
        std::uint32_t conflict = propagate();
        if (conflict != kNoReason) {
            ++stats_.conflicts;
            if (!resolve_conflict(conflict)) {
                unsat_ = true;
                return std::nullopt;
            }
            continue;
        }
        while (next_var_ < n && values_[next_var_] >= 0) {
            ++next_var_;
        }
        if (next_var_ == n) {
            Assignment model(n);
            for (std::size_t v = 0; v < n; ++v) {
                model[v] = values_[v] == 1;
            }
            return model;
        }
        ++stats_.decisions;
        trail_lim_.push_back(trail_.size());
        flipped_.push_back(0);
        assign(static_cast<Lit>(2 * next_var_), kNoReason);
    }
}

SolveResult solve(const ClauseSet& cs, SolverOptions options) {
    Solver s(cs, options);
    auto model = s.solve();
    return {std::move(model), s.stats()};
}

ModelEnumerator::ModelEnumerator(const ClauseSet& cs, std::vector<int> projection, SolverOptions options)
    : solver_(cs, options), projection_(std::move(projection)) {
    for (int v : projection_) {
        if (v <= 0 || v > cs.num_vars()) {
            throw std::invalid_argument("projection variable out of range: " + std::to_string(v));
        }
    }
}

std::optional<Assignment> ModelEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    auto model = solver_.solve();
    if (!model) {
        done_ = true;
        return std::nullopt;
    }
    std::vector<int> blocking;
    blocking.reserve(projection_.size());
    for (int v : projection_) {
        blocking.push_back((*model)[static_cast<std::size_t>(v - 1)] ? -v : v);
    }
    solver_.add_clause(blocking);
    return model;
}

std::vector<std::vector<bool>> enumerate_models(const ClauseSet& cs, const std::vector<int>& projection,
                                                std::size_t limit, SolverOptions options) {
    if (limit == 0) {
        throw std::invalid_argument("enumeration limit must be at least 1");
    }
    ModelEnumerator e(cs, projection, options);
    std::vector<std::vector<bool>> out;
    while (out.size() < limit) {
        auto m = e.next();
        if (!m) {
            break;
        }
        std::vector<bool> projected;
        projected.reserve(projection.size());
        for (int v : projection) {
            projected.push_back((*m)[static_cast<std::size_t>(v - 1)]);
        }
        out.push_back(std::move(projected));
    }
    return out;
}

bool satisfies(const ClauseSet& cs, const Assignment& a) {
    if (a.size() != static_cast<std::size_t>(cs.num_vars())) {
        return false;
    }
    return std::ranges::all_of(cs.clauses, [&](const std::vector<int>& clause) {
        return std::ranges::any_of(clause, [&](int l) {
            bool v = a[static_cast<std::size_t>((l < 0 ? -l : l) - 1)];
            return l < 0 ? !v : v;
        });
    });
}

}  // namespace compasp::sat
