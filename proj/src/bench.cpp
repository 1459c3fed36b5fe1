#include "compasp/bench.hpp"

#include "compasp/grounder.hpp"

#include <algorithm>
#include <cstdio>

namespace compasp {

const char* to_string(BenchOutcome o) {
    return o == BenchOutcome::PlanFound ? "plan found" : "unsolvable";
}

BenchRow run_benchmark(const BlocksInstance& i, const BenchOptions& options) {
    using Clock = std::chrono::steady_clock;
    BenchRow row;
    row.problem = i.name;
    row.blocks = i.blocks.size();
    row.steps = i.horizon;

    auto start = Clock::now();
    Program p = ground(generate_blocks_world(i));
    row.ground_rules = p.rules().size();
    row.ground_atoms = p.num_atoms();

    PipelineOptions po;
    po.model_limit = 0;
    po.answer_limit = 1;
    po.cross_check = options.cross_check;
    po.solver = options.solver;
    SolveReport report = find_answer_sets(p, po);
    row.total_time = Clock::now() - start;
    row.search_time = report.timings.search;
    row.completion_models = report.completion_models_seen;
    row.cnf_vars = report.cnf_vars;
    row.cnf_clauses = report.cnf_clauses;
    if (!report.answer_sets.empty()) {
        row.outcome = BenchOutcome::PlanFound;
        row.plan = extract_plan(p, report.answer_sets.front());
    } else if (!report.exhausted) {
        throw std::logic_error("completion models not exhausted, but no answer set found");
    }
    return row;
}

std::vector<BenchRow> scan_horizons(const BlocksInstance& i, const BenchOptions& options) {
    std::vector<BenchRow> rows;
    for (std::int64_t h = 0; h <= i.horizon; ++h) {
        BlocksInstance at = i;
        at.horizon = h;
        rows.push_back(run_benchmark(at, options));
        if (rows.back().outcome == BenchOutcome::PlanFound) {
            break;
        }
    }
    return rows;
}

BlocksInstance reversal_instance(std::size_t n, std::int64_t horizon) {
    BlocksInstance i;
    i.name = "reverse" + std::to_string(n);
    i.horizon = horizon;
    for (std::size_t k = 1; k <= n; ++k) {
        i.blocks.push_back("b" + std::to_string(k));
    }
    for (std::size_t k = 0; k < n; ++k) {
        i.initial.emplace_back(i.blocks[k], k + 1 < n ? i.blocks[k + 1] : "table");
        i.goal.emplace_back(i.blocks[k], k > 0 ? i.blocks[k - 1] : "table");
    }
    return i;
}

std::string render_bench_table(const std::vector<BenchRow>& rows) {
    auto seconds = [](std::chrono::nanoseconds d) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", std::chrono::duration<double>(d).count());
        return std::string(buf);
    };
    std::vector<std::vector<std::string>> cells = {{"Problem", "Blocks", "Steps", "Search time", "Total time", "Outcome"}};
    for (const auto& r : rows) {
        cells.push_back({r.problem, std::to_string(r.blocks), std::to_string(r.steps), seconds(r.search_time),
                         seconds(r.total_time), to_string(r.outcome)});
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            width[c] = std::max(width[c], line[c].size());
        }
    }
    std::string out;
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            bool left = c == 0 || c + 1 == line.size();
            std::string pad(width[c] - line[c].size(), ' ');
            out += left ? line[c] + pad : pad + line[c];
            out += c + 1 == line.size() ? "\n" : "  ";
        }
    }
    // Trailing spaces from the last left-aligned column are trimmed per line.
    std::string trimmed;
    std::size_t pos = 0;
    while (pos < out.size()) {
        std::size_t nl = out.find('\n', pos);
        std::string l = out.substr(pos, nl - pos);
        l.erase(l.find_last_not_of(' ') + 1);
        trimmed += l + "\n";
        pos = nl + 1;
    }
    return trimmed;
}

}  // namespace compasp
