// compasp: answer sets through the completion.

#include "compasp/bench.hpp"
#include "compasp/blocks_world.hpp"
#include "compasp/completion.hpp"
#include "compasp/dimacs.hpp"
#include "compasp/grounder.hpp"
#include "compasp/parser.hpp"
#include "compasp/pipeline.hpp"
#include "compasp/semantics.hpp"
#include "compasp/tightness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace compasp;

constexpr int kFound = 0;
constexpr int kNone = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out || !(out << text)) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
}

Program load_program(const std::string& path, bool full) {
    GroundOptions opts;
    opts.prune_domain = !full;
    return ground(parse_schematic(read_file(path)), opts);
}

struct Args {
    std::string file;
    bool full_ground = false;
    std::string dimacs_out;
    std::string map_out;
    std::size_t limit = 1;
    std::size_t models = 0;
    bool brute_force = false;
    bool learning = false;
    std::string model;
    std::string instance;
    std::size_t blocks = 0;
    std::int64_t horizon = -1;
    bool scan = false;
};

int cmd_ground(const Args& a) {
    std::cout << render_program(load_program(a.file, a.full_ground));
    return kFound;
}

int cmd_complete(const Args& a) {
    Program p = load_program(a.file, a.full_ground);
    if (p.has_classical_negation()) {
        RenamedProgram r = eliminate_classical_negation(p);
        for (auto [atom, prime] : r.renaming.entries) {
            std::cout << "% " << r.program.atoms().name(prime) << " stands for -" << p.atoms().name(atom) << "\n";
        }
        p = std::move(r.program);
    }
    CompletionTheory t = completion(p);
    std::cout << t.str();
    if (!a.dimacs_out.empty() || !a.map_out.empty()) {
        ClauseSet cs = to_cnf(t);
        if (!a.dimacs_out.empty()) {
            write_file(a.dimacs_out, write_dimacs(cs));
        }
        if (!a.map_out.empty()) {
            write_file(a.map_out, write_symbol_table(cs));
        }
    }
    return kFound;
}

int cmd_solve(const Args& a) {
    Program p = load_program(a.file, a.full_ground);
    if (a.brute_force) {
        auto all = enumerate_answer_sets_bruteforce(p);
        std::size_t shown = 0;
        for (const auto& x : all) {
            if (a.limit != 0 && shown == a.limit) {
                break;
            }
            std::cout << "Answer " << ++shown << ": " << render_interpretation(p, x) << "\n";
        }
        std::cout << (all.empty() ? "UNSATISFIABLE" : "SATISFIABLE") << "\n";
        return all.empty() ? kNone : kFound;
    }
    PipelineOptions opts;
    opts.answer_limit = a.limit;
    opts.model_limit = a.models;
    opts.solver.learning = a.learning;
    SolveReport r = find_answer_sets(p, opts);
    std::size_t n = 0;
    for (const auto& m : r.models) {
        if (m.route == Route::Rejected) {
            std::cout << "Rejected: " << render_interpretation(p, m.model);
            if (m.cycle) {
                std::cout << " (positive cycle " << render_cycle(p, *m.cycle) << ")";
            }
            std::cout << "\n";
        } else {
            std::cout << "Answer " << ++n << ": " << render_interpretation(p, m.model) << " [" << to_string(m.route)
                      << (m.pos_disjoint ? ", disjoint from pos" : "") << "]\n";
        }
    }
    if (!r.answer_sets.empty()) {
        std::cout << "SATISFIABLE\n";
    } else {
        std::cout << (r.exhausted ? "UNSATISFIABLE" : "UNKNOWN (completion model limit reached)") << "\n";
    }
    std::cout << "Completion models: " << r.completion_models_seen << "\n";
    std::cout << "CNF: " << r.cnf_vars << " variables, " << r.cnf_clauses << " clauses\n";
    std::cout << "Search: " << r.stats.decisions << " decisions, " << r.stats.conflicts << " conflicts\n";
    return r.answer_sets.empty() ? kNone : kFound;
}

int cmd_check_tight(const Args& a) {
    Program p = load_program(a.file, a.full_ground);
    Interpretation x = parse_interpretation(a.model, p);
    if (!is_consistent(x)) {
        std::cout << "inconsistent interpretation\n";
        return kNone;
    }
    auto result = tight_on(p, x);
    if (const auto* lambda = std::get_if<LevelMapping>(&result)) {
        std::cout << "tight\n" << render_level_mapping(p, *lambda);
        return kFound;
    }
    std::cout << "not tight: " << render_cycle(p, std::get<CycleWitness>(result)) << "\n";
    return kNone;
}

int cmd_verify(const Args& a) {
    Program p = load_program(a.file, a.full_ground);
    Interpretation x = parse_interpretation(a.model, p);
    CertificateReport c = certify(p, x);
    std::cout << render_certificate(p, c);
    if (!c.contradictions.empty()) {
        return kUsage + 1;
    }
    return c.answer_set ? kFound : kNone;
}

BlocksInstance bench_instance(const Args& a) {
    BlocksInstance i;
    if (!a.instance.empty()) {
        i = parse_blocks_instance(read_file(a.instance));
    } else if (a.blocks > 0) {
        i = reversal_instance(a.blocks, a.horizon < 0 ? static_cast<std::int64_t>(a.blocks) : a.horizon);
    } else {
        throw CLI::ValidationError("bench blocks", "either --instance or --blocks is required");
    }
    if (a.horizon >= 0) {
        i.horizon = a.horizon;
    }
    return i;
}

int cmd_bench(const Args& a) {
    BlocksInstance i = bench_instance(a);
    BenchOptions opts;
    opts.solver.learning = a.learning;
    std::vector<BenchRow> rows = a.scan ? scan_horizons(i, opts) : std::vector<BenchRow>{run_benchmark(i, opts)};
    std::cout << render_bench_table(rows);
    const BenchRow& last = rows.back();
    if (last.plan) {
        std::cout << "\n" << render_plan(*last.plan);
    }
    return last.outcome == BenchOutcome::PlanFound ? kFound : kNone;
}

int cmd_plan(const Args& a) {
    BlocksInstance i = parse_blocks_instance(read_file(a.file));
    if (a.horizon >= 0) {
        i.horizon = a.horizon;
    }
    BenchOptions opts;
    opts.solver.learning = a.learning;
    BenchRow row = run_benchmark(i, opts);
    if (!row.plan) {
        std::cout << "no plan within horizon " << i.horizon << "\n";
        return kNone;
    }
    std::cout << render_plan(*row.plan);
    return kFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Answer sets of logic programs through the Clark completion"};
    app.require_subcommand(1);
    Args a;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", a.file, "Program file")->required()->check(CLI::ExistingFile);
        sub->add_flag("--full-ground", a.full_ground, "Keep every ground instance, without domain pruning");
    };

    auto* ground_cmd = app.add_subcommand("ground", "Print the ground instantiation");
    add_file(ground_cmd);

    auto* complete_cmd = app.add_subcommand("complete", "Print the completion and optionally its CNF");
    add_file(complete_cmd);
    complete_cmd->add_option("--dimacs", a.dimacs_out, "Write the CNF in DIMACS format");
    complete_cmd->add_option("--map", a.map_out, "Write the variable-to-atom table");

    auto* solve_cmd = app.add_subcommand("solve", "Compute answer sets");
    add_file(solve_cmd);
    solve_cmd->add_option("--limit", a.limit, "Answer sets to compute, 0 for all")->capture_default_str();
    solve_cmd->add_option("--models", a.models, "Completion models to examine, 0 for no bound")
        ->capture_default_str();
    solve_cmd->add_flag("--brute-force", a.brute_force, "Enumerate candidate sets with the reduct instead");
    solve_cmd->add_flag("--learning", a.learning, "Enable clause learning in the SAT solver");

    auto* tight_cmd = app.add_subcommand("check-tight", "Decide whether the program is tight on a set");
    add_file(tight_cmd);
    tight_cmd->add_option("--model", a.model, "Literals, e.g. \"p, -q\"")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check a candidate answer set");
    add_file(verify_cmd);
    verify_cmd->add_option("--model", a.model, "Literals, e.g. \"p, -q\"")->required();

    auto* bench_cmd = app.add_subcommand("bench", "Time blocks-world planning");
    auto* bench_blocks = bench_cmd->add_subcommand("blocks", "Blocks-world instance");
    bench_cmd->require_subcommand(1);
    bench_blocks->add_option("--instance", a.instance, "Instance file")->check(CLI::ExistingFile);
    bench_blocks->add_option("--blocks", a.blocks, "Generate a tower reversal with this many blocks");
    bench_blocks->add_option("--horizon", a.horizon, "Largest time step");
    bench_blocks->add_flag("--scan", a.scan, "Try horizons 0, 1, ... until a plan is found");
    bench_blocks->add_flag("--learning", a.learning, "Enable clause learning in the SAT solver");

    auto* plan_cmd = app.add_subcommand("plan", "Print a plan for a blocks-world instance");
    plan_cmd->add_option("file", a.file, "Instance file")->required()->check(CLI::ExistingFile);
    plan_cmd->add_option("--horizon", a.horizon, "Override the instance horizon");
    plan_cmd->add_flag("--learning", a.learning, "Enable clause learning in the SAT solver");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*ground_cmd) return cmd_ground(a);
        if (*complete_cmd) return cmd_complete(a);
        if (*solve_cmd) return cmd_solve(a);
        if (*tight_cmd) return cmd_check_tight(a);
        if (*verify_cmd) return cmd_verify(a);
        if (*bench_cmd) return cmd_bench(a);
        if (*plan_cmd) return cmd_plan(a);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return kUsage;
}
