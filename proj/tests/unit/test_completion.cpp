#include "compasp/completion.hpp"

#include "compasp/sat.hpp"
#include "compasp/semantics.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace compasp;
using testing::lits;

TEST_CASE("Completion of the reference programs", "[completion]") {
    CHECK(completion(parse_program("p :- p.")).str() == "p <-> p\n");
    CHECK(completion(parse_program("p :- not q.\nq :- not p.\np :- p, r.\n")).str() ==
          "p <-> (p & r) | -q\nq <-> -p\nr <-> false\n");
    CHECK(completion(parse_program("p :- not q.\nq :- not p.\nr :- r.\np :- r.\n")).str() ==
          "p <-> -q | r\nq <-> -p\nr <-> r\n");
    CHECK(completion(parse_program("p.\n:- p, not q.\n:- q.\n")).str() ==
          "p <-> true\nq <-> false\nfalse <-> (p & -q) | q\n");
    CHECK_THROWS_AS(completion(parse_program("-p.")), std::invalid_argument);
}

TEST_CASE("Completion models of the reference programs", "[completion]") {
    Program p4 = parse_program("p :- not q.\nq :- not p.\nr :- r.\np :- r.\n");
    CompletionTheory t4 = completion(p4);
    std::vector<std::string> models;
    for (const char* cand : {"", "p", "q", "r", "p, q", "p, r", "q, r", "p, q, r"}) {
        if (eval_completion(t4, lits(p4, cand))) {
            models.push_back(cand);
        }
    }
    CHECK(models == std::vector<std::string>{"p", "q", "p, r"});
    Program p1 = parse_program("p :- p.");
    CHECK(eval_completion(completion(p1), Interpretation{}));
    CHECK(eval_completion(completion(p1), lits(p1, "p")));
    CHECK(eval_completion(CompletionTheory{}, Interpretation{}));
    CHECK_THROWS_AS(eval_completion(completion(p1), lits(p1, "-p")), std::invalid_argument);
}

TEST_CASE("Renaming classical negation", "[completion]") {
    Program none = parse_program("p :- not q.");
    RenamedProgram same = eliminate_classical_negation(none);
    CHECK(same.renaming.empty());
    CHECK(equivalent(same.program, none));

    Program p = parse_program("-p.\nq :- -p.\n");
    RenamedProgram r = eliminate_classical_negation(p);
    REQUIRE(r.renaming.entries.size() == 1);
    CHECK(render_program(r.program) == "__neg_p.\nq :- __neg_p.\n:- p, __neg_p.\n");
    Interpretation x = lits(p, "-p, q");
    Interpretation xr = rename_interpretation(r.renaming, x);
    CHECK(render_interpretation(r.program, xr) == "{q, __neg_p}");
    CHECK(restore_interpretation(r.renaming, xr) == x);
    CHECK_THROWS_AS(rename_interpretation(r.renaming, Interpretation({Literal(1, true)})), std::invalid_argument);
}

TEST_CASE("Renaming preserves answer sets", "[completion][property]") {
    gen::Rng rng(5);
    gen::ProgramShape shape;
    shape.classical_rate = 0.3;
    for (int n = 0; n < 300; ++n) {
        Program p = gen::random_program(rng, shape);
        RenamedProgram r = eliminate_classical_negation(p);
        std::vector<Interpretation> restored;
        for (const auto& x : oracle::answer_sets(r.program)) {
            restored.push_back(restore_interpretation(r.renaming, x));
        }
        std::sort(restored.begin(), restored.end());
        INFO(render_program(p));
        REQUIRE(restored == oracle::answer_sets(p));
    }
}

TEST_CASE("Clause form of small theories", "[completion]") {
    CHECK(to_cnf(completion(parse_program("q :- r."))).clauses.size() == 3);
    ClauseSet bottom = to_cnf(completion(parse_program("p :- p, q.\nq :- q.\n:- q.\n")));
    Program p = parse_program("q :- not p.");
    ClauseSet cs = to_cnf(completion(p));
    CHECK(cs.var_names == std::vector<std::string>{"q", "p"});
    std::vector<std::vector<int>> expected{{-1, -2}, {1, 2}, {-2}};
    CHECK(cs.clauses == expected);
    ClauseSet f = to_cnf(completion(parse_program(":- p.")));
    CHECK(f.clauses == std::vector<std::vector<int>>{{-1}, {-1}});
    CHECK(bottom.var_names.back().rfind("__aux", 0) == 0);
}

TEST_CASE("Completion agrees with the rule-by-rule oracle", "[completion][property]") {
    gen::Rng rng(6);
    for (int n = 0; n < 500; ++n) {
        Program p = gen::random_program(rng);
        CompletionTheory t = completion(p);
        INFO(render_program(p));
        for (std::uint32_t mask = 0; mask < (1u << p.num_atoms()); ++mask) {
            std::vector<Literal> atoms;
            for (AtomId a = 0; a < p.num_atoms(); ++a) {
                if ((mask >> a) & 1u) {
                    atoms.emplace_back(a, false);
                }
            }
            Interpretation x(std::move(atoms));
            REQUIRE(eval_completion(t, x) == oracle::completion_model(p, oracle::to_set(x)));
        }
    }
}

TEST_CASE("Clause form preserves completion models", "[completion][property]") {
    gen::Rng rng(8);
    int checked = 0;
    for (int n = 0; n < 500; ++n) {
        Program p = gen::random_program(rng);
        CompletionTheory t = completion(p);
        ClauseSet cs = to_cnf(t);
        if (cs.num_vars() > 16) {
            continue;
        }
        ++checked;
        const int k = static_cast<int>(p.num_atoms());
        std::set<std::vector<bool>> expected;
        for (const auto& x : oracle::completion_models(p)) {
            std::vector<bool> row(static_cast<std::size_t>(k), false);
            for (Literal l : x) {
                row[l.atom()] = true;
            }
            expected.insert(row);
        }
        INFO(render_program(p));
        REQUIRE(oracle::truth_table_models(cs, k) == expected);
    }
    CHECK(checked > 300);
}
