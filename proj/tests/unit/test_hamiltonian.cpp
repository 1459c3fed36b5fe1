#include "compasp/hamiltonian.hpp"

#include "compasp/pipeline.hpp"
#include "compasp/semantics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

using namespace compasp;

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

// A single cycle through every vertex, starting and ending at v0.
bool is_hamiltonian_cycle(const GraphInstance& g, const Edges& chosen) {
    std::map<std::string, std::string> next;
    for (const auto& [u, v] : chosen) {
        if (!next.emplace(u, v).second) {
            return false;
        }
    }
    if (next.size() != g.vertices.size()) {
        return false;
    }
    std::set<std::string> seen;
    std::string cur = "v0";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (!next.contains(cur) || !seen.insert(cur).second) {
            return false;
        }
        cur = next[cur];
    }
    return cur == "v0" && seen.size() == g.vertices.size();
}

std::vector<Edges> solve_all(const GraphInstance& g) {
    Program p = generate_hamiltonian(g);
    PipelineOptions o;
    o.model_limit = 0;
    o.cross_check = true;
    std::vector<Edges> out;
    for (const auto& x : find_answer_sets(p, o).answer_sets) {
        out.push_back(selected_edges(p, x));
    }
    return out;
}

}  // namespace

TEST_CASE("Graph validation", "[hamiltonian]") {
    CHECK_THROWS_AS(validate(GraphInstance{{"a"}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(GraphInstance{{"v0"}, {{"v0", "v1"}}}), std::invalid_argument);
    CHECK_NOTHROW(validate(GraphInstance{{"v0", "v1"}, {{"v0", "v1"}}}));
}

TEST_CASE("Generated program", "[hamiltonian]") {
    auto sp = hamiltonian_schematic(GraphInstance{{"v0"}, {}});
    REQUIRE(sp.rules.size() == 8);
    CHECK(sp.rules[0].str() == "in(U,V) :- edge(U,V), not out(U,V).");
    CHECK(sp.rules[6].str() == ":- vertex(U), not reachable(U).");
    CHECK(sp.rules[7].str() == "vertex(v0).");
}

TEST_CASE("Reference graphs", "[hamiltonian]") {
    SECTION("two loops") {
        GraphInstance g{{"v0", "v1"}, {{"v0", "v0"}, {"v1", "v1"}}};
        CHECK(solve_all(g).empty());
        CHECK(enumerate_answer_sets_bruteforce(generate_hamiltonian(g)).empty());
    }
    SECTION("directed triangle") {
        GraphInstance g{{"v0", "v1", "v2"}, {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v0"}}};
        auto all = solve_all(g);
        REQUIRE(all.size() == 1);
        CHECK(std::set(all[0].begin(), all[0].end()) == std::set(g.edges.begin(), g.edges.end()));
        CHECK(enumerate_answer_sets_bruteforce(generate_hamiltonian(g)).size() == 1);
    }
    SECTION("single vertex without edges") {
        CHECK(solve_all(GraphInstance{{"v0"}, {}}).empty());
    }
}

TEST_CASE("Decoded answer sets are Hamiltonian cycles", "[hamiltonian][property]") {
    std::mt19937_64 rng(61);
    int cycles = 0;
    for (int n = 0; n < 40; ++n) {
        GraphInstance g;
        std::size_t k = 2 + rng() % 3;
        for (std::size_t i = 0; i < k; ++i) {
            g.vertices.push_back("v" + std::to_string(i));
        }
        for (const auto& u : g.vertices) {
            for (const auto& v : g.vertices) {
                if (rng() % 2 == 0) {
                    g.edges.emplace_back(u, v);
                }
            }
        }
        // Count cycles by trying every successor function.
        std::size_t expected = 0;
        std::vector<std::size_t> succ(k, 0);
        for (;;) {
            Edges e;
            bool ok = true;
            for (std::size_t i = 0; i < k; ++i) {
                std::pair<std::string, std::string> edge{g.vertices[i], g.vertices[succ[i]]};
                ok = ok && std::find(g.edges.begin(), g.edges.end(), edge) != g.edges.end();
                e.push_back(edge);
            }
            if (ok && is_hamiltonian_cycle(g, e)) {
                ++expected;
            }
            std::size_t i = 0;
            while (i < k && ++succ[i] == k) {
                succ[i++] = 0;
            }
            if (i == k) {
                break;
            }
        }
        auto all = solve_all(g);
        REQUIRE(all.size() == expected);
        for (const auto& e : all) {
            REQUIRE(is_hamiltonian_cycle(g, e));
        }
        cycles += static_cast<int>(all.size());
    }
    CHECK(cycles > 0);
}
