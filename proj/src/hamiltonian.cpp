#include "compasp/hamiltonian.hpp"

#include "compasp/grounder.hpp"
#include "compasp/parser.hpp"

#include <set>
#include <stdexcept>

namespace compasp {

void validate(const GraphInstance& g) {
    std::set<std::string> vertices(g.vertices.begin(), g.vertices.end());
    if (!vertices.contains("v0")) {
        throw std::invalid_argument("graph has no start vertex v0");
    }
    for (const auto& [u, v] : g.edges) {
        if (!vertices.contains(u) || !vertices.contains(v)) {
            throw std::invalid_argument("edge (" + u + "," + v + ") mentions an unknown vertex");
        }
    }
}

const std::string& hamiltonian_rules() {
    static const std::string rules = R"(in(U,V) :- edge(U,V), not out(U,V).
out(U,V) :- edge(U,V), not in(U,V).
:- in(U,V), in(U,W), V != W.
:- in(U,W), in(V,W), U != V.
reachable(V) :- in(v0,V).
reachable(V) :- reachable(U), in(U,V).
:- vertex(U), not reachable(U).
)";
    return rules;
}

SchematicProgram hamiltonian_schematic(const GraphInstance& g) {
    validate(g);
    std::string text = hamiltonian_rules();
    for (const auto& v : g.vertices) {
        text += "vertex(" + v + ").\n";
    }
    for (const auto& [u, v] : g.edges) {
        text += "edge(" + u + "," + v + ").\n";
    }
    return parse_schematic(text);
}

Program generate_hamiltonian(const GraphInstance& g) {
    return ground(hamiltonian_schematic(g));
}

std::vector<std::pair<std::string, std::string>> selected_edges(const Program& p, const Interpretation& x) {
    std::vector<std::pair<std::string, std::string>> out;
    for (Literal l : x) {
        const Atom& a = p.atoms().atom(l.atom());
        if (!l.negated() && a.predicate == "in" && a.args.size() == 2) {
            out.emplace_back(to_string(a.args[0]), to_string(a.args[1]));
        }
    }
    return out;
}

}  // namespace compasp
