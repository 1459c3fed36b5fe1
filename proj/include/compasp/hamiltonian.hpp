#pragma once

// Hamiltonian cycles of a directed graph as answer sets.

#include "compasp/program.hpp"
#include "compasp/schematic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace compasp {

struct GraphInstance {
    std::vector<std::string> vertices;  ///< must include the start vertex "v0"
    std::vector<std::pair<std::string, std::string>> edges;
};

/// Throws std::invalid_argument on unknown vertices or a missing v0.
void validate(const GraphInstance& g);

[[nodiscard]] const std::string& hamiltonian_rules();

/// The cycle rules plus vertex/1 and edge/2 facts, before grounding.
[[nodiscard]] SchematicProgram hamiltonian_schematic(const GraphInstance& g);

/// hamiltonian_schematic(g), grounded.
[[nodiscard]] Program generate_hamiltonian(const GraphInstance& g);

/// The in(U,V) atoms of `x` as edges.
[[nodiscard]] std::vector<std::pair<std::string, std::string>> selected_edges(const Program& p,
                                                                               const Interpretation& x);

}  // namespace compasp
