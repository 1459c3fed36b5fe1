#pragma once

// Tightness of a program on a set of literals.
//
// A program is tight on X when some level mapping with domain X strictly
// increases from the positive body to the head of every rule whose head and
// positive body lie in X. Negated bodies play no role.

#include "compasp/program.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace compasp {

using LevelMapping = std::map<Literal, std::uint64_t>;

/// Vertices are the literals of X; an edge L -> Head for each positive body
/// literal L of a rule whose head and positive body are all in X.
struct PositiveDependencyGraph {
    std::vector<Literal> vertices;                      ///< sorted
    std::vector<std::vector<std::uint32_t>> successors; ///< by vertex index, sorted, unique

    [[nodiscard]] std::size_t index_of(Literal l) const;
    [[nodiscard]] bool has_edge(Literal from, Literal to) const;
};

/// A cycle L1 -> L2 -> ... -> Lk -> L1 of the positive dependency graph.
struct CycleWitness {
    std::vector<Literal> cycle;
    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

using TightnessResult = std::variant<LevelMapping, CycleWitness>;

/// Throws InconsistentInterpretation for inconsistent x.
[[nodiscard]] PositiveDependencyGraph positive_dependency_graph(const Program& p, const Interpretation& x);

/// Returns the minimal level mapping (longest-path depth) when the program
/// is tight on x, otherwise a cycle found by depth-first search.
[[nodiscard]] TightnessResult tight_on(const Program& p, const Interpretation& x);

/// Throws std::invalid_argument if the domain of `lambda` is not x.
[[nodiscard]] bool verify_level_mapping(const Program& p, const Interpretation& x, const LevelMapping& lambda);

/// Tightness in the original sense: an unrestricted level mapping on all
/// atoms exists, i.e. the full positive dependency graph is acyclic.
[[nodiscard]] bool globally_tight(const Program& p);

/// True iff x shares no literal with pos_literals(p); the constant-zero
/// mapping then certifies tightness on x.
[[nodiscard]] bool disjoint_from_pos(const Program& p, const Interpretation& x);

[[nodiscard]] std::string render_cycle(const Program& p, const CycleWitness& w);
[[nodiscard]] std::string render_level_mapping(const Program& p, const LevelMapping& lambda);

}  // namespace compasp
