#pragma once

// Instantiation of schematic programs.
//
// Variables range over every object constant occurring in the program.
// Built-in conditions restrict the substitutions and are erased from the
// resulting ground rules.
//
// With domain pruning enabled (the default) a ground instance is dropped when
// one of its positive body atoms belongs to a domain predicate and is not in
// the domain model. A domain predicate is one defined, non-recursively, by
// rules whose bodies contain only positive domain atoms; its extension is
// the same in every answer set and every model of the completion, so the
// dropped instances can never fire. Answer sets and completion models
// (restricted to the surviving atoms) are unchanged.

#include "compasp/program.hpp"
#include "compasp/schematic.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace compasp {

class GroundingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Object constants of a schematic program, integers ascending followed by
/// symbols in lexicographic order.
struct ConstantUniverse {
    std::vector<std::int64_t> integers;
    std::vector<std::string> symbols;

    [[nodiscard]] std::vector<Constant> ordered() const;
    [[nodiscard]] std::size_t size() const { return integers.size() + symbols.size(); }
};

[[nodiscard]] ConstantUniverse collect_constants(const SchematicProgram& sp);

struct GroundOptions {
    bool prune_domain = true;
};

/// Names ("pred/arity") of the domain predicates of `sp`.
[[nodiscard]] std::vector<std::string> domain_predicates(const SchematicProgram& sp);

/// Ground rules are emitted by rule index, then by substitution in
/// lexicographic order over the variables' first occurrence.
[[nodiscard]] Program ground(const SchematicProgram& sp, const GroundOptions& options = {});

struct InstanceCount {
    std::size_t rules = 0;
    std::size_t atoms = 0;
    friend bool operator==(const InstanceCount&, const InstanceCount&) = default;
};

[[nodiscard]] InstanceCount instance_count(const SchematicProgram& sp, const GroundOptions& options = {});

}  // namespace compasp
