#pragma once

// Schematic (non-ground) programs: rules over terms that may contain
// variables, plus the built-in conditions X = Y, X != Y and Y = X + 1.

#include "compasp/program.hpp"

#include <string>
#include <variant>
#include <vector>

namespace compasp {

struct Variable {
    std::string name;
    friend bool operator==(const Variable&, const Variable&) = default;
};

using Term = std::variant<Constant, Variable>;

std::string to_string(const Term& t);

struct SchematicLiteral {
    std::string predicate;
    std::vector<Term> args;
    bool negated = false;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const SchematicLiteral&, const SchematicLiteral&) = default;
};

struct BuiltinCondition {
    enum class Kind { Equal, NotEqual, Successor };
    Kind kind = Kind::Equal;
    Term lhs;  ///< For Successor: lhs = rhs + 1.
    Term rhs;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const BuiltinCondition&, const BuiltinCondition&) = default;
};

struct SchematicRule {
    std::optional<SchematicLiteral> head;
    std::vector<SchematicLiteral> pos;
    std::vector<SchematicLiteral> neg;
    std::vector<BuiltinCondition> conditions;

    /// Variables in first-occurrence order: head, positive body, negative
    /// body, then conditions.
    [[nodiscard]] std::vector<std::string> variables() const;
    [[nodiscard]] bool is_ground() const { return variables().empty(); }
    [[nodiscard]] std::string str() const;
};

struct SchematicProgram {
    std::vector<SchematicRule> rules;

    [[nodiscard]] std::string str() const;
};

}  // namespace compasp
