#pragma once

// Text front end.
//
//     rule    := head ":-" body "." | head "." | ":-" body "."
//     head    := literal | "#false"
//     body    := elem ("," elem)*
//     elem    := literal | "not" literal | term ("=" | "!=") term | term "=" term "+" "1"
//     literal := ["-"] ident ["(" term ("," term)* ")"]
//     term    := ident | integer | Variable
//
// `%` starts a comment that runs to the end of the line. Variables and
// conditions are only accepted by the schematic entry point.

#include "compasp/program.hpp"
#include "compasp/schematic.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace compasp {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

[[nodiscard]] SchematicProgram parse_schematic(std::string_view text);

/// Parses a ground program; variables and built-in conditions are errors.
[[nodiscard]] Program parse_program(std::string_view text);

/// Converts a schematic program without variables or conditions.
/// Throws std::invalid_argument otherwise.
[[nodiscard]] Program to_ground_program(const SchematicProgram& sp);

/// Parses a list of ground literals separated by commas and/or whitespace,
/// optionally enclosed in braces, e.g. "{p, -q(a), r}". Unknown atoms are
/// interned into `p`.
[[nodiscard]] Interpretation parse_interpretation(std::string_view text, Program& p);

}  // namespace compasp
