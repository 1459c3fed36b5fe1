#pragma once

#include "compasp/completion.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace compasp {

class DimacsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "p cnf V C" followed by one 0-terminated clause per line.
[[nodiscard]] std::string write_dimacs(const ClauseSet& cs);

/// One "index<TAB>name" line per variable.
[[nodiscard]] std::string write_symbol_table(const ClauseSet& cs);

/// Reads DIMACS CNF. Comment lines ("c ...") are skipped; clauses may span
/// lines. Variables are named from `symbols` (a symbol table as written by
/// write_symbol_table) when given, and "x<i>" otherwise.
[[nodiscard]] ClauseSet read_dimacs(std::string_view cnf, std::string_view symbols = {});

}  // namespace compasp
