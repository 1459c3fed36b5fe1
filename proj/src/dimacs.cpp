#include "compasp/dimacs.hpp"

#include <cstdlib>
#include <sstream>

namespace compasp {

std::string write_dimacs(const ClauseSet& cs) {
    std::ostringstream out;
    out << "p cnf " << cs.num_vars() << ' ' << cs.clauses.size() << '\n';
    for (const auto& clause : cs.clauses) {
        for (int l : clause) {
            out << l << ' ';
        }
        out << "0\n";
    }
    return out.str();
}

std::string write_symbol_table(const ClauseSet& cs) {
    std::string out;
    for (std::size_t i = 0; i < cs.var_names.size(); ++i) {
        out += std::to_string(i + 1);
        out += '\t';
        out += cs.var_names[i];
        out += '\n';
    }
    return out;
}

ClauseSet read_dimacs(std::string_view cnf, std::string_view symbols) {
    std::istringstream in{std::string(cnf)};
    std::string line;
    long vars = -1;
    long expected = -1;
    ClauseSet cs;
    std::vector<int> current;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c" || first[0] == 'c') {
            continue;
        }
        if (first == "p") {
            std::string fmt;
            if (vars >= 0 || !(ls >> fmt >> vars >> expected) || fmt != "cnf" || vars < 0 || expected < 0) {
                throw DimacsError("line " + std::to_string(lineno) + ": malformed problem line");
            }
            continue;
        }
        if (vars < 0) {
            throw DimacsError("line " + std::to_string(lineno) + ": clause before problem line");
        }
        ls.clear();
        ls.str(line);
        long value = 0;
        while (ls >> value) {
            if (value == 0) {
                cs.clauses.push_back(std::move(current));
                current.clear();
            } else if (std::labs(value) > vars) {
                throw DimacsError("line " + std::to_string(lineno) + ": variable out of range");
            } else {
                current.push_back(static_cast<int>(value));
            }
        }
        if (!ls.eof()) {
            throw DimacsError("line " + std::to_string(lineno) + ": unexpected token");
        }
    }
    if (vars < 0) {
        throw DimacsError("missing problem line");
    }
    if (!current.empty()) {
        throw DimacsError("last clause is not terminated by 0");
    }
    if (static_cast<long>(cs.clauses.size()) != expected) {
        throw DimacsError("problem line announces " + std::to_string(expected) + " clauses, found " +
                          std::to_string(cs.clauses.size()));
    }
    cs.var_names.resize(static_cast<std::size_t>(vars));
    for (long i = 0; i < vars; ++i) {
        cs.var_names[static_cast<std::size_t>(i)] = "x" + std::to_string(i + 1);
    }
    std::istringstream sym{std::string(symbols)};
    while (std::getline(sym, line)) {
        auto tab = line.find('\t');
        if (line.empty()) {
            continue;
        }
        if (tab == std::string::npos) {
            throw DimacsError("malformed symbol table line: " + line);
        }
        long index = std::strtol(line.c_str(), nullptr, 10);
        if (index < 1 || index > vars) {
            throw DimacsError("symbol table index out of range: " + line);
        }
        cs.var_names[static_cast<std::size_t>(index - 1)] = line.substr(tab + 1);
    }
    return cs;
}

}  // namespace compasp
