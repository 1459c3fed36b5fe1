#include "compasp/schematic.hpp"

#include <algorithm>

namespace compasp {

std::string to_string(const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
        return v->name;
    }
    return to_string(std::get<Constant>(t));
}

std::string SchematicLiteral::str() const {
    std::string out = negated ? "-" + predicate : predicate;
    if (!args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            out += i ? "," : "";
            out += to_string(args[i]);
        }
        out += ')';
    }
    return out;
}

std::string BuiltinCondition::str() const {
    switch (kind) {
        case Kind::Equal: return to_string(lhs) + " = " + to_string(rhs);
        case Kind::NotEqual: return to_string(lhs) + " != " + to_string(rhs);
        case Kind::Successor: return to_string(lhs) + " = " + to_string(rhs) + " + 1";
    }
    return {};
}

std::vector<std::string> SchematicRule::variables() const {
    std::vector<std::string> out;
    auto visit = [&](const Term& t) {
        if (const auto* v = std::get_if<Variable>(&t)) {
            if (std::ranges::find(out, v->name) == out.end()) {
                out.push_back(v->name);
            }
        }
    };
    if (head) {
        std::ranges::for_each(head->args, visit);
    }
    for (const auto& l : pos) {
        std::ranges::for_each(l.args, visit);
    }
    for (const auto& l : neg) {
        std::ranges::for_each(l.args, visit);
    }
    for (const auto& c : conditions) {
        visit(c.lhs);
        visit(c.rhs);
    }
    return out;
}

std::string SchematicRule::str() const {
    std::vector<std::string> body;
    for (const auto& l : pos) {
        body.push_back(l.str());
    }
    for (const auto& l : neg) {
        body.push_back("not " + l.str());
    }
    for (const auto& c : conditions) {
        body.push_back(c.str());
    }
    if (!head && body.empty()) {
        return "#false.";
    }
    std::string out = head ? head->str() : "";
    if (!body.empty()) {
        out += head ? " :- " : ":- ";
        for (std::size_t i = 0; i < body.size(); ++i) {
            out += i ? ", " : "";
            out += body[i];
        }
    }
    return out + ".";
}

std::string SchematicProgram::str() const {
    std::string out;
    for (const auto& r : rules) {
        out += r.str();
        out += '\n';
    }
    return out;
}

}  // namespace compasp
