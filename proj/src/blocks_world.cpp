#include "compasp/blocks_world.hpp"

#include "compasp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace compasp {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) {
        return false;
    }
    return std::ranges::all_of(s, [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

void validate(const BlocksInstance& i) {
    if (i.horizon < 0) {
        throw InstanceError("horizon must be nonnegative");
    }
    std::set<std::string> blocks;
    for (const auto& b : i.blocks) {
        if (!is_identifier(b) || b == "table" || b == "not") {
            throw InstanceError("invalid block name '" + b + "'");
        }
        if (!blocks.insert(b).second) {
            throw InstanceError("duplicate block '" + b + "'");
        }
    }
    auto is_object = [&](const std::string& o) { return o == "table" || blocks.contains(o); };
    std::map<std::string, std::string> below;
    std::set<std::string> occupied;
    for (const auto& [b, o] : i.initial) {
        if (!blocks.contains(b)) {
            throw InstanceError("initial state mentions unknown block '" + b + "'");
        }
        if (!is_object(o)) {
            throw InstanceError("initial state mentions unknown object '" + o + "'");
        }
        if (b == o) {
            throw InstanceError("block '" + b + "' cannot be on itself");
        }
        if (!below.emplace(b, o).second) {
            throw InstanceError("block '" + b + "' is on more than one object");
        }
        if (o != "table" && !occupied.insert(o).second) {
            throw InstanceError("more than one block on '" + o + "'");
        }
    }
    for (const auto& b : i.blocks) {
        if (!below.contains(b)) {
            throw InstanceError("block '" + b + "' is not placed in the initial state");
        }
        // Follow the tower down; it must reach the table.
        std::string cur = b;
        for (std::size_t steps = 0; cur != "table"; ++steps) {
            if (steps > blocks.size()) {
                throw InstanceError("cyclic support involving block '" + b + "'");
            }
            cur = below.at(cur);
        }
    }
    for (const auto& [b, o] : i.goal) {
        if (!blocks.contains(b) || !is_object(o)) {
            throw InstanceError("goal mentions unknown object in on(" + b + "," + o + ")");
        }
    }
}

BlocksInstance parse_blocks_instance(std::string_view text) {
    BlocksInstance inst;
    static const std::regex on_re(R"(on\s*\(\s*([A-Za-z0-9_]+)\s*,\s*([A-Za-z0-9_]+)\s*\))");
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool have_horizon = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pct = line.find('%'); pct != std::string::npos) {
            line.erase(pct);
        }
        if (std::ranges::all_of(line, [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw InstanceError("line " + std::to_string(lineno) + ": expected 'key: value'");
        }
        std::string key = line.substr(0, colon);
        std::erase_if(key, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        std::string rest = line.substr(colon + 1);
        if (key == "blocks") {
            std::istringstream ws(rest);
            std::string b;
            while (ws >> b) {
                inst.blocks.push_back(b);
            }
        } else if (key == "horizon") {
            std::istringstream ws(rest);
            std::string extra;
            if (!(ws >> inst.horizon) || (ws >> extra)) {
                throw InstanceError("line " + std::to_string(lineno) + ": horizon must be an integer");
            }
            have_horizon = true;
        } else if (key == "name") {
            std::istringstream ws(rest);
            ws >> inst.name;
        } else if (key == "init" || key == "goal") {
            auto& target = key == "init" ? inst.initial : inst.goal;
            std::string leftover;
            auto last = rest.cbegin();
            for (std::sregex_iterator it(rest.begin(), rest.end(), on_re), end; it != end; ++it) {
                leftover.append(last, (*it)[0].first);
                last = (*it)[0].second;
                target.emplace_back((*it)[1].str(), (*it)[2].str());
            }
            leftover.append(last, rest.cend());
            if (!std::ranges::all_of(leftover,
                                     [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; })) {
                throw InstanceError("line " + std::to_string(lineno) + ": expected a list of on(block,object)");
            }
        } else {
            throw InstanceError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!have_horizon) {
        throw InstanceError("missing 'horizon:' declaration");
    }
    validate(inst);
    return inst;
}

const std::string& blocks_world_rules() {
    static const std::string rules = R"(goal :- time(T), goal(T).
:- not goal.

goal(T2) :- nextstate(T2,T1), goal(T1).

moveop(X,Y,T) :-
   time(T), block(X), object(Y), X != Y,
   on_something(X,T), available(Y,T),
   not covered(X,T), not covered(Y,T),
   not blocked_move(X,Y,T).

on(X,Y,T2) :-
   block(X), object(Y), nextstate(T2,T1),
   moveop(X,Y,T1).

on_something(X,T) :-
   block(X), object(Z), time(T), on(X,Z,T).

available(table,T) :- time(T).

available(X,T) :-
   block(X), time(T), on_something(X,T).

covered(X,T) :-
   block(Z), block(X), time(T), on(Z,X,T).

on(X,Y,T2) :-
   nextstate(T2,T1), block(X), object(Y),
   on(X,Y,T1), not moving(X,T1).

moving(X,T) :- time(T), block(X), object(Y),
   moveop(X,Y,T).

blocked_move(X,Y,T) :-
   block(X), object(Y), time(T), goal(T).

blocked_move(X,Y,T) :-
   time(T), block(X), object(Y),
   not moveop(X,Y,T).

blocked_move(X,Y,T) :-
   block(X), object(Y), object(Z), time(T),
   moveop(X,Z,T), Y != Z.

blocked_move(X,Y,T) :-
   block(X), object(Y), time(T), moving(Y,T).

blocked_move(X,Y,T) :-
   block(X), block(Y), block(Z), time(T),
   moveop(Z,Y,T), X != Z.

:- block(X), time(T), moveop(X,table,T),
   on(X,table,T).

:- nextstate(T2,T1), block(X), object(Y),
   moveop(X,Y,T1), moveop(X,table,T2).

nextstate(Y,X) :- time(X), time(Y),
   Y = X + 1.

object(table).
object(X) :- block(X).
)";
    return rules;
}

SchematicProgram generate_blocks_world(const BlocksInstance& i) {
    validate(i);
    std::string text = blocks_world_rules();
    text += "\n";
    for (std::int64_t t = 0; t <= i.horizon; ++t) {
        text += "time(" + std::to_string(t) + ").\n";
    }
    for (const auto& b : i.blocks) {
        text += "block(" + b + ").\n";
    }
    for (const auto& [b, o] : i.initial) {
        text += "on(" + b + "," + o + ",0).\n";
    }
    text += "goal(T) :- time(T)";
    for (const auto& [b, o] : i.goal) {
        text += ", on(" + b + "," + o + ",T)";
    }
    text += ".\n";
    return parse_schematic(text);
}

std::size_t Plan::num_actions() const {
    std::size_t n = 0;
    for (const auto& [t, moves] : steps) {
        n += moves.size();
    }
    return n;
}

Plan extract_plan(const Program& p, const Interpretation& x) {
    Plan plan;
    for (Literal l : x) {
        const Atom& a = p.atoms().atom(l.atom());
        if (l.negated() || a.predicate != "moveop" || a.args.size() != 3) {
            continue;
        }
        const auto* t = std::get_if<std::int64_t>(&a.args[2]);
        if (t == nullptr) {
            continue;
        }
        plan.steps[*t].emplace(to_string(a.args[0]), to_string(a.args[1]));
    }
    return plan;
}

std::string render_plan(const Plan& plan) {
    std::string out;
    for (const auto& [t, moves] : plan.steps) {
        out += std::to_string(t) + ":";
        for (const auto& [b, o] : moves) {
            out += " move(" + b + "," + o + ")";
        }
        out += "\n";
    }
    return out;
}

LevelMapping blocks_world_level_mapping(const Program& p, const Interpretation& x, std::int64_t t_max) {
    LevelMapping lambda;
    for (Literal l : x) {
        const Atom& a = p.atoms().atom(l.atom());
        auto time_arg = [&](std::size_t i) -> std::uint64_t {
            const auto* t = i < a.args.size() ? std::get_if<std::int64_t>(&a.args[i]) : nullptr;
            if (t == nullptr || *t < 0) {
                throw std::invalid_argument("expected a time argument in " + a.str());
            }
            return static_cast<std::uint64_t>(*t);
        };
        const std::string& pred = a.predicate;
        const std::size_t arity = a.args.size();
        std::uint64_t level = 0;
        if (l.negated()) {
            throw std::invalid_argument("unexpected classical negation: -" + a.str());
        } else if ((pred == "time" || pred == "block") && arity == 1) {
            level = 0;
        } else if ((pred == "object" && arity == 1) || (pred == "nextstate" && arity == 2)) {
            level = 1;
        } else if ((pred == "covered" || pred == "on_something") && arity == 2) {
            level = 4 * time_arg(1) + 3;
        } else if (pred == "available" && arity == 2) {
            level = 4 * time_arg(1) + 4;
        } else if (pred == "moveop" && arity == 3) {
            level = 4 * time_arg(2) + 5;
        } else if (pred == "on" && arity == 3) {
            level = 4 * time_arg(2) + 2;
        } else if (pred == "moving" && arity == 2) {
            level = 4 * time_arg(1) + 6;
        } else if (pred == "goal" && arity == 1) {
            level = 4 * time_arg(0) + 3;
        } else if (pred == "blocked_move" && arity == 3) {
            level = 4 * time_arg(2) + 7;
        } else if (pred == "goal" && arity == 0) {
            level = 4 * static_cast<std::uint64_t>(t_max) + 4;
        } else {
            throw std::invalid_argument("atom outside the blocks-world vocabulary: " + a.str());
        }
        lambda.emplace(l, level);
    }
    return lambda;
}

}  // namespace compasp
