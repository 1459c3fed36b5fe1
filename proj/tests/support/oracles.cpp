#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace oracle {

using compasp::Atom;
using compasp::Constant;

LitSet to_set(const Interpretation& x) {
    return LitSet(x.begin(), x.end());
}

Interpretation from_set(const LitSet& s) {
    return Interpretation(std::vector<Literal>(s.begin(), s.end()));
}

bool body_holds(const Rule& r, const LitSet& x) {
    for (Literal l : r.pos) {
        if (!x.contains(l)) {
            return false;
        }
    }
    for (Literal l : r.neg) {
        if (x.contains(l)) {
            return false;
        }
    }
    return true;
}

bool consistent(const LitSet& x) {
    for (Literal l : x) {
        if (x.contains(l.complement())) {
            return false;
        }
    }
    return true;
}

bool closed(const Program& p, const LitSet& x) {
    for (const Rule& r : p.rules()) {
        if (body_holds(r, x) && (!r.head || !x.contains(*r.head))) {
            return false;
        }
    }
    return true;
}

bool supported(const Program& p, const LitSet& x) {
    for (Literal l : x) {
        bool found = false;
        for (const Rule& r : p.rules()) {
            if (r.head == l && body_holds(r, x)) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

LitSet reduct_least_model(const Program& p, const LitSet& x, bool& ok) {
    LitSet m;
    ok = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule& r : p.rules()) {
            bool blocked = false;
            for (Literal l : r.neg) {
                blocked = blocked || x.contains(l);
            }
            if (blocked) {
                continue;
            }
            bool fires = true;
            for (Literal l : r.pos) {
                fires = fires && m.contains(l);
            }
            if (!fires) {
                continue;
            }
            if (!r.head) {
                ok = false;
                continue;
            }
            changed = m.insert(*r.head).second || changed;
        }
    }
    if (!consistent(m)) {
        ok = false;
    }
    return m;
}

bool answer_set(const Program& p, const LitSet& x) {
    if (!consistent(x)) {
        return false;
    }
    bool ok = true;
    LitSet m = reduct_least_model(p, x, ok);
    return ok && m == x;
}

std::vector<Literal> universe(const Program& p) {
    std::vector<Literal> u;
    bool classical = p.has_classical_negation();
    for (compasp::AtomId a = 0; a < p.num_atoms(); ++a) {
        u.emplace_back(a, false);
        if (classical) {
            u.emplace_back(a, true);
        }
    }
    return u;
}

std::vector<Interpretation> answer_sets(const Program& p) {
    std::vector<Literal> u = universe(p);
    if (u.size() > 20) {
        throw std::invalid_argument("oracle universe too large");
    }
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.size()); ++mask) {
        LitSet x;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if ((mask >> i) & 1u) {
                x.insert(u[i]);
            }
        }
        if (answer_set(p, x)) {
            out.push_back(from_set(x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Interpretation> answer_sets_by_guess(const Program& p) {
    LitSet under_not;
    for (const Rule& r : p.rules()) {
        under_not.insert(r.neg.begin(), r.neg.end());
    }
    std::vector<Literal> nl(under_not.begin(), under_not.end());
    if (nl.size() > 24) {
        throw std::invalid_argument("oracle guess space too large");
    }
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nl.size()); ++mask) {
        LitSet g;
        for (std::size_t i = 0; i < nl.size(); ++i) {
            if ((mask >> i) & 1u) {
                g.insert(nl[i]);
            }
        }
        bool ok = true;
        LitSet m = reduct_least_model(p, g, ok);
        if (!ok) {
            continue;
        }
        bool agrees = true;
        for (Literal l : nl) {
            agrees = agrees && (m.contains(l) == g.contains(l));
        }
        if (agrees) {
            out.push_back(from_set(m));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool completion_model(const Program& p, const LitSet& atoms) {
    for (compasp::AtomId a = 0; a < p.num_atoms(); ++a) {
        Literal l(a, false);
        bool derivable = false;
        for (const Rule& r : p.rules()) {
            if (r.head == l && body_holds(r, atoms)) {
                derivable = true;
            }
        }
        if (derivable != atoms.contains(l)) {
            return false;
        }
    }
    for (const Rule& r : p.rules()) {
        if (!r.head && body_holds(r, atoms)) {
            return false;
        }
    }
    return true;
}

std::vector<Interpretation> completion_models(const Program& p) {
    if (p.num_atoms() > 20) {
        throw std::invalid_argument("oracle universe too large");
    }
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.num_atoms()); ++mask) {
        LitSet x;
        for (compasp::AtomId a = 0; a < p.num_atoms(); ++a) {
            if ((mask >> a) & 1u) {
                x.emplace(a, false);
            }
        }
        if (completion_model(p, x)) {
            out.push_back(from_set(x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool tight_on(const Program& p, const LitSet& x) {
    std::vector<Literal> v(x.begin(), x.end());
    std::map<Literal, std::size_t> idx;
    for (std::size_t i = 0; i < v.size(); ++i) {
        idx[v[i]] = i;
    }
    std::size_t n = v.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (const Rule& r : p.rules()) {
        if (!r.head || !x.contains(*r.head) ||
            !std::all_of(r.pos.begin(), r.pos.end(), [&](Literal l) { return x.contains(l); })) {
            continue;
        }
        for (Literal b : r.pos) {
            reach[idx.at(b)][idx.at(*r.head)] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[i][k] && reach[k][j]) {
                    reach[i][j] = 1;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (reach[i][i]) {
            return false;
        }
    }
    return true;
}

std::set<std::vector<bool>> truth_table_models(const ClauseSet& cs, int k) {
    int n = cs.num_vars();
    if (n > 20) {
        throw std::invalid_argument("too many variables for a truth table");
    }
    std::set<std::vector<bool>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool sat = true;
        for (const auto& c : cs.clauses) {
            bool any = false;
            for (int l : c) {
                bool val = (mask >> (std::abs(l) - 1)) & 1u;
                any = any || (l > 0 ? val : !val);
            }
            if (!any) {
                sat = false;
                break;
            }
        }
        if (sat) {
            std::vector<bool> proj(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) {
                proj[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
            }
            out.insert(proj);
        }
    }
    return out;
}

ClauseSet parse_dimacs(const std::string& cnf, const std::string& symbols) {
    std::istringstream in(cnf);
    std::string tok;
    int vars = -1;
    std::size_t count = 0;
    ClauseSet cs;
    std::vector<int> cur;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') {
            continue;
        }
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt >> vars >> count;
            continue;
        }
        int lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                cs.clauses.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(lit);
            }
        }
    }
    if (vars < 0 || !cur.empty() || cs.clauses.size() != count) {
        throw std::runtime_error("malformed DIMACS in test reader");
    }
    cs.var_names.resize(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) {
        cs.var_names[static_cast<std::size_t>(i)] = "x" + std::to_string(i + 1);
    }
    std::istringstream sym(symbols);
    while (std::getline(sym, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            continue;
        }
        int i = std::stoi(line.substr(0, tab));
        cs.var_names.at(static_cast<std::size_t>(i - 1)) = line.substr(tab + 1);
    }
    return cs;
}

namespace {

using compasp::SchematicLiteral;
using compasp::SchematicRule;
using compasp::Term;
using compasp::Variable;
using Subst = std::map<std::string, Constant>;

std::string key(const std::string& pred, const std::vector<Constant>& args) {
    std::string k = pred + "(";
    for (const auto& a : args) {
        k += compasp::to_string(a) + ",";
    }
    return k + ")";
}

std::vector<Constant> apply(const std::vector<Term>& args, const Subst& s) {
    std::vector<Constant> out;
    for (const auto& t : args) {
        if (const auto* v = std::get_if<Variable>(&t)) {
            out.push_back(s.at(v->name));
        } else {
            out.push_back(std::get<Constant>(t));
        }
    }
    return out;
}

Constant value(const Term& t, const Subst& s) {
    if (const auto* v = std::get_if<Variable>(&t)) {
        return s.at(v->name);
    }
    return std::get<Constant>(t);
}

bool conditions_hold(const SchematicRule& r, const Subst& s) {
    for (const auto& c : r.conditions) {
        Constant l = value(c.lhs, s);
        Constant rr = value(c.rhs, s);
        switch (c.kind) {
            case compasp::BuiltinCondition::Kind::Equal:
                if (l != rr) return false;
                break;
            case compasp::BuiltinCondition::Kind::NotEqual:
                if (l == rr) return false;
                break;
            case compasp::BuiltinCondition::Kind::Successor: {
                const auto* a = std::get_if<std::int64_t>(&l);
                const auto* b = std::get_if<std::int64_t>(&rr);
                if (a == nullptr || b == nullptr || *a != *b + 1) return false;
                break;
            }
        }
    }
    return true;
}

void collect(const Term& t, std::set<Constant>& out) {
    if (const auto* c = std::get_if<Constant>(&t)) {
        out.insert(*c);
    }
}

}  // namespace

Count naive_instance_count(const compasp::SchematicProgram& sp, const std::vector<std::string>& domain) {
    std::set<Constant> consts;
    for (const auto& r : sp.rules) {
        auto lits = r.pos;
        lits.insert(lits.end(), r.neg.begin(), r.neg.end());
        if (r.head) {
            lits.push_back(*r.head);
        }
        for (const auto& l : lits) {
            for (const auto& t : l.args) {
                collect(t, consts);
            }
        }
        for (const auto& c : r.conditions) {
            collect(c.lhs, consts);
            collect(c.rhs, consts);
        }
    }
    std::vector<Constant> u(consts.begin(), consts.end());
    std::set<std::string> dom(domain.begin(), domain.end());
    auto is_dom = [&](const SchematicLiteral& l) {
        return !l.negated && dom.contains(l.predicate + "/" + std::to_string(l.args.size()));
    };

    // Every instance satisfying its conditions, by full nested loops.
    struct Inst {
        std::size_t rule;
        Subst s;
    };
    std::vector<Inst> all;
    for (std::size_t ri = 0; ri < sp.rules.size(); ++ri) {
        const auto& r = sp.rules[ri];
        std::vector<std::string> vars = r.variables();
        std::vector<std::size_t> digits(vars.size(), 0);
        if (!vars.empty() && u.empty()) {
            continue;
        }
        for (;;) {
            Subst s;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                s[vars[i]] = u[digits[i]];
            }
            if (conditions_hold(r, s)) {
                all.push_back({ri, s});
            }
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == u.size()) {
                digits[i++] = 0;
            }
            if (i == digits.size()) {
                break;
            }
        }
    }

    // Domain model: least model of the domain-predicate instances.
    std::set<std::string> dmodel;
    if (!dom.empty()) {
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& in : all) {
                const auto& r = sp.rules[in.rule];
                if (!r.head || !is_dom(*r.head)) {
                    continue;
                }
                bool fires = true;
                for (const auto& l : r.pos) {
                    fires = fires && dmodel.contains(key(l.predicate, apply(l.args, in.s)));
                }
                if (fires) {
                    changed = dmodel.insert(key(r.head->predicate, apply(r.head->args, in.s))).second || changed;
                }
            }
        }
    }

    Count c;
    std::set<std::string> atoms;
    for (const auto& in : all) {
        const auto& r = sp.rules[in.rule];
        bool keep = true;
        for (const auto& l : r.pos) {
            if (is_dom(l) && !dmodel.contains(key(l.predicate, apply(l.args, in.s)))) {
                keep = false;
            }
        }
        if (!keep) {
            continue;
        }
        ++c.rules;
        auto add = [&](const SchematicLiteral& l) { atoms.insert(key(l.predicate, apply(l.args, in.s))); };
        if (r.head) {
            add(*r.head);
        }
        for (const auto& l : r.pos) add(l);
        for (const auto& l : r.neg) add(l);
    }
    c.atoms = atoms.size();
    return c;
}

}  // namespace oracle
