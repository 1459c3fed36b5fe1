#include "compasp/completion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace compasp {

CompletionTheory::CompletionTheory(std::vector<std::string> atom_names)
    : names_(std::move(atom_names)), defs_(names_.size()) {}

void CompletionTheory::add_disjunct(AtomId head, Conjunction body) { defs_.at(head).push_back(std::move(body)); }

void CompletionTheory::add_constraint(Conjunction body) { bottom_.push_back(std::move(body)); }

namespace {

void normalize_disjunction(std::vector<Conjunction>& d) {
    for (auto& c : d) {
        std::ranges::sort(c);
        auto dup = std::ranges::unique(c);
        c.erase(dup.begin(), dup.end());
    }
    std::ranges::sort(d);
    auto dup = std::ranges::unique(d);
    d.erase(dup.begin(), dup.end());
}

}  // namespace

void CompletionTheory::normalize() {
    for (auto& d : defs_) {
        normalize_disjunction(d);
    }
    normalize_disjunction(bottom_);
}

std::string CompletionTheory::str() const {
    auto conj = [&](const Conjunction& c, bool parenthesize) {
        if (c.empty()) {
            return std::string("true");
        }
        std::string out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            out += i ? " & " : "";
            out += c[i].positive ? names_[c[i].atom] : "-" + names_[c[i].atom];
        }
        return parenthesize && c.size() > 1 ? "(" + out + ")" : out;
    };
    auto disj = [&](const std::vector<Conjunction>& d) {
        if (d.empty()) {
            return std::string("false");
        }
        std::string out;
        for (std::size_t i = 0; i < d.size(); ++i) {
            out += i ? " | " : "";
            out += conj(d[i], d.size() > 1);
        }
        return out;
    };
    std::string out;
    for (std::size_t a = 0; a < names_.size(); ++a) {
        out += names_[a] + " <-> " + disj(defs_[a]) + "\n";
    }
    if (!bottom_.empty()) {
        out += "false <-> " + disj(bottom_) + "\n";
    }
    return out;
}

RenamedProgram eliminate_classical_negation(const Program& p) {
    RenamedProgram out;
    Program& q = out.program;
    for (std::size_t i = 0; i < p.num_atoms(); ++i) {
        q.intern(p.atoms().atom(static_cast<AtomId>(i)));
    }
    std::map<AtomId, AtomId> fresh;
    auto rename = [&](Literal l) {
        if (!l.negated()) {
            return l;
        }
        auto it = fresh.find(l.atom());
        if (it == fresh.end()) {
            Atom a = p.atoms().atom(l.atom());
            // "__" cannot start an identifier of the input grammar.
            a.predicate = "__neg_" + a.predicate;
            AtomId id = q.intern(a);
            it = fresh.emplace(l.atom(), id).first;
            out.renaming.entries.emplace_back(l.atom(), id);
        }
        return Literal(it->second, false);
    };
    for (const Rule& r : p.rules()) {
        Rule g;
        if (r.head) {
            g.head = rename(*r.head);
        }
        std::ranges::transform(r.pos, std::back_inserter(g.pos), rename);
        std::ranges::transform(r.neg, std::back_inserter(g.neg), rename);
        q.add_rule(std::move(g));
    }
    for (auto [atom, prime] : out.renaming.entries) {
        q.add_rule(Rule{std::nullopt, {Literal(atom, false), Literal(prime, false)}, {}});
    }
    return out;
}

Interpretation rename_interpretation(const RenamingMap& map, const Interpretation& x) {
    std::vector<Literal> out;
    for (Literal l : x) {
        if (!l.negated()) {
            out.push_back(l);
            continue;
        }
        auto it = std::ranges::find_if(map.entries, [&](const auto& e) { return e.first == l.atom(); });
        if (it == map.entries.end()) {
            throw std::invalid_argument("classically negated literal without a renamed counterpart");
        }
        out.emplace_back(it->second, false);
    }
    return Interpretation(std::move(out));
}

Interpretation restore_interpretation(const RenamingMap& map, const Interpretation& x) {
    std::vector<Literal> out;
    for (Literal l : x) {
        auto it = std::ranges::find_if(map.entries, [&](const auto& e) { return e.second == l.atom(); });
        out.push_back(it == map.entries.end() ? l : Literal(it->first, true));
    }
    return Interpretation(std::move(out));
}

CompletionTheory completion(const Program& p) {
    if (p.has_classical_negation()) {
        throw std::invalid_argument("completion requires a program without classical negation");
    }
    std::vector<std::string> names;
    names.reserve(p.num_atoms());
    for (std::size_t i = 0; i < p.num_atoms(); ++i) {
        names.push_back(p.atoms().name(static_cast<AtomId>(i)));
    }
    CompletionTheory t(std::move(names));
    for (const Rule& r : p.rules()) {
        Conjunction body;
        body.reserve(r.pos.size() + r.neg.size());
        for (Literal l : r.pos) {
            body.push_back({l.atom(), true});
        }
        for (Literal l : r.neg) {
            body.push_back({l.atom(), false});
        }
        if (r.head) {
            t.add_disjunct(r.head->atom(), std::move(body));
        } else {
            t.add_constraint(std::move(body));
        }
    }
    t.normalize();
    return t;
}

bool eval_completion(const CompletionTheory& t, const Interpretation& x) {
    std::vector<char> val(t.num_atoms(), 0);
    for (Literal l : x) {
        if (l.negated()) {
            throw std::invalid_argument("completion models are sets of atoms");
        }
        if (l.atom() < val.size()) {
            val[l.atom()] = 1;
        } else {
            return false;  // an atom outside the theory has no definition
        }
    }
    auto holds = [&](const Conjunction& c) {
        return std::ranges::all_of(c, [&](const Conjunct& k) { return (val[k.atom] != 0) == k.positive; });
    };
    for (AtomId a = 0; a < t.num_atoms(); ++a) {
        if ((val[a] != 0) != std::ranges::any_of(t.definition(a), holds)) {
            return false;
        }
    }
    return std::ranges::none_of(t.bottom(), holds);
}

ClauseSet to_cnf(const CompletionTheory& t) {
    ClauseSet cs;
    cs.var_names.reserve(t.num_atoms());
    for (AtomId a = 0; a < t.num_atoms(); ++a) {
        cs.var_names.push_back(t.atom_name(a));
    }
    auto lit = [](const Conjunct& k) {
        int v = static_cast<int>(k.atom) + 1;
        return k.positive ? v : -v;
    };
    int aux_count = 0;
    for (AtomId a = 0; a < t.num_atoms(); ++a) {
        const int head = static_cast<int>(a) + 1;
        const auto& defs = t.definition(a);
        if (defs.empty()) {
            cs.clauses.push_back({-head});
            continue;
        }
        if (std::ranges::any_of(defs, [](const Conjunction& c) { return c.empty(); })) {
            cs.clauses.push_back({head});
            continue;
        }
        std::vector<int> disjuncts;
        for (const Conjunction& c : defs) {
            if (c.size() == 1) {
                disjuncts.push_back(lit(c.front()));
                continue;
            }
            cs.var_names.push_back("__aux" + std::to_string(++aux_count));
            const int aux = cs.num_vars();
            std::vector<int> back{aux};
            for (const Conjunct& k : c) {
                cs.clauses.push_back({-aux, lit(k)});
                back.push_back(-lit(k));
            }
            cs.clauses.push_back(std::move(back));
            disjuncts.push_back(aux);
        }
        std::vector<int> forward{-head};
        forward.insert(forward.end(), disjuncts.begin(), disjuncts.end());
        cs.clauses.push_back(std::move(forward));
        for (int d : disjuncts) {
            cs.clauses.push_back({head, -d});
        }
    }
    for (const Conjunction& c : t.bottom()) {
        std::vector<int> clause;
        for (const Conjunct& k : c) {
            clause.push_back(-lit(k));
        }
        cs.clauses.push_back(std::move(clause));
    }
    return cs;
}

}  // namespace compasp
