#include "compasp/grounder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace compasp {

std::vector<Constant> ConstantUniverse::ordered() const {
    std::vector<Constant> out;
    out.reserve(size());
    for (auto n : integers) {
        out.emplace_back(n);
    }
    for (const auto& s : symbols) {
        out.emplace_back(s);
    }
    return out;
}

ConstantUniverse collect_constants(const SchematicProgram& sp) {
    std::set<std::int64_t> ints;
    std::set<std::string> syms;
    auto visit = [&](const Term& t) {
        if (const auto* c = std::get_if<Constant>(&t)) {
            if (const auto* n = std::get_if<std::int64_t>(c)) {
                ints.insert(*n);
            } else {
                syms.insert(std::get<std::string>(*c));
            }
        }
    };
    auto visit_lit = [&](const SchematicLiteral& l) { std::ranges::for_each(l.args, visit); };
    for (const auto& r : sp.rules) {
        if (r.head) {
            visit_lit(*r.head);
        }
        std::ranges::for_each(r.pos, visit_lit);
        std::ranges::for_each(r.neg, visit_lit);
        for (const auto& c : r.conditions) {
            visit(c.lhs);
            visit(c.rhs);
        }
    }
    return {{ints.begin(), ints.end()}, {syms.begin(), syms.end()}};
}

namespace {

std::string predicate_key(const SchematicLiteral& l) {
    return l.predicate + "/" + std::to_string(l.args.size());
}

void check_safety(const SchematicRule& r) {
    std::set<std::string> bound;
    for (const auto& l : r.pos) {
        for (const auto& t : l.args) {
            if (const auto* v = std::get_if<Variable>(&t)) {
                bound.insert(v->name);
            }
        }
    }
    auto check = [&](const SchematicLiteral& l) {
        for (const auto& t : l.args) {
            if (const auto* v = std::get_if<Variable>(&t); v && !bound.contains(v->name)) {
                throw GroundingError("unsafe rule (variable " + v->name +
                                     " does not occur in the positive body): " + r.str());
            }
        }
    };
    if (r.head) {
        check(*r.head);
    }
    std::ranges::for_each(r.neg, check);
}

using Tuple = std::vector<std::uint32_t>;

// Extensions of the domain predicates, as tuples of universe indices.
struct DomainModel {
    std::map<std::string, std::vector<Tuple>> tuples;
    std::map<std::string, std::set<Tuple>> members;

    bool is_domain(const std::string& key) const { return tuples.contains(key); }
};

// A term compiled against the universe and the rule's variable list.
struct Slot {
    bool is_var = false;
    std::uint32_t index = 0;  // universe index or variable index
};

struct CompiledLiteral {
    std::string key;
    std::vector<Slot> args;
};

struct CompiledCondition {
    BuiltinCondition::Kind kind;
    Slot lhs;
    Slot rhs;
};

class Instantiator {
public:
    Instantiator(const std::vector<Constant>& universe, const std::map<Constant, std::uint32_t>& index)
        : universe_(universe), index_(index) {}

    // Calls `emit` with every substitution of `rule` satisfying its
    // conditions and, when `domain` is given, its positive domain literals.
    // Substitutions are reported in lexicographic order.
    void run(const SchematicRule& rule, const DomainModel* domain,
             const std::function<void(const std::vector<std::string>&, const Tuple&)>& emit) {
        vars_ = rule.variables();
        std::vector<CompiledLiteral> joins;
        if (domain != nullptr) {
            for (const auto& l : rule.pos) {
                if (!l.negated && domain->is_domain(predicate_key(l))) {
                    joins.push_back(compile(l));
                }
            }
        }
        conditions_.clear();
        for (const auto& c : rule.conditions) {
            conditions_.push_back({c.kind, slot(c.lhs), slot(c.rhs)});
        }
        binding_.assign(vars_.size(), kUnbound);
        results_.clear();
        join(joins, 0, domain);
        std::ranges::sort(results_);
        auto dup = std::ranges::unique(results_);
        results_.erase(dup.begin(), dup.end());
        for (const auto& t : results_) {
            emit(vars_, t);
        }
    }

    CompiledLiteral compile(const SchematicLiteral& l) {
        CompiledLiteral c{predicate_key(l), {}};
        for (const auto& t : l.args) {
            c.args.push_back(slot(t));
        }
        return c;
    }

    Slot slot(const Term& t) {
        if (const auto* v = std::get_if<Variable>(&t)) {
            auto it = std::ranges::find(vars_, v->name);
            return {true, static_cast<std::uint32_t>(it - vars_.begin())};
        }
        return {false, index_.at(std::get<Constant>(t))};
    }

    std::uint32_t value(Slot s) const { return s.is_var ? binding_[s.index] : s.index; }

private:
    static constexpr std::uint32_t kUnbound = UINT32_MAX;

    bool condition_holds(const CompiledCondition& c) const {
        std::uint32_t l = value(c.lhs);
        std::uint32_t r = value(c.rhs);
        if (l == kUnbound || r == kUnbound) {
            return true;  // not yet decidable
        }
        switch (c.kind) {
            case BuiltinCondition::Kind::Equal: return l == r;
            case BuiltinCondition::Kind::NotEqual: return l != r;
            case BuiltinCondition::Kind::Successor: {
                const auto* a = std::get_if<std::int64_t>(&universe_[l]);
                const auto* b = std::get_if<std::int64_t>(&universe_[r]);
                return a != nullptr && b != nullptr && *a == *b + 1;
            }
        }
        return false;
    }

    bool conditions_hold() const {
        return std::ranges::all_of(conditions_, [&](const auto& c) { return condition_holds(c); });
    }

    void join(const std::vector<CompiledLiteral>& joins, std::size_t step, const DomainModel* domain) {
        if (step == joins.size()) {
            enumerate_free(0);
            return;
        }
        const CompiledLiteral& lit = joins[step];
        std::vector<std::uint32_t> newly;
        for (const Tuple& t : domain->tuples.at(lit.key)) {
            newly.clear();
            bool ok = true;
            for (std::size_t i = 0; i < t.size() && ok; ++i) {
                Slot s = lit.args[i];
                if (!s.is_var) {
                    ok = s.index == t[i];
                } else if (binding_[s.index] == kUnbound) {
                    binding_[s.index] = t[i];
                    newly.push_back(s.index);
                } else {
                    ok = binding_[s.index] == t[i];
                }
            }
            if (ok && conditions_hold()) {
                join(joins, step + 1, domain);
            }
            for (auto v : newly) {
                binding_[v] = kUnbound;
            }
        }
    }

    void enumerate_free(std::size_t var) {
        while (var < binding_.size() && binding_[var] != kUnbound) {
            ++var;
        }
        if (var == binding_.size()) {
            results_.push_back(binding_);
            return;
        }
        for (std::uint32_t c = 0; c < universe_.size(); ++c) {
            binding_[var] = c;
            if (conditions_hold()) {
                enumerate_free(var + 1);
            }
        }
        binding_[var] = kUnbound;
    }

    const std::vector<Constant>& universe_;
    const std::map<Constant, std::uint32_t>& index_;
    std::vector<std::string> vars_;
    std::vector<CompiledCondition> conditions_;
    Tuple binding_;
    std::vector<Tuple> results_;
};

// Predicates whose extension is fixed by non-recursive, negation-free
// definitions over other domain predicates.
std::set<std::string> find_domain_predicates(const SchematicProgram& sp) {
    std::set<std::string> candidates;
    for (const auto& r : sp.rules) {
        if (r.head) {
            candidates.insert(predicate_key(*r.head));
        }
        for (const auto& l : r.pos) {
            candidates.insert(predicate_key(l));
        }
        for (const auto& l : r.neg) {
            candidates.insert(predicate_key(l));
        }
    }
    // Classically negated occurrences disqualify the predicate outright.
    for (const auto& r : sp.rules) {
        auto drop_negated = [&](const SchematicLiteral& l) {
            if (l.negated) {
                candidates.erase(predicate_key(l));
            }
        };
        if (r.head) {
            drop_negated(*r.head);
        }
        std::ranges::for_each(r.pos, drop_negated);
        std::ranges::for_each(r.neg, drop_negated);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : sp.rules) {
            if (!r.head || !candidates.contains(predicate_key(*r.head))) {
                continue;
            }
            bool ok = r.neg.empty() && std::ranges::all_of(r.pos, [&](const SchematicLiteral& l) {
                          return candidates.contains(predicate_key(l));
                      });
            if (!ok) {
                candidates.erase(predicate_key(*r.head));
                changed = true;
            }
        }
    }
    // Remove predicates on or above a dependency cycle.
    std::map<std::string, std::set<std::string>> deps;
    for (const auto& r : sp.rules) {
        if (r.head && candidates.contains(predicate_key(*r.head))) {
            auto& d = deps[predicate_key(*r.head)];
            for (const auto& l : r.pos) {
                d.insert(predicate_key(l));
            }
        }
    }
    std::map<std::string, int> state;  // 0 new, 1 on stack, 2 acyclic, 3 cyclic
    std::function<bool(const std::string&)> acyclic = [&](const std::string& p) {
        int& s = state[p];
        if (s == 1 || s == 3) {
            s = 3;
            return false;
        }
        if (s == 2) {
            return true;
        }
        s = 1;
        bool ok = true;
        for (const auto& q : deps[p]) {
            ok = acyclic(q) && ok;
        }
        state[p] = ok ? 2 : 3;
        return ok;
    };
    std::set<std::string> out;
    for (const auto& p : candidates) {
        if (acyclic(p)) {
            out.insert(p);
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> domain_predicates(const SchematicProgram& sp) {
    auto preds = find_domain_predicates(sp);
    return {preds.begin(), preds.end()};
}

namespace {

class GroundingRun {
public:
    GroundingRun(const SchematicProgram& sp, const GroundOptions& options)
        : sp_(sp), universe_(collect_constants(sp).ordered()) {
        for (std::uint32_t i = 0; i < universe_.size(); ++i) {
            index_.emplace(universe_[i], i);
        }
        for (const auto& r : sp.rules) {
            check_safety(r);
        }
        if (options.prune_domain) {
            domain_ = build_domain(find_domain_predicates(sp));
        }
    }

    Program run() {
        Program out;
        for (const auto& r : sp_.rules) {
            Instantiator inst(universe_, index_);
            inst.run(r, options_domain(), [&](const std::vector<std::string>& vars, const Tuple& t) {
                out.add_rule(instantiate(r, vars, t, out));
            });
        }
        return out;
    }

private:
    const DomainModel* options_domain() const { return domain_ ? &*domain_ : nullptr; }

    DomainModel build_domain(const std::set<std::string>& preds) {
        DomainModel dm;
        for (const auto& p : preds) {
            dm.tuples[p];
            dm.members[p];
        }
        std::map<std::string, std::vector<const SchematicRule*>> defs;
        for (const auto& r : sp_.rules) {
            if (r.head && preds.contains(predicate_key(*r.head))) {
                defs[predicate_key(*r.head)].push_back(&r);
            }
        }
        std::set<std::string> done;
        while (done.size() < preds.size()) {
            const std::size_t before = done.size();
            for (const auto& p : preds) {
                if (done.contains(p)) {
                    continue;
                }
                bool ready = std::ranges::all_of(defs[p], [&](const SchematicRule* r) {
                    return std::ranges::all_of(r->pos, [&](const SchematicLiteral& l) {
                        return predicate_key(l) == p ? false : done.contains(predicate_key(l));
                    });
                });
                if (!ready) {
                    continue;
                }
                for (const SchematicRule* r : defs[p]) {
                    Instantiator inst(universe_, index_);
                    inst.run(*r, &dm, [&](const std::vector<std::string>& vars, const Tuple& t) {
                        Tuple head;
                        for (const auto& arg : r->head->args) {
                            head.push_back(resolve(arg, vars, t));
                        }
                        if (dm.members[p].insert(head).second) {
                            dm.tuples[p].push_back(std::move(head));
                        }
                    });
                }
                done.insert(p);
            }
            if (done.size() == before) {
                throw std::logic_error("domain predicates are not stratified");
            }
        }
        return dm;
    }

    std::uint32_t resolve(const Term& term, const std::vector<std::string>& vars, const Tuple& t) const {
        if (const auto* v = std::get_if<Variable>(&term)) {
            return t[static_cast<std::size_t>(std::ranges::find(vars, v->name) - vars.begin())];
        }
        return index_.at(std::get<Constant>(term));
    }

    Literal literal(const SchematicLiteral& l, const std::vector<std::string>& vars, const Tuple& t,
                    Program& out) const {
        Atom a{l.predicate, {}};
        a.args.reserve(l.args.size());
        for (const auto& arg : l.args) {
            a.args.push_back(universe_[resolve(arg, vars, t)]);
        }
        return Literal(out.intern(a), l.negated);
    }

    Rule instantiate(const SchematicRule& r, const std::vector<std::string>& vars, const Tuple& t,
                     Program& out) const {
        Rule g;
        if (r.head) {
            g.head = literal(*r.head, vars, t, out);
        }
        for (const auto& l : r.pos) {
            g.pos.push_back(literal(l, vars, t, out));
        }
        for (const auto& l : r.neg) {
            g.neg.push_back(literal(l, vars, t, out));
        }
        return g;
    }

    const SchematicProgram& sp_;
    std::vector<Constant> universe_;
    std::map<Constant, std::uint32_t> index_;
    std::optional<DomainModel> domain_;
};

}  // namespace

Program ground(const SchematicProgram& sp, const GroundOptions& options) {
    return GroundingRun(sp, options).run();
}

InstanceCount instance_count(const SchematicProgram& sp, const GroundOptions& options) {
    Program p = ground(sp, options);
    return {p.rules().size(), p.num_atoms()};
}

}  // namespace compasp
