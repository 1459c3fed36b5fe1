#include "compasp/program.hpp"

#include <algorithm>

namespace compasp {

std::string to_string(const Constant& c) {
    if (const auto* n = std::get_if<std::int64_t>(&c)) {
        return std::to_string(*n);
    }
    return std::get<std::string>(c);
}

std::string Atom::str() const {
    std::string out = predicate;
    if (!args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += to_string(args[i]);
        }
        out += ')';
    }
    return out;
}

AtomId AtomTable::intern(const Atom& atom) {
    std::string key = atom.str();
    if (auto it = index_.find(key); it != index_.end()) {
        return it->second;
    }
    auto id = static_cast<AtomId>(atoms_.size());
    atoms_.push_back(atom);
    names_.push_back(key);
    index_.emplace(std::move(key), id);
    return id;
}

std::optional<AtomId> AtomTable::find(const Atom& atom) const { return find(atom.str()); }

std::optional<AtomId> AtomTable::find(std::string_view key) const {
    if (auto it = index_.find(std::string(key)); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

void Program::add_rule(Rule rule) { rules_.push_back(std::move(rule)); }

bool Program::has_classical_negation() const {
    auto neg = [](Literal l) { return l.negated(); };
    return std::ranges::any_of(rules_, [&](const Rule& r) {
        return (r.head && r.head->negated()) || std::ranges::any_of(r.pos, neg) ||
               std::ranges::any_of(r.neg, neg);
    });
}

std::string Program::literal_name(Literal l) const {
    return l.negated() ? "-" + atoms_.name(l.atom()) : atoms_.name(l.atom());
}

Interpretation::Interpretation(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::ranges::sort(lits_);
    auto dup = std::ranges::unique(lits_);
    lits_.erase(dup.begin(), dup.end());
}

bool Interpretation::contains(Literal l) const { return std::ranges::binary_search(lits_, l); }

LiteralMask::LiteralMask(std::size_t num_atoms, const Interpretation& x) : bits_(2 * num_atoms, 0) {
    for (Literal l : x) {
        if (l.code() >= bits_.size()) {
            bits_.resize(l.code() + 2, 0);
        }
        bits_[l.code()] = 1;
    }
}

bool is_consistent(const Interpretation& x) {
    // Sorted by code, so a literal and its complement are adjacent.
    const auto& v = x.literals();
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].atom() == v[i - 1].atom()) {
            return false;
        }
    }
    return true;
}

Interpretation pos_literals(const Program& p) {
    std::vector<Literal> out;
    for (const Rule& r : p.rules()) {
        out.insert(out.end(), r.pos.begin(), r.pos.end());
    }
    return Interpretation(std::move(out));
}

std::vector<Literal> head_literals(const Program& p) {
    std::vector<Literal> out;
    for (const Rule& r : p.rules()) {
        if (r.head) {
            out.push_back(*r.head);
        }
    }
    std::ranges::sort(out);
    auto dup = std::ranges::unique(out);
    out.erase(dup.begin(), dup.end());
    return out;
}

std::string render_literal(const Program& p, Literal l) { return p.literal_name(l); }

std::string render_interpretation(const Program& p, const Interpretation& x) {
    std::string out = "{";
    bool first = true;
    for (Literal l : x) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += p.literal_name(l);
    }
    return out + "}";
}

std::string render_rule(const Program& p, const Rule& r) {
    if (!r.head && r.pos.empty() && r.neg.empty()) {
        return "#false.";
    }
    std::string out;
    if (r.head) {
        out += p.literal_name(*r.head);
    }
    if (!r.pos.empty() || !r.neg.empty()) {
        out += r.head ? " :- " : ":- ";
        bool first = true;
        for (Literal l : r.pos) {
            out += first ? "" : ", ";
            out += p.literal_name(l);
            first = false;
        }
        for (Literal l : r.neg) {
            out += first ? "not " : ", not ";
            out += p.literal_name(l);
            first = false;
        }
    }
    return out + ".";
}

std::string render_program(const Program& p) {
    std::string out;
    for (const Rule& r : p.rules()) {
        out += render_rule(p, r);
        out += '\n';
    }
    return out;
}

bool equivalent(const Program& a, const Program& b) {
    if (a.rules().size() != b.rules().size()) {
        return false;
    }
    auto lines = [](const Program& p) {
        std::vector<std::string> out;
        out.reserve(p.rules().size());
        for (const Rule& r : p.rules()) {
            out.push_back(render_rule(p, r));
        }
        std::ranges::sort(out);
        return out;
    };
    return lines(a) == lines(b);
}

}  // namespace compasp
