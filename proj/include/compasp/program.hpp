#pragma once

// Ground logic programs: atoms, literals, rules and interpretations.
//
// A rule has the shape
//
//     Head :- L1, ..., Lm, not Lm+1, ..., not Ln.
//
// where every Li is a literal (an atom possibly under classical negation)
// and Head is either a literal or bottom (a constraint). Atoms are interned
// per Program so that the semantic, SAT and graph layers can work on dense
// integer identifiers.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace compasp {

/// A ground term: an integer or a (lowercase-initial) symbolic constant.
using Constant = std::variant<std::int64_t, std::string>;

std::string to_string(const Constant& c);

struct Atom {
    std::string predicate;
    std::vector<Constant> args;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const Atom&, const Atom&) = default;
};

using AtomId = std::uint32_t;

/// An atom together with a classical-negation flag, packed into one word.
class Literal {
public:
    constexpr Literal() = default;
    constexpr Literal(AtomId atom, bool negated) : code_((atom << 1) | (negated ? 1u : 0u)) {}

    static constexpr Literal from_code(std::uint32_t code) {
        Literal l;
        l.code_ = code;
        return l;
    }

    [[nodiscard]] constexpr AtomId atom() const { return code_ >> 1; }
    [[nodiscard]] constexpr bool negated() const { return (code_ & 1u) != 0; }
    [[nodiscard]] constexpr Literal complement() const { return from_code(code_ ^ 1u); }
    [[nodiscard]] constexpr std::uint32_t code() const { return code_; }

    friend constexpr auto operator<=>(Literal, Literal) = default;

private:
    std::uint32_t code_ = 0;
};

/// Bidirectional map between ground atoms and dense identifiers.
/// Identifiers are assigned in first-interning order.
class AtomTable {
public:
    AtomId intern(const Atom& atom);
    [[nodiscard]] std::optional<AtomId> find(const Atom& atom) const;
    [[nodiscard]] std::optional<AtomId> find(std::string_view key) const;
    [[nodiscard]] const Atom& atom(AtomId id) const { return atoms_[id]; }
    [[nodiscard]] const std::string& name(AtomId id) const { return names_[id]; }
    [[nodiscard]] std::size_t size() const { return atoms_.size(); }

private:
    std::vector<Atom> atoms_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> index_;
};

struct Rule {
    std::optional<Literal> head;  ///< nullopt is bottom: the rule is a constraint.
    std::vector<Literal> pos;
    std::vector<Literal> neg;

    [[nodiscard]] bool is_constraint() const { return !head.has_value(); }
    [[nodiscard]] bool is_fact() const { return head && pos.empty() && neg.empty(); }
    friend bool operator==(const Rule&, const Rule&) = default;
};

/// A finite list of ground rules over an owned atom table. Duplicate rules
/// are preserved for printing; semantic operations treat the list as a set.
class Program {
public:
    Program() = default;

    AtomId intern(const Atom& atom) { return atoms_.intern(atom); }
    void add_rule(Rule rule);

    [[nodiscard]] const AtomTable& atoms() const { return atoms_; }
    [[nodiscard]] const std::vector<Rule>& rules() const { return rules_; }
    [[nodiscard]] std::size_t num_atoms() const { return atoms_.size(); }
    [[nodiscard]] bool has_classical_negation() const;

    [[nodiscard]] std::string literal_name(Literal l) const;

private:
    AtomTable atoms_;
    std::vector<Rule> rules_;
};

/// A finite set of literals, kept sorted and duplicate-free.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::vector<Literal> lits);

    [[nodiscard]] bool contains(Literal l) const;
    [[nodiscard]] bool empty() const { return lits_.empty(); }
    [[nodiscard]] std::size_t size() const { return lits_.size(); }
    [[nodiscard]] const std::vector<Literal>& literals() const { return lits_; }
    [[nodiscard]] auto begin() const { return lits_.begin(); }
    [[nodiscard]] auto end() const { return lits_.end(); }

    friend bool operator==(const Interpretation&, const Interpretation&) = default;
    friend auto operator<=>(const Interpretation&, const Interpretation&) = default;

private:
    std::vector<Literal> lits_;
};

/// Dense membership test over literal codes; used internally by the
/// semantic and graph layers.
class LiteralMask {
public:
    LiteralMask(std::size_t num_atoms, const Interpretation& x);
    [[nodiscard]] bool operator[](Literal l) const {
        return l.code() < bits_.size() && bits_[l.code()] != 0;
    }

private:
    std::vector<char> bits_;
};

/// True iff no literal occurs together with its complement.
[[nodiscard]] bool is_consistent(const Interpretation& x);

/// The literals occurring without negation as failure in some rule body.
[[nodiscard]] Interpretation pos_literals(const Program& p);

/// Literals occurring as the head of some rule.
[[nodiscard]] std::vector<Literal> head_literals(const Program& p);

[[nodiscard]] std::string render_literal(const Program& p, Literal l);
[[nodiscard]] std::string render_interpretation(const Program& p, const Interpretation& x);
[[nodiscard]] std::string render_rule(const Program& p, const Rule& r);

/// One rule per line, each terminated by '.'.
[[nodiscard]] std::string render_program(const Program& p);

/// Structural equality up to rule order and atom numbering.
[[nodiscard]] bool equivalent(const Program& a, const Program& b);

}  // namespace compasp
