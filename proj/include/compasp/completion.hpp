#pragma once

// Clark completion of finite ground programs without classical negation,
// and its clausal form.

#include "compasp/program.hpp"

#include <optional>
#include <string>
#include <vector>

namespace compasp {

/// One conjunct of a completed body: an atom or its negation.
struct Conjunct {
    AtomId atom = 0;
    bool positive = true;
    friend auto operator<=>(const Conjunct&, const Conjunct&) = default;
};

using Conjunction = std::vector<Conjunct>;

/// H <-> D1 | ... | Dk for every atom H, plus the bottom entry whose
/// disjuncts are the constraint bodies (each of which must be false).
class CompletionTheory {
public:
    CompletionTheory() = default;
    explicit CompletionTheory(std::vector<std::string> atom_names);

    [[nodiscard]] std::size_t num_atoms() const { return names_.size(); }
    [[nodiscard]] const std::string& atom_name(AtomId a) const { return names_[a]; }
    [[nodiscard]] const std::vector<Conjunction>& definition(AtomId a) const { return defs_[a]; }
    [[nodiscard]] const std::vector<Conjunction>& bottom() const { return bottom_; }

    void add_disjunct(AtomId head, Conjunction body);
    void add_constraint(Conjunction body);

    /// Sorts every conjunction and drops duplicate conjuncts and disjuncts.
    void normalize();

    [[nodiscard]] std::string str() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Conjunction>> defs_;
    std::vector<Conjunction> bottom_;
};

/// Fresh atoms standing for classically negated literals.
struct RenamingMap {
    std::vector<std::pair<AtomId, AtomId>> entries;  ///< (A, A') in the renamed program

    [[nodiscard]] bool empty() const { return entries.empty(); }
};

struct RenamedProgram {
    Program program;
    RenamingMap renaming;
};

/// Replaces every -A by a fresh atom A' and adds the constraint
/// ":- A, A'." per renamed atom. Atom identifiers of the input are kept.
[[nodiscard]] RenamedProgram eliminate_classical_negation(const Program& p);

/// Maps an interpretation of the input program onto the renamed program.
[[nodiscard]] Interpretation rename_interpretation(const RenamingMap& map, const Interpretation& x);

/// Inverse of rename_interpretation for sets of atoms of the renamed program.
[[nodiscard]] Interpretation restore_interpretation(const RenamingMap& map, const Interpretation& x);

/// Throws std::invalid_argument if `p` contains classical negation.
[[nodiscard]] CompletionTheory completion(const Program& p);

/// `x` is a set of (non-negated) atoms. True iff x satisfies every
/// equivalence and falsifies every constraint body.
[[nodiscard]] bool eval_completion(const CompletionTheory& t, const Interpretation& x);

/// Clauses over DIMACS-style signed variable indices (1-based).
struct ClauseSet {
    std::vector<std::vector<int>> clauses;
    std::vector<std::string> var_names;  ///< var_names[i] names variable i + 1

    [[nodiscard]] int num_vars() const { return static_cast<int>(var_names.size()); }
    friend bool operator==(const ClauseSet&, const ClauseSet&) = default;
};

/// Definitional clause form. Variable i + 1 is atom i; auxiliary variables
/// named "__auxN" follow the atoms. Restricted to the atom variables, the
/// models of the result are exactly the models of `t`.
[[nodiscard]] ClauseSet to_cnf(const CompletionTheory& t);

}  // namespace compasp
