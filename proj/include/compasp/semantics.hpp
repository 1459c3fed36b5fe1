#pragma once

// Answer-set semantics of ground programs: reduct, closedness,
// supportedness and the least-fixpoint characterisation of answer sets for
// programs without negation as failure.

#include "compasp/program.hpp"

#include <stdexcept>
#include <variant>
#include <vector>

namespace compasp {

class InconsistentInterpretation : public std::invalid_argument {
public:
    InconsistentInterpretation() : std::invalid_argument("interpretation contains complementary literals") {}
};

/// The rules Head :- L1..Lm for every rule whose negated body is disjoint
/// from `x`. Shares the atom table of `p`. Throws InconsistentInterpretation.
[[nodiscard]] Program reduct(const Program& p, const Interpretation& x);

[[nodiscard]] bool is_closed(const Program& p, const Interpretation& x);
[[nodiscard]] bool is_supported(const Program& p, const Interpretation& x);

/// Marker returned when the least fixpoint contains a complementary pair.
struct Inconsistent {
    friend bool operator==(Inconsistent, Inconsistent) = default;
};

/// Least set closed under the non-constraint rules of a program without
/// negation as failure. Throws std::invalid_argument if `p` uses `not`.
[[nodiscard]] std::variant<Interpretation, Inconsistent> least_closed_set(const Program& p);

[[nodiscard]] bool is_answer_set(const Program& p, const Interpretation& x);

struct BruteForceOptions {
    std::size_t max_head_literals = 20;
};

class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every answer set, found by checking each subset of the head literals.
/// Results are sorted. Throws BoundExceeded past the configured bound.
[[nodiscard]] std::vector<Interpretation> enumerate_answer_sets_bruteforce(const Program& p,
                                                                           const BruteForceOptions& options = {});

}  // namespace compasp
