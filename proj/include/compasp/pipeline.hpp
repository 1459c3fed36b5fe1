#pragma once

// Answer sets through the completion.
//
// The program is completed, clausified and handed to the SAT solver. Every
// model of the completion is then certified: if the program is tight on it
// (trivially so when it avoids every positive body literal) it is an answer
// set without further checks; otherwise the reduct decides.

#include "compasp/completion.hpp"
#include "compasp/program.hpp"
#include "compasp/sat.hpp"
#include "compasp/tightness.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace compasp {

enum class Route { TightnessCertified, ReductVerified, Rejected };

[[nodiscard]] const char* to_string(Route r);

struct ModelOutcome {
    Interpretation model;  ///< in terms of the input program's literals
    Route route = Route::Rejected;
    bool pos_disjoint = false;                ///< certified by the fast path
    std::optional<LevelMapping> level_mapping; ///< set when tight_on succeeded
    std::optional<CycleWitness> cycle;         ///< set when tight_on failed
};

struct PhaseTimings {
    std::chrono::nanoseconds ground{0};
    std::chrono::nanoseconds complete{0};
    std::chrono::nanoseconds clausify{0};
    std::chrono::nanoseconds search{0};   ///< SAT search
    std::chrono::nanoseconds certify{0};  ///< per-model tightness / reduct checks
};

struct SolveReport {
    std::vector<Interpretation> answer_sets;
    std::vector<ModelOutcome> models;  ///< every completion model seen, in discovery order
    std::size_t completion_models_seen = 0;
    bool exhausted = false;  ///< all completion models were enumerated
    sat::SolveStats stats;
    PhaseTimings timings;
    std::size_t cnf_vars = 0;
    std::size_t cnf_clauses = 0;
};

struct PipelineOptions {
    /// Completion models to examine; 0 means all of them.
    std::size_t model_limit = 1;
    /// Stop once this many answer sets were accepted; 0 means no bound.
    std::size_t answer_limit = 0;
    /// Re-check tightness-certified models with the reduct and throw
    /// std::logic_error on disagreement.
#ifdef NDEBUG
    bool cross_check = false;
#else
    bool cross_check = true;
#endif
    sat::SolverOptions solver;
};

/// Examines the first `options.model_limit` completion models (all of them
/// when 0). Classical negation is compiled away and mapped back in the
/// output.
[[nodiscard]] SolveReport find_answer_sets(const Program& p, const PipelineOptions& options);
[[nodiscard]] SolveReport find_answer_sets(const Program& p, std::size_t limit = 1);

struct CertificateReport {
    bool consistent = false;
    bool closed = false;
    bool supported = false;
    std::optional<TightnessResult> tightness;  ///< unset when x is inconsistent
    bool answer_set = false;
    std::optional<bool> completion_model;  ///< unset when not applicable
    std::vector<std::string> contradictions;  ///< non-empty means an internal error

    [[nodiscard]] bool tight() const;
};

[[nodiscard]] CertificateReport certify(const Program& p, const Interpretation& x);
[[nodiscard]] std::string render_certificate(const Program& p, const CertificateReport& c);

}  // namespace compasp
