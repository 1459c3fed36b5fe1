#include "compasp/pipeline.hpp"

#include "compasp/semantics.hpp"

#include <stdexcept>

namespace compasp {

const char* to_string(Route r) {
    switch (r) {
        case Route::TightnessCertified: return "tightness-certified";
        case Route::ReductVerified: return "reduct-verified";
        case Route::Rejected: return "rejected";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

Literal restore(const RenamingMap& map, Literal l) {
    for (auto [atom, prime] : map.entries) {
        if (l.atom() == prime) {
            return Literal(atom, !l.negated());
        }
    }
    return l;
}

ModelOutcome classify(const Program& work, const RenamingMap& map, const Interpretation& x, bool cross_check) {
    ModelOutcome out;
    if (disjoint_from_pos(work, x)) {
        out.route = Route::TightnessCertified;
        out.pos_disjoint = true;
        LevelMapping zero;
        for (Literal l : x) {
            zero.emplace(restore(map, l), 0);
        }
        out.level_mapping = std::move(zero);
    } else {
        auto tight = tight_on(work, x);
        if (auto* lambda = std::get_if<LevelMapping>(&tight)) {
            out.route = Route::TightnessCertified;
            LevelMapping restored;
            for (const auto& [l, level] : *lambda) {
                restored.emplace(restore(map, l), level);
            }
            out.level_mapping = std::move(restored);
        } else {
            CycleWitness w = std::get<CycleWitness>(tight);
            for (Literal& l : w.cycle) {
                l = restore(map, l);
            }
            out.cycle = std::move(w);
            out.route = is_answer_set(work, x) ? Route::ReductVerified : Route::Rejected;
        }
    }
    if (cross_check && out.route == Route::TightnessCertified && !is_answer_set(work, x)) {
        throw std::logic_error("completion model certified by tightness is not an answer set");
    }
    out.model = restore_interpretation(map, x);
    return out;
}

}  // namespace

SolveReport find_answer_sets(const Program& p, std::size_t limit) {
    PipelineOptions options;
    options.model_limit = limit;
    return find_answer_sets(p, options);
}

SolveReport find_answer_sets(const Program& p, const PipelineOptions& options) {
    SolveReport report;
    std::optional<RenamedProgram> renamed;
    if (p.has_classical_negation()) {
        renamed = eliminate_classical_negation(p);
    }
    const Program& work = renamed ? renamed->program : p;
    const RenamingMap empty;
    const RenamingMap& map = renamed ? renamed->renaming : empty;

    auto t0 = Clock::now();
    CompletionTheory theory = completion(work);
    auto t1 = Clock::now();
    ClauseSet cnf = to_cnf(theory);
    auto t2 = Clock::now();
    report.timings.complete = t1 - t0;
    report.timings.clausify = t2 - t1;
    report.cnf_vars = static_cast<std::size_t>(cnf.num_vars());
    report.cnf_clauses = cnf.clauses.size();

    std::vector<int> projection(work.num_atoms());
    for (std::size_t i = 0; i < projection.size(); ++i) {
        projection[i] = static_cast<int>(i) + 1;
    }
    sat::ModelEnumerator models(cnf, std::move(projection), options.solver);
    for (;;) {
        if (options.model_limit != 0 && report.completion_models_seen >= options.model_limit) {
            break;
        }
        auto assignment = models.next();
        if (!assignment) {
            report.exhausted = true;
            break;
        }
        ++report.completion_models_seen;
        auto c0 = Clock::now();
        std::vector<Literal> atoms;
        for (AtomId a = 0; a < work.num_atoms(); ++a) {
            if ((*assignment)[a]) {
                atoms.emplace_back(a, false);
            }
        }
        ModelOutcome outcome = classify(work, map, Interpretation(std::move(atoms)), options.cross_check);
        if (outcome.route != Route::Rejected) {
            report.answer_sets.push_back(outcome.model);
        }
        report.models.push_back(std::move(outcome));
        report.timings.certify += Clock::now() - c0;
        if (options.answer_limit != 0 && report.answer_sets.size() >= options.answer_limit) {
            break;
        }
    }
    report.stats = models.stats();
    report.timings.search = report.stats.elapsed;
    return report;
}

bool CertificateReport::tight() const {
    return tightness.has_value() && std::holds_alternative<LevelMapping>(*tightness);
}

CertificateReport certify(const Program& p, const Interpretation& x) {
    CertificateReport c;
    c.consistent = is_consistent(x);
    c.closed = is_closed(p, x);
    c.supported = is_supported(p, x);
    c.answer_set = is_answer_set(p, x);
    if (c.consistent) {
        c.tightness = tight_on(p, x);
        try {
            RenamedProgram renamed = eliminate_classical_negation(p);
            Interpretation xr = rename_interpretation(renamed.renaming, x);
            c.completion_model = eval_completion(completion(renamed.program), xr);
        } catch (const std::invalid_argument&) {
            c.completion_model.reset();
        }
    }
    if (c.answer_set && !(c.closed && c.supported)) {
        c.contradictions.emplace_back("answer set that is not closed under and supported by the program");
    }
    if (c.consistent && c.tight() && c.answer_set != (c.closed && c.supported)) {
        c.contradictions.emplace_back("tight on X, but answer-set status differs from closed-and-supported");
    }
    if (c.tight() && c.completion_model && c.answer_set != *c.completion_model) {
        c.contradictions.emplace_back("tight on X, but answer-set status differs from completion-model status");
    }
    if (c.answer_set && c.completion_model && !*c.completion_model) {
        c.contradictions.emplace_back("answer set that does not satisfy the completion");
    }
    return c;
}

std::string render_certificate(const Program& p, const CertificateReport& c) {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    std::string out;
    out += std::string("consistent\t") + yes(c.consistent) + "\n";
    out += std::string("closed\t") + yes(c.closed) + "\n";
    out += std::string("supported\t") + yes(c.supported) + "\n";
    if (!c.tightness) {
        out += "tight\tn/a\n";
    } else if (const auto* lambda = std::get_if<LevelMapping>(&*c.tightness)) {
        out += "tight\tyes\n";
        for (const auto& [l, level] : *lambda) {
            out += "  " + p.literal_name(l) + "\t" + std::to_string(level) + "\n";
        }
    } else {
        out += "tight\tno (" + render_cycle(p, std::get<CycleWitness>(*c.tightness)) + ")\n";
    }
    out += std::string("answer set\t") + yes(c.answer_set) + "\n";
    out += std::string("completion model\t") + (c.completion_model ? yes(*c.completion_model) : "n/a") + "\n";
    for (const auto& msg : c.contradictions) {
        out += "INTERNAL ERROR\t" + msg + "\n";
    }
    return out;
}

}  // namespace compasp
