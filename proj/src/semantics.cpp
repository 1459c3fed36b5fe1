#include "compasp/semantics.hpp"

#include <algorithm>
#include <deque>

namespace compasp {

namespace {

bool body_holds(const Rule& r, const LiteralMask& in) {
    return std::ranges::all_of(r.pos, [&](Literal l) { return in[l]; }) &&
           std::ranges::none_of(r.neg, [&](Literal l) { return in[l]; });
}

bool neg_disjoint(const Rule& r, const LiteralMask& in) {
    return std::ranges::none_of(r.neg, [&](Literal l) { return in[l]; });
}

// Least set closed under the non-constraint rules selected by `use`,
// reading only their positive bodies. Linear in the size of the program.
template <class Pred>
std::vector<Literal> least_fixpoint(const Program& p, Pred use) {
    const auto& rules = p.rules();
    std::size_t codes = 2 * p.num_atoms();
    std::vector<std::vector<std::uint32_t>> watchers(codes);
    std::vector<std::uint32_t> missing(rules.size(), 0);
    std::vector<char> derived(codes, 0);
    std::deque<Literal> queue;
    std::vector<Literal> out;

    auto derive = [&](Literal l) {
        if (!derived[l.code()]) {
            derived[l.code()] = 1;
            out.push_back(l);
            queue.push_back(l);
        }
    };
    for (std::uint32_t i = 0; i < rules.size(); ++i) {
        const Rule& r = rules[i];
        if (!r.head || !use(r)) {
            continue;
        }
        std::vector<Literal> body = r.pos;
        std::ranges::sort(body);
        auto dup = std::ranges::unique(body);
        body.erase(dup.begin(), dup.end());
        missing[i] = static_cast<std::uint32_t>(body.size());
        for (Literal l : body) {
            watchers[l.code()].push_back(i);
        }
        if (body.empty()) {
            derive(*r.head);
        }
    }
    while (!queue.empty()) {
        Literal l = queue.front();
        queue.pop_front();
        for (std::uint32_t i : watchers[l.code()]) {
            if (--missing[i] == 0) {
                derive(*rules[i].head);
            }
        }
    }
    return out;
}

}  // namespace

Program reduct(const Program& p, const Interpretation& x) {
    if (!is_consistent(x)) {
        throw InconsistentInterpretation();
    }
    LiteralMask in(p.num_atoms(), x);
    std::vector<Rule> kept;
    for (const Rule& r : p.rules()) {
        if (neg_disjoint(r, in)) {
            kept.push_back(Rule{r.head, r.pos, {}});
        }
    }
    Program result;
    for (std::size_t i = 0; i < p.num_atoms(); ++i) {
        result.intern(p.atoms().atom(static_cast<AtomId>(i)));
    }
    for (auto& r : kept) {
        result.add_rule(std::move(r));
    }
    return result;
}

bool is_closed(const Program& p, const Interpretation& x) {
    LiteralMask in(p.num_atoms(), x);
    return std::ranges::all_of(p.rules(), [&](const Rule& r) {
        if (!body_holds(r, in)) {
            return true;
        }
        return r.head.has_value() && in[*r.head];
    });
}

bool is_supported(const Program& p, const Interpretation& x) {
    LiteralMask in(p.num_atoms(), x);
    std::vector<Literal> supported;
    for (const Rule& r : p.rules()) {
        if (r.head && in[*r.head] && body_holds(r, in)) {
            supported.push_back(*r.head);
        }
    }
    Interpretation sup(std::move(supported));
    return std::ranges::all_of(x, [&](Literal l) { return sup.contains(l); });
}

std::variant<Interpretation, Inconsistent> least_closed_set(const Program& p) {
    if (std::ranges::any_of(p.rules(), [](const Rule& r) { return !r.neg.empty(); })) {
        throw std::invalid_argument("least_closed_set requires a program without negation as failure");
    }
    Interpretation x(least_fixpoint(p, [](const Rule&) { return true; }));
    if (!is_consistent(x)) {
        return Inconsistent{};
    }
    return x;
}

bool is_answer_set(const Program& p, const Interpretation& x) {
    if (!is_consistent(x)) {
        return false;
    }
    LiteralMask in(p.num_atoms(), x);
    Interpretation fix(least_fixpoint(p, [&](const Rule& r) { return neg_disjoint(r, in); }));
    if (fix != x) {
        return false;
    }
    // Constraints of the reduct: their positive body must not be contained in x.
    return std::ranges::none_of(p.rules(), [&](const Rule& r) { return !r.head && body_holds(r, in); });
}

std::vector<Interpretation> enumerate_answer_sets_bruteforce(const Program& p, const BruteForceOptions& options) {
    std::vector<Literal> heads = head_literals(p);
    if (heads.size() > options.max_head_literals || heads.size() >= 63) {
        throw BoundExceeded("brute-force enumeration limited to " + std::to_string(options.max_head_literals) +
                            " head literals, program has " + std::to_string(heads.size()));
    }
    std::vector<Interpretation> out;
    const std::uint64_t n = std::uint64_t{1} << heads.size();
    std::vector<Literal> subset;
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        subset.clear();
        for (std::size_t i = 0; i < heads.size(); ++i) {
            if ((mask >> i) & 1u) {
                subset.push_back(heads[i]);
            }
        }
        Interpretation x(subset);
        if (is_consistent(x) && is_answer_set(p, x)) {
            out.push_back(std::move(x));
        }
    }
    std::ranges::sort(out);
    return out;
}

}  // namespace compasp
