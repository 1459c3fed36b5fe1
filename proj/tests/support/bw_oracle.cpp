#include "bw_oracle.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bw_oracle {

using compasp::AtomId;
using compasp::Interpretation;
using compasp::Literal;
using compasp::Program;
using compasp::Rule;

namespace {

using Bits = std::vector<char>;

std::int64_t last_int(const compasp::Atom& a) {
    return std::get<std::int64_t>(a.args.back());
}

class Search {
public:
    explicit Search(const Program& p) : p_(p), n_(p.num_atoms()) {
        if (p.has_classical_negation()) {
            throw std::invalid_argument("blocks-world programs have no classical negation");
        }
        occurs_.resize(n_);
        for (std::size_t i = 0; i < p.rules().size(); ++i) {
            const Rule& r = p.rules()[i];
            for (Literal l : r.pos) {
                occurs_[l.atom()].push_back(i);
            }
            if (r.head && is_moveop(r.head->atom())) {
                moveop_rules_.push_back(i);
            }
        }
        for (AtomId a = 0; a < n_; ++a) {
            const auto& atom = p.atoms().atom(a);
            if (atom.predicate == "time" && atom.args.size() == 1) {
                horizon_ = std::max(horizon_, last_int(atom));
            }
        }
        if (auto g = p.atoms().find(compasp::Atom{"goal", {}})) {
            goal_ = *g;
        } else {
            throw std::invalid_argument("program has no goal atom");
        }
    }

    Result run() {
        Bits m(n_, 0);
        dfs(0, m);
        std::sort(result_.answer_sets.begin(), result_.answer_sets.end());
        return result_;
    }

private:
    [[nodiscard]] bool is_moveop(AtomId a) const {
        const auto& atom = p_.atoms().atom(a);
        return atom.predicate == "moveop" && atom.args.size() == 3;
    }

    // Least model of the rules (moveop rules replaced by facts m) whose
    // negative bodies avoid s.
    Bits gamma(const Bits& s, const Bits& m) const {
        Bits out(n_, 0);
        std::vector<std::size_t> missing(p_.rules().size());
        std::vector<AtomId> queue;
        auto derive = [&](AtomId a) {
            if (!out[a]) {
                out[a] = 1;
                queue.push_back(a);
            }
        };
        for (AtomId a = 0; a < n_; ++a) {
            if (m[a]) {
                derive(a);
            }
        }
        for (std::size_t i = 0; i < p_.rules().size(); ++i) {
            const Rule& r = p_.rules()[i];
            missing[i] = SIZE_MAX;
            if (!r.head || is_moveop(r.head->atom())) {
                continue;
            }
            bool blocked = std::any_of(r.neg.begin(), r.neg.end(), [&](Literal l) { return s[l.atom()] != 0; });
            if (blocked) {
                continue;
            }
            missing[i] = r.pos.size();
            if (missing[i] == 0) {
                derive(r.head->atom());
            }
        }
        while (!queue.empty()) {
            AtomId a = queue.back();
            queue.pop_back();
            for (std::size_t i : occurs_[a]) {
                if (missing[i] != SIZE_MAX && missing[i] > 0 && --missing[i] == 0) {
                    derive(p_.rules()[i].head->atom());
                }
            }
        }
        return out;
    }

    Bits well_founded(const Bits& m) const {
        Bits k(n_, 0);
        for (;;) {
            Bits u = gamma(k, m);
            Bits k2 = gamma(u, m);
            if (k2 == k) {
                if (u != k) {
                    throw std::logic_error("program with fixed moves is not stratified");
                }
                return k;
            }
            k = std::move(k2);
        }
    }

    bool holds(const Rule& r, const Bits& x) const {
        return std::all_of(r.pos.begin(), r.pos.end(), [&](Literal l) { return x[l.atom()] != 0; }) &&
               std::none_of(r.neg.begin(), r.neg.end(), [&](Literal l) { return x[l.atom()] != 0; });
    }

    bool positive_constraints_hold(const Bits& x) const {
        for (const Rule& r : p_.rules()) {
            if (!r.head && r.neg.empty() && holds(r, x)) {
                return false;
            }
        }
        return true;
    }

    bool supported_moves(const std::vector<AtomId>& chosen, const Bits& x) const {
        for (AtomId a : chosen) {
            bool ok = false;
            for (std::size_t i : moveop_rules_) {
                const Rule& r = p_.rules()[i];
                if (r.head->atom() == a && holds(r, x)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                return false;
            }
        }
        return true;
    }

    std::vector<AtomId> candidates(std::int64_t t, const Bits& x) const {
        std::set<AtomId> out;
        for (std::size_t i : moveop_rules_) {
            const Rule& r = p_.rules()[i];
            AtomId h = r.head->atom();
            if (last_int(p_.atoms().atom(h)) != t) {
                continue;
            }
            bool ok = std::all_of(r.pos.begin(), r.pos.end(), [&](Literal l) { return x[l.atom()] != 0; });
            for (Literal l : r.neg) {
                if (p_.atoms().atom(l.atom()).predicate != "blocked_move" && x[l.atom()]) {
                    ok = false;
                }
            }
            if (ok) {
                out.insert(h);
            }
        }
        return {out.begin(), out.end()};
    }

    void dfs(std::int64_t t, const Bits& m) {
        ++result_.nodes;
        Bits x = well_founded(m);
        if (!positive_constraints_hold(x)) {
            return;
        }
        if (t > horizon_) {
            if (!x[goal_]) {
                return;
            }
            oracle::LitSet s;
            for (AtomId a = 0; a < n_; ++a) {
                if (x[a]) {
                    s.emplace(a, false);
                }
            }
            if (oracle::answer_set(p_, s)) {
                result_.answer_sets.push_back(oracle::from_set(s));
            }
            return;
        }
        std::vector<AtomId> cand = candidates(t, x);
        if (cand.size() > 20) {
            throw std::runtime_error("too many candidate moves for the oracle");
        }
        for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
            Bits m2 = m;
            std::vector<AtomId> chosen;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                if ((mask >> i) & 1u) {
                    m2[cand[i]] = 1;
                    chosen.push_back(cand[i]);
                }
            }
            if (!chosen.empty() && !supported_moves(chosen, well_founded(m2))) {
                continue;
            }
            dfs(t + 1, m2);
        }
    }

    const Program& p_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> occurs_;
    std::vector<std::size_t> moveop_rules_;
    std::int64_t horizon_ = 0;
    AtomId goal_ = 0;
    Result result_;
};

}  // namespace

Result answer_sets(const Program& p) {
    return Search(p).run();
}

Simulation simulate(const compasp::BlocksInstance& i, const compasp::Plan& plan) {
    std::map<std::string, std::string> on(i.initial.begin(), i.initial.end());
    auto clear = [&](const std::string& b) {
        return std::none_of(on.begin(), on.end(), [&](const auto& kv) { return kv.second == b; });
    };
    auto fail = [](std::string why) { return Simulation{false, std::move(why)}; };
    for (const auto& [t, moves] : plan.steps) {
        std::string at = "step " + std::to_string(t) + ": ";
        if (t < 0 || t >= i.horizon) {
            return fail(at + "outside the horizon");
        }
        std::set<std::string> moving;
        std::set<std::string> landing;
        for (const auto& [b, dest] : moves) {
            if (!on.contains(b)) {
                return fail(at + "unknown block " + b);
            }
            if (!moving.insert(b).second) {
                return fail(at + b + " moves twice");
            }
        }
        for (const auto& [b, dest] : moves) {
            if (!clear(b)) {
                return fail(at + b + " is not clear");
            }
            if (dest == b || on.at(b) == dest) {
                return fail(at + b + " moved onto " + dest + " where it cannot go");
            }
            if (dest != "table") {
                if (!on.contains(dest)) {
                    return fail(at + "unknown destination " + dest);
                }
                if (!clear(dest) || moving.contains(dest)) {
                    return fail(at + "destination " + dest + " is not available");
                }
                if (!landing.insert(dest).second) {
                    return fail(at + "two blocks land on " + dest);
                }
            }
        }
        for (const auto& [b, dest] : moves) {
            on[b] = dest;
        }
    }
    for (const auto& [b, o] : i.goal) {
        if (!on.contains(b) || on.at(b) != o) {
            return fail("goal on(" + b + "," + o + ") not reached");
        }
    }
    return {true, ""};
}

}  // namespace bw_oracle
