#include "compasp/tightness.hpp"

#include "compasp/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace compasp {

std::size_t PositiveDependencyGraph::index_of(Literal l) const {
    auto it = std::ranges::lower_bound(vertices, l);
    if (it == vertices.end() || *it != l) {
        throw std::out_of_range("literal is not a vertex of the graph");
    }
    return static_cast<std::size_t>(it - vertices.begin());
}

bool PositiveDependencyGraph::has_edge(Literal from, Literal to) const {
    const auto& succ = successors[index_of(from)];
    return std::ranges::binary_search(succ, static_cast<std::uint32_t>(index_of(to)));
}

namespace {

// Vertex index per literal code, or -1 for literals outside the vertex set.
class VertexIndex {
public:
    explicit VertexIndex(const std::vector<Literal>& vertices) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            auto code = vertices[i].code();
            if (code >= index_.size()) {
                index_.resize(code + 1, -1);
            }
            index_[code] = static_cast<std::int64_t>(i);
        }
    }
    [[nodiscard]] std::int64_t operator[](Literal l) const {
        return l.code() < index_.size() ? index_[l.code()] : -1;
    }

private:
    std::vector<std::int64_t> index_;
};

PositiveDependencyGraph build_graph(const Program& p, std::vector<Literal> vertices) {
    PositiveDependencyGraph g;
    g.vertices = std::move(vertices);
    g.successors.resize(g.vertices.size());
    VertexIndex index(g.vertices);
    for (const Rule& r : p.rules()) {
        if (!r.head) {
            continue;  // the head of a constraint is not a literal
        }
        std::int64_t head = index[*r.head];
        if (head < 0 || std::ranges::any_of(r.pos, [&](Literal l) { return index[l] < 0; })) {
            continue;
        }
        for (Literal l : r.pos) {
            g.successors[static_cast<std::size_t>(index[l])].push_back(static_cast<std::uint32_t>(head));
        }
    }
    for (auto& succ : g.successors) {
        std::ranges::sort(succ);
        auto dup = std::ranges::unique(succ);
        succ.erase(dup.begin(), dup.end());
    }
    return g;
}

// Longest-path depth of every vertex, or nullopt if the graph has a cycle.
std::optional<std::vector<std::uint64_t>> depths(const PositiveDependencyGraph& g) {
    const std::size_t n = g.vertices.size();
    std::vector<std::uint32_t> indegree(n, 0);
    for (const auto& succ : g.successors) {
        for (auto v : succ) {
            ++indegree[v];
        }
    }
    std::vector<std::uint32_t> ready;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) {
            ready.push_back(v);
        }
    }
    std::vector<std::uint64_t> level(n, 0);
    std::size_t processed = 0;
    while (!ready.empty()) {
        std::uint32_t u = ready.back();
        ready.pop_back();
        ++processed;
        for (auto v : g.successors[u]) {
            level[v] = std::max(level[v], level[u] + 1);
            if (--indegree[v] == 0) {
                ready.push_back(v);
            }
        }
    }
    if (processed != n) {
        return std::nullopt;
    }
    return level;
}

CycleWitness find_cycle(const PositiveDependencyGraph& g) {
    enum : char { White, Grey, Black };
    const std::size_t n = g.vertices.size();
    std::vector<char> colour(n, White);
    std::vector<std::uint32_t> path;
    std::vector<std::size_t> next_edge;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (colour[root] != White) {
            continue;
        }
        path.assign(1, root);
        next_edge.assign(1, 0);
        colour[root] = Grey;
        while (!path.empty()) {
            std::uint32_t u = path.back();
            std::size_t& e = next_edge.back();
            if (e == g.successors[u].size()) {
                colour[u] = Black;
                path.pop_back();
                next_edge.pop_back();
                continue;
            }
            std::uint32_t v = g.successors[u][e++];
            if (colour[v] == Grey) {
                CycleWitness w;
                auto from = std::ranges::find(path, v);
                for (auto it = from; it != path.end(); ++it) {
                    w.cycle.push_back(g.vertices[*it]);
                }
                return w;
            }
            if (colour[v] == White) {
                colour[v] = Grey;
                path.push_back(v);
                next_edge.push_back(0);
            }
        }
    }
    throw std::logic_error("find_cycle called on an acyclic graph");
}

}  // namespace

PositiveDependencyGraph positive_dependency_graph(const Program& p, const Interpretation& x) {
    if (!is_consistent(x)) {
        throw InconsistentInterpretation();
    }
    return build_graph(p, x.literals());
}

// For finite X, a level mapping exists iff the positive dependency graph on X
// is acyclic. A cycle L1 -> ... -> Lk -> L1 would need
// lambda(L1) < ... < lambda(Lk) < lambda(L1). Conversely, in an acyclic
// graph the length of the longest path ending in L is a natural number that
// grows strictly along every edge, so ordinal levels are never needed.
TightnessResult tight_on(const Program& p, const Interpretation& x) {
    PositiveDependencyGraph g = positive_dependency_graph(p, x);
    auto level = depths(g);
    if (!level) {
        return find_cycle(g);
    }
    LevelMapping lambda;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        lambda.emplace_hint(lambda.end(), g.vertices[i], (*level)[i]);
    }
    return lambda;
}

bool verify_level_mapping(const Program& p, const Interpretation& x, const LevelMapping& lambda) {
    if (lambda.size() != x.size() ||
        !std::ranges::equal(lambda, x, [](const auto& entry, Literal l) { return entry.first == l; })) {
        throw std::invalid_argument("level mapping domain differs from the interpretation");
    }
    LiteralMask in(p.num_atoms(), x);
    for (const Rule& r : p.rules()) {
        if (!r.head || !in[*r.head] || !std::ranges::all_of(r.pos, [&](Literal l) { return in[l]; })) {
            continue;
        }
        const auto head_level = lambda.at(*r.head);
        if (std::ranges::any_of(r.pos, [&](Literal l) { return lambda.at(l) >= head_level; })) {
            return false;
        }
    }
    return true;
}

bool globally_tight(const Program& p) {
    std::vector<Literal> all;
    for (const Rule& r : p.rules()) {
        if (r.head) {
            all.push_back(*r.head);
        }
        all.insert(all.end(), r.pos.begin(), r.pos.end());
    }
    std::ranges::sort(all);
    auto dup = std::ranges::unique(all);
    all.erase(dup.begin(), dup.end());
    return depths(build_graph(p, std::move(all))).has_value();
}

bool disjoint_from_pos(const Program& p, const Interpretation& x) {
    Interpretation pos = pos_literals(p);
    return std::ranges::none_of(x, [&](Literal l) { return pos.contains(l); });
}

std::string render_cycle(const Program& p, const CycleWitness& w) {
    std::string out;
    for (Literal l : w.cycle) {
        out += p.literal_name(l) + " -> ";
    }
    if (!w.cycle.empty()) {
        out += p.literal_name(w.cycle.front());
    }
    return out;
}

std::string render_level_mapping(const Program& p, const LevelMapping& lambda) {
    std::string out;
    for (const auto& [l, level] : lambda) {
        out += p.literal_name(l) + "\t" + std::to_string(level) + "\n";
    }
    return out;
}

}  // namespace compasp
