#include "reslat/blowup.hpp"

#include <stdexcept>

#include "reslat/lattice.hpp"

namespace reslat {

namespace {

std::string fresh_id(const ResolutionGraph& g, const std::string& base) {
    for (int k = 1;; ++k) {
        std::string cand = base + std::to_string(k);
        if (!g.index_of(cand)) return cand;
    }
}

BlowupResult build(const ResolutionGraph& g, const std::vector<std::size_t>& parents,
                   const std::string& new_id) {
    RawGraph raw;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        long long e = g.euler(v);
        for (std::size_t p : parents)
            if (p == v) e -= 1;
        raw.vertices.push_back({g.id(v), e, 0});
    }
    raw.vertices.push_back({new_id, -1, 0});
    bool drop_parent_edge = parents.size() == 2;
    for (auto& [u, v] : g.edges()) {
        if (drop_parent_edge && ((static_cast<std::size_t>(u) == parents[0] &&
                                  static_cast<std::size_t>(v) == parents[1]) ||
                                 (static_cast<std::size_t>(u) == parents[1] &&
                                  static_cast<std::size_t>(v) == parents[0])))
            continue;
        raw.edges.push_back({g.id(u), g.id(v)});
    }
    for (std::size_t p : parents) raw.edges.push_back({g.id(p), new_id});

    BlowupResult res{make_graph(raw), new_id, 0, {}, parents};
    res.new_vertex = *res.graph.index_of(new_id);
    res.old_to_new.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        res.old_to_new[v] = *res.graph.index_of(g.id(v));
    return res;
}

}  // namespace

IntCycle BlowupResult::pullback(const IntCycle& l) const {
    if (l.size() != old_to_new.size())
        throw std::invalid_argument("pullback: cycle from a different graph");
    IntCycle out(graph.vertex_count());
    for (std::size_t v = 0; v < l.size(); ++v) out[old_to_new[v]] = l[v];
    long long acc = 0;
    for (std::size_t p : parents) acc += l[p];
    out[new_vertex] = acc;
    return out;
}

RatCycle BlowupResult::pullback(const RatCycle& l) const {
    if (l.size() != old_to_new.size())
        throw std::invalid_argument("pullback: cycle from a different graph");
    RatCycle out(graph.vertex_count());
    for (std::size_t v = 0; v < l.size(); ++v) out[old_to_new[v]] = l[v];
    Rat acc = 0;
    for (std::size_t p : parents) acc += l[p];
    out[new_vertex] = acc;
    return out;
}

BlowupResult blowup_edge(const ResolutionGraph& g, std::size_t u, std::size_t v,
                         const std::string& id_hint) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
        throw std::invalid_argument("blowup_edge: {" +
                                    (u < g.vertex_count() ? g.id(u) : std::string("?")) + "," +
                                    (v < g.vertex_count() ? g.id(v) : std::string("?")) +
                                    "} is not an edge");
    std::string id =
        !id_hint.empty() ? id_hint : fresh_id(g, g.id(u) + "." + g.id(v) + ".b");
    return build(g, {u, v}, id);
}

BlowupResult blowup_vertex(const ResolutionGraph& g, std::size_t v, const std::string& id_hint) {
    if (v >= g.vertex_count()) throw std::invalid_argument("blowup_vertex: no such vertex");
    std::string id = !id_hint.empty() ? id_hint : fresh_id(g, g.id(v) + ".b");
    return build(g, {v}, id);
}

IntCycle IteratedBlowup::pullback(const IntCycle& l) const {
    IntCycle cur = l;
    for (const auto& s : steps) cur = s.pullback(cur);
    return cur;
}

RatCycle IteratedBlowup::pullback(const RatCycle& l) const {
    RatCycle cur = l;
    for (const auto& s : steps) cur = s.pullback(cur);
    return cur;
}

IteratedBlowup iterated_blowup_chain(const ResolutionGraph& g, std::size_t v, int t) {
    if (t < 1) throw std::invalid_argument("iterated_blowup_chain: t must be >= 1");
    if (v >= g.vertex_count()) throw std::invalid_argument("iterated_blowup_chain: no such vertex");
    IteratedBlowup out;
    const ResolutionGraph* cur = &g;
    std::size_t at = v;
    std::string base = g.id(v) + ".c";
    for (int i = 1; i <= t; ++i) {
        std::string id = base + std::to_string(i);
        if (cur->index_of(id)) id = fresh_id(*cur, base + std::to_string(i) + "_");
        out.steps.push_back(blowup_vertex(*cur, at, id));
        out.chain_ids.push_back(out.steps.back().new_vertex_id);
        cur = &out.steps.back().graph;
        at = out.steps.back().new_vertex;
    }
    return out;
}

long long simple_base_multiplicity(const ResolutionGraph& g, const RatCycle& lp, std::size_t v,
                                   int step_cap, const SearchGuards& guards,
                                   InvariantCache* cache) {
    if (v >= g.vertex_count())
        throw std::invalid_argument("simple_base_multiplicity: no such vertex");
    if (!semigroup_member(g, lp, guards, cache))
        throw FormulaRangeError(
            "simple_base_multiplicity: class is not in the analytic semigroup");
    // A base point on E_v needs (l', E_v) < 0.
    RatCycle ev(g.vertex_count());
    ev[v] = 1;
    if (intersection_pairing(g, lp, ev) == 0) return 0;

    long long h1_base = h1_resolution_natural(g, lp, guards, cache);
    IteratedBlowup chain;
    const ResolutionGraph* cur = &g;
    std::size_t at = v;
    RatCycle cls = lp;
    long long t = 0;
    for (int i = 1; i <= step_cap; ++i) {
        std::string id = g.id(v) + ".c" + std::to_string(i);
        if (cur->index_of(id)) id.clear();  // fall back to default naming
        auto step = blowup_vertex(*cur, at, id);
        cls = step.pullback(cls);
        cls[step.new_vertex] += 1;  // composite class gains E_new each step
        long long h1_i = h1_resolution_natural(step.graph, cls, guards, cache);
        chain.steps.push_back(std::move(step));
        cur = &chain.steps.back().graph;
        at = chain.steps.back().new_vertex;
        if (h1_i == h1_base + i) {
            t = i;
            continue;
        }
        return t;
    }
    throw GuardLimitError("simple_base_multiplicity: step cap " + std::to_string(step_cap) +
                          " reached with h1 still increasing; no answer certified");
}

}  // namespace reslat
