#include "reslat/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "reslat/lattice.hpp"

namespace reslat {

namespace {

void require_in_support(const ResolutionGraph& g, const IntCycle& z, std::size_t u,
                        const char* who) {
    if (u >= g.vertex_count()) throw std::invalid_argument(std::string(who) + ": no such vertex");
    if (z[u] == 0)
        throw std::invalid_argument(std::string(who) + ": vertex '" + g.id(u) +
                                    "' is not in the support of the cycle");
}

std::string evals_str(long long e1, long long e2, long long ep) {
    return "e(u')=" + std::to_string(e1) + " e(u'')=" + std::to_string(e2) +
           " e(u',u'')=" + std::to_string(ep);
}

}  // namespace

std::string to_string(G12Status s) {
    switch (s) {
        case G12Status::Forbidden: return "Forbidden";
        case G12Status::Guaranteed: return "Guaranteed";
        default: return "Undetermined";
    }
}

G12Report classify_pair(const ResolutionGraph& g, const IntCycle& z, std::size_t u1,
                        std::size_t u2, const SearchGuards& guards, InvariantCache* cache) {
    if (u1 == u2) throw std::invalid_argument("classify_pair: the two vertices must differ");
    require_in_support(g, z, u1, "classify_pair");
    require_in_support(g, z, u2, "classify_pair");

    G12Report rep;
    rep.pair_mode = true;
    rep.u1 = g.id(u1);
    rep.u2 = g.id(u2);
    rep.chi_z = chi(g, z);
    rep.h1_z = detail::h1_sum(g, z, guards, cache);

    bool reg = has_regular_canonical_section(g, z, guards, cache);
    bool ones = z[u1] == 1 && z[u2] == 1;
    rep.e_u1 = e_z(g, z, {static_cast<int>(u1)}, guards, cache);
    rep.e_u2 = e_z(g, z, {static_cast<int>(u2)}, guards, cache);
    rep.e_pair = e_z(g, z, {static_cast<int>(u1), static_cast<int>(u2)}, guards, cache);

    bool forbidden_e = rep.e_u1 >= 3;
    bool guaranteed_e =
        rep.e_u1 > 0 && rep.e_u1 == rep.e_u2 && rep.e_u2 == rep.e_pair && rep.e_u1 <= 2;

    rep.checks.push_back({"regular_canonical_section", reg, "chi(Z)=" + rat_str(rep.chi_z)});
    rep.checks.push_back({"coefficient_one", ones,
                          "Z_u'=" + std::to_string(z[u1]) + " Z_u''=" + std::to_string(z[u2])});
    rep.checks.push_back(
        {"e_at_least_3", forbidden_e, evals_str(rep.e_u1, rep.e_u2, rep.e_pair)});
    rep.checks.push_back(
        {"e_three_way_in_1_2", guaranteed_e, evals_str(rep.e_u1, rep.e_u2, rep.e_pair)});

    if (reg && ones && forbidden_e) {
        rep.status = G12Status::Forbidden;
        rep.status_reason = "no degree-2 pencil: e(u') >= 3 under a regular canonical section";
    } else if (reg && ones && guaranteed_e) {
        rep.status = G12Status::Guaranteed;
        rep.status_reason = "degree-2 pencil exists: equal e-values in {1,2}";
    } else {
        rep.status = G12Status::Undetermined;
        if (!reg) rep.status_reason = "check failed: regular_canonical_section";
        else if (!ones) rep.status_reason = "check failed: coefficient_one";
        else rep.status_reason = "check failed: e-values match neither regime";
    }

    rep.necessary_conditions = necessary_conditions_pair(g, z, u1, u2, guards, cache);
    return rep;
}

G12Report classify_single(const ResolutionGraph& g, const IntCycle& z, std::size_t u,
                          const SearchGuards& guards, InvariantCache* cache) {
    require_in_support(g, z, u, "classify_single");

    G12Report rep;
    rep.pair_mode = false;
    rep.u1 = g.id(u);
    rep.chi_z = chi(g, z);
    rep.h1_z = detail::h1_sum(g, z, guards, cache);

    bool reg = has_regular_canonical_section(g, z, guards, cache);
    bool one = z[u] == 1;
    rep.e_u1 = e_z(g, z, {static_cast<int>(u)}, guards, cache);
    bool forbidden_e = rep.e_u1 >= 3;

    rep.checks.push_back({"regular_canonical_section", reg, "chi(Z)=" + rat_str(rep.chi_z)});
    rep.checks.push_back({"coefficient_one", one, "Z_u=" + std::to_string(z[u])});
    rep.checks.push_back({"e_at_least_3", forbidden_e, "e(u)=" + std::to_string(rep.e_u1)});

    if (reg && one && forbidden_e) {
        rep.status = G12Status::Forbidden;
        rep.status_reason = "no degree-2 pencil: e(u) >= 3 under a regular canonical section";
    } else {
        rep.status = G12Status::Undetermined;
        if (!reg) rep.status_reason = "check failed: regular_canonical_section";
        else if (!one) rep.status_reason = "check failed: coefficient_one";
        else rep.status_reason = "check failed: e(u) < 3 (no guaranteed regime for one vertex)";
    }

    rep.necessary_conditions = necessary_conditions_single(g, z, u, guards, cache);
    return rep;
}

std::vector<ConditionEntry> necessary_conditions_pair(const ResolutionGraph& g, const IntCycle& z,
                                                      std::size_t u1, std::size_t u2,
                                                      const SearchGuards& guards,
                                                      InvariantCache* cache) {
    require_in_support(g, z, u1, "necessary_conditions_pair");
    require_in_support(g, z, u2, "necessary_conditions_pair");
    bool applicable = has_regular_canonical_section(g, z, guards, cache) && z[u1] == 1 &&
                      z[u2] == 1 &&
                      e_z(g, z, {static_cast<int>(u1)}, guards, cache) >= 3;

    std::vector<ConditionEntry> out;
    bool ends = g.valency(u1) == 1 && g.valency(u2) == 1;
    out.push_back({"end_vertices", ends,
                   applicable,
                   "valency(u')=" + std::to_string(g.valency(u1)) +
                       " valency(u'')=" + std::to_string(g.valency(u2))});
    if (!ends) {
        out.push_back({"equal_neighbor_coefficients", false, applicable, "n/a: not end vertices"});
        out.push_back({"e_equals_neighbor_coeff_minus_one", false, applicable,
                       "n/a: not end vertices"});
        return out;
    }
    std::size_t w1 = g.adjacency()[u1][0];
    std::size_t w2 = g.adjacency()[u2][0];
    out.push_back({"equal_neighbor_coefficients", z[w1] == z[w2], applicable,
                   "Z_w'=" + std::to_string(z[w1]) + " Z_w''=" + std::to_string(z[w2])});
    long long e1 = e_z(g, z, {static_cast<int>(u1)}, guards, cache);
    out.push_back({"e_equals_neighbor_coeff_minus_one", e1 == z[w1] - 1, applicable,
                   "e(u')=" + std::to_string(e1) + " Z_w'-1=" + std::to_string(z[w1] - 1)});
    return out;
}

std::vector<ConditionEntry> necessary_conditions_single(const ResolutionGraph& g,
                                                        const IntCycle& z, std::size_t u,
                                                        const SearchGuards& guards,
                                                        InvariantCache* cache) {
    require_in_support(g, z, u, "necessary_conditions_single");
    bool applicable = has_regular_canonical_section(g, z, guards, cache) && z[u] == 1 &&
                      e_z(g, z, {static_cast<int>(u)}, guards, cache) >= 3;

    std::vector<ConditionEntry> out;
    RatCycle ev(g.vertex_count());
    ev[u] = 1;
    Rat parity = intersection_pairing(g, RatCycle(z) - g.canonical_cycle(), ev);
    bool par_ok = is_integer(parity) && mpz_even_p(parity.get_num().get_mpz_t());
    out.push_back({"even_pairing_with_Z_minus_ZK", par_ok, applicable,
                   "(Z-Z_K,E_u)=" + rat_str(parity)});

    long long e1 = e_z(g, z, {static_cast<int>(u)}, guards, cache);
    IntCycle zmeu = z - unit_cycle(z.size(), u);
    long long half_pairing_twice = intersection_pairing(g, zmeu, unit_cycle(z.size(), u));
    bool e_half = 2 * e1 == half_pairing_twice;
    out.push_back({"e_equals_half_pairing", e_half, applicable,
                   "2e(u)=" + std::to_string(2 * e1) +
                       " (Z-E_u,E_u)=" + std::to_string(half_pairing_twice)});

    bool even_nb = true;
    std::string vals;
    for (int w : g.adjacency()[u]) {
        if (z[w] == 0) continue;
        if (z[w] % 2 != 0) even_nb = false;
        if (!vals.empty()) vals += " ";
        vals += "Z_" + g.id(w) + "=" + std::to_string(z[w]);
    }
    out.push_back({"even_neighbor_coefficients", even_nb, applicable,
                   vals.empty() ? "no neighbors in support" : vals});
    return out;
}

namespace {

TowerLevel make_level(const ResolutionGraph& g, const IntCycle& cyc, int t, std::size_t w1,
                      std::size_t w2, bool have_w2, std::size_t u1, std::size_t u2, bool pair_mode,
                      const SearchGuards& guards, InvariantCache* cache) {
    TowerLevel lv;
    lv.t = t;
    lv.cycle = cyc;
    lv.h1 = detail::h1_sum(g, cyc, guards, cache);
    lv.coeff_w1 = cyc[w1];
    lv.coeff_w2 = have_w2 ? cyc[w2] : -1;
    if (cyc[u1] != 0 && (!pair_mode || cyc[u2] != 0)) {
        lv.e_u1 = e_z(g, cyc, {static_cast<int>(u1)}, guards, cache);
        if (pair_mode) {
            lv.e_u2 = e_z(g, cyc, {static_cast<int>(u2)}, guards, cache);
            lv.e_pair =
                e_z(g, cyc, {static_cast<int>(u1), static_cast<int>(u2)}, guards, cache);
        }
    }
    return lv;
}

CycleTower run_tower(const ResolutionGraph& g, const IntCycle& z, std::size_t subtract_at,
                     long long level_cap, std::size_t w1, std::size_t w2, bool have_w2,
                     std::size_t u1, std::size_t u2, bool pair_mode, const SearchGuards& guards,
                     InvariantCache* cache) {
    CycleTower tower;
    tower.levels.push_back(
        make_level(g, z, 1, w1, w2, have_w2, u1, u2, pair_mode, guards, cache));
    for (int t = 2; t <= level_cap; ++t) {
        const IntCycle& prev = tower.levels.back().cycle;
        if (prev[subtract_at] == 0) {
            tower.stop_reason = "coefficient exhausted at the subtraction vertex";
            return tower;
        }
        IntCycle next_input = prev - unit_cycle(z.size(), subtract_at);
        IntCycle next;
        try {
            next = cohomological_cycle(g, next_input, guards, cache);
        } catch (const NonUniqueCycleError& e) {
            tower.stop_reason = std::string("non-unique cohomological cycle: ") + e.what();
            return tower;
        }
        tower.levels.push_back(
            make_level(g, next, t, w1, w2, have_w2, u1, u2, pair_mode, guards, cache));
        if (next.is_zero()) {
            tower.stop_reason = "collapsed to zero";
            return tower;
        }
        if (!support_connected(g, next)) {
            tower.stop_reason = "support disconnected";
            return tower;
        }
        if (tower.levels.back().e_u1 < 0) {
            tower.stop_reason = "tracked vertex left the support";
            return tower;
        }
    }
    tower.stop_reason = "reached level cap";
    return tower;
}

}  // namespace

CycleTower cycle_tower_pair(const ResolutionGraph& g, const IntCycle& z, std::size_t u1,
                            std::size_t u2, const SearchGuards& guards, InvariantCache* cache) {
    require_in_support(g, z, u1, "cycle_tower_pair");
    require_in_support(g, z, u2, "cycle_tower_pair");
    if (g.valency(u1) != 1)
        throw std::invalid_argument("cycle_tower_pair: u' must be an end vertex");
    std::size_t w1 = g.adjacency()[u1][0];
    bool have_w2 = g.valency(u2) == 1;
    std::size_t w2 = have_w2 ? g.adjacency()[u2][0] : 0;
    long long cap = std::max<long long>(1, z[w1] - 1);
    return run_tower(g, z, w1, cap, w1, w2, have_w2, u1, u2, /*pair=*/true, guards, cache);
}

CycleTower cycle_tower_single(const ResolutionGraph& g, const IntCycle& z, std::size_t u,
                              std::size_t u_neighbor, const SearchGuards& guards,
                              InvariantCache* cache) {
    require_in_support(g, z, u, "cycle_tower_single");
    if (!g.has_edge(u, u_neighbor))
        throw std::invalid_argument("cycle_tower_single: the vertices are not adjacent");
    long long cap = std::max<long long>(1, z[u_neighbor]);
    return run_tower(g, z, u_neighbor, cap, u_neighbor, 0, false, u, u, /*pair=*/false, guards,
                     cache);
}

// ---------------------------------------------------------------------------
// Census machinery.

namespace {

struct LightTree {
    std::vector<long long> euler;
    std::vector<std::pair<int, int>> edges;
};

std::string ahu_from(const LightTree& t, const std::vector<std::vector<int>>& adj, int v,
                     int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(ahu_from(t, adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(t.euler[v]);
    for (auto& k : kids) s += k;
    s += ")";
    return s;
}

std::string canonical_code(const LightTree& t) {
    const std::size_t n = t.euler.size();
    std::vector<std::vector<int>> adj(n);
    for (auto& [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::string best;
    for (std::size_t r = 0; r < n; ++r) {
        std::string code = ahu_from(t, adj, static_cast<int>(r), -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

// Negative definiteness of the tree form via integer Bareiss minors; cheap
// pre-filter before full graph construction.
bool negdef_light(const LightTree& t) {
    const std::size_t n = t.euler.size();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = to_mpz(t.euler[i]);
    for (auto& [u, v] : t.edges) a[u][v] = a[v][u] = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            if (a[k - 1][k - 1] == 0) return false;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    a[i][j] = (a[i][j] * a[k - 1][k - 1] - a[i][k - 1] * a[k - 1][j]) / prev;
            prev = a[k - 1][k - 1];
        }
        int want = (k % 2 == 0) ? -1 : 1;
        if (sgn(a[k][k]) != want) return false;
    }
    return true;
}

std::string census_id(int i) {
    std::string s = "a";
    if (i < 10) s += "0";
    return s + std::to_string(i);
}

ResolutionGraph build_graph(const LightTree& t) {
    RawGraph raw;
    for (std::size_t i = 0; i < t.euler.size(); ++i)
        raw.vertices.push_back({census_id(static_cast<int>(i)), t.euler[i], 0});
    for (auto& [u, v] : t.edges)
        raw.edges.push_back({census_id(u), census_id(v)});
    return make_graph(raw);
}

// Fresh brute-force e-value: component-summed h^1 with plain chi evaluation,
// no shared kernel, no cache. Used to re-verify every emitted instance.
long long direct_h1(const ResolutionGraph& g, const IntCycle& z) {
    long long total = 0;
    for (const auto& comp : support_components(g, z)) {
        IntCycle zc(z.size());
        for (int v : comp) zc[v] = z[v];
        std::optional<Rat> best;
        IntCycle cur(z.size());
        for (;;) {
            if (!cur.is_zero()) {
                Rat c = chi(g, cur);
                if (!best || c < *best) best = c;
            }
            std::size_t pos = z.size();
            bool done = false;
            while (pos > 0) {
                --pos;
                if (cur[pos] < zc[pos]) {
                    cur[pos] += 1;
                    break;
                }
                if (pos == 0) {
                    done = true;
                    break;
                }
                cur[pos] = 0;
            }
            if (done) break;
        }
        total += to_long(1 - *best);
    }
    return total;
}

long long direct_e(const ResolutionGraph& g, const IntCycle& z, const std::vector<int>& j) {
    IntCycle restricted = z;
    for (int v : j) restricted[v] = 0;
    return direct_h1(g, z) - direct_h1(g, restricted);
}

}  // namespace

std::string canonical_tree_code(const ResolutionGraph& g) {
    LightTree t;
    t.euler.assign(g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) t.euler[v] = g.euler(v);
    for (auto& [u, v] : g.edges()) t.edges.push_back({u, v});
    return canonical_code(t);
}

EnumStats enumerate_instances(const EnumParams& params,
                              const std::function<bool(const EnumInstance&)>& sink) {
    if (params.max_vertices < 1 || params.euler_min > params.euler_max || params.coeff_cap < 1)
        throw std::invalid_argument("enumerate_instances: bad parameters");
    EnumStats stats;
    const bool want_f = !params.target || *params.target == G12Status::Forbidden;
    const bool want_g = !params.target || *params.target == G12Status::Guaranteed;
    const bool want_u = !params.target || *params.target == G12Status::Undetermined;
    const bool need_regular = !want_u;  // both theorem regimes require the section

    bool stop = false;

    auto examine = [&](const LightTree& t) {
        if (stats.graphs_examined >= params.max_graphs) {
            stats.guard_hit = true;
            stats.guard_reason = "max_graphs";
            stop = true;
            return;
        }
        ++stats.graphs_examined;
        ResolutionGraph g = build_graph(t);
        InvariantCache cache;

        long long pg;
        try {
            pg = geometric_genus(g, params.search, &cache);
        } catch (const GuardLimitError&) {
            ++stats.graphs_guard_skipped;
            return;
        }
        if (pg > 0) ++stats.graphs_nonrational;
        // Both decided regimes force chi(Z) < 0, hence a non-rational graph;
        // Forbidden additionally needs h1 >= 3 somewhere, so p_g >= 3.
        if (need_regular) {
            if (pg == 0) return;
            if (!want_g && pg < 3) return;
        }

        const std::size_t n = g.vertex_count();
        IntCycle z(n);
        for (std::size_t v = 0; v < n; ++v) z[v] = 1;
        bool more = true;
        while (more && !stop) {
            ++stats.cycles_tested;
            bool usable = true;
            try {
                if (need_regular) {
                    // chi(Z) < chi(0) = 0 is necessary for the section test.
                    usable = chi(g, z) < 0 && has_regular_canonical_section(g, z, params.search,
                                                                            &cache);
                }
            } catch (const GuardLimitError&) {
                usable = false;
            }
            if (usable) {
                std::vector<std::size_t> ones;
                for (std::size_t v = 0; v < n; ++v)
                    if (z[v] == 1) ones.push_back(v);
                auto classify_and_emit = [&](std::size_t a, std::size_t b, bool pair) {
                    if (stop) return;
                    G12Report rep;
                    try {
                        rep = pair ? classify_pair(g, z, a, b, params.search, &cache)
                                   : classify_single(g, z, a, params.search, &cache);
                    } catch (const GuardLimitError&) {
                        return;
                    }
                    ++stats.instances_classified;
                    bool match = !params.target || rep.status == *params.target;
                    if (!match) return;
                    // Re-verify the e-values from scratch before emitting.
                    long long e1 = direct_e(g, z, {static_cast<int>(a)});
                    if (e1 != rep.e_u1)
                        throw std::logic_error("census: e-value re-verification failed");
                    if (pair) {
                        long long e2 = direct_e(g, z, {static_cast<int>(b)});
                        long long ep =
                            direct_e(g, z, {static_cast<int>(a), static_cast<int>(b)});
                        if (e2 != rep.e_u2 || ep != rep.e_pair)
                            throw std::logic_error("census: e-value re-verification failed");
                    }
                    ++stats.emitted;
                    EnumInstance inst{g, z, g.id(a), pair ? g.id(b) : std::string(), rep};
                    if (!sink(inst)) stop = true;
                    if (stats.emitted >= params.max_emitted) {
                        stats.guard_hit = true;
                        stats.guard_reason = "max_emitted";
                        stop = true;
                    }
                };
                if (params.pairs)
                    for (std::size_t i = 0; i < ones.size() && !stop; ++i)
                        for (std::size_t j = 0; j < ones.size() && !stop; ++j)
                            if (i != j) classify_and_emit(ones[i], ones[j], true);
                if (params.singles)
                    for (std::size_t i = 0; i < ones.size() && !stop; ++i)
                        classify_and_emit(ones[i], 0, false);
            }
            // next cycle in [1, cap]^n
            std::size_t pos = n;
            more = false;
            while (pos > 0) {
                --pos;
                if (z[pos] < params.coeff_cap) {
                    z[pos] += 1;
                    more = true;
                    break;
                }
                if (pos == 0) break;
                z[pos] = 1;
            }
        }
    };

    // Grow decorated trees level by level, deduplicating by canonical code.
    std::map<std::string, LightTree> level;
    for (long long e = params.euler_min; e <= params.euler_max; ++e) {
        LightTree t{{e}, {}};
        level.emplace(canonical_code(t), std::move(t));
    }
    for (int n = 1; n <= params.max_vertices && !stop; ++n) {
        stats.trees_generated += level.size();
        for (auto& [code, t] : level) {
            if (stop) break;
            if (!negdef_light(t)) continue;
            ++stats.graphs_negdef;
            examine(t);
        }
        if (n == params.max_vertices || stop) break;
        std::map<std::string, LightTree> next;
        for (auto& [code, t] : level) {
            for (std::size_t v = 0; v < t.euler.size(); ++v) {
                for (long long e = params.euler_min; e <= params.euler_max; ++e) {
                    LightTree grown = t;
                    grown.euler.push_back(e);
                    grown.edges.push_back({static_cast<int>(v),
                                           static_cast<int>(grown.euler.size() - 1)});
                    std::string c = canonical_code(grown);
                    next.emplace(std::move(c), std::move(grown));
                }
            }
        }
        level = std::move(next);
    }
    return stats;
}

}  // namespace reslat
