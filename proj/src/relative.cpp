#include "reslat/relative.hpp"

#include <algorithm>
#include <stdexcept>

#include "reslat/lattice.hpp"

namespace reslat {

namespace {

// Odometer over [0, upper] in lexicographic order (first vertex most
// significant). Plain version for the relative formulas, where the inner
// h1 oracle dominates the cost anyway.
template <class F>
void for_each_in_box(const IntCycle& upper, F&& f) {
    IntCycle cur(upper.size());
    for (;;) {
        if (!f(cur)) return;
        std::size_t pos = upper.size();
        while (pos > 0) {
            --pos;
            if (cur[pos] < upper[pos]) {
                cur[pos] += 1;
                break;
            }
            if (pos == 0) return;
            cur[pos] = 0;
        }
    }
}

}  // namespace

SplitConfig make_split(const ResolutionGraph& g, const std::vector<int>& v1, const IntCycle& z) {
    if (z.size() != g.vertex_count())
        throw std::invalid_argument("make_split: cycle indexed by wrong vertex set");
    if (!z.is_effective()) throw std::invalid_argument("make_split: cycle is not effective");
    SplitConfig cfg{g, v1, z, IntCycle(z.size()), IntCycle(z.size()), {}};
    std::sort(cfg.v1.begin(), cfg.v1.end());
    cfg.v1.erase(std::unique(cfg.v1.begin(), cfg.v1.end()), cfg.v1.end());
    std::vector<char> in(z.size(), 0);
    for (int v : cfg.v1) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
            throw std::invalid_argument("make_split: vertex index out of range");
        in[v] = 1;
    }
    for (std::size_t v = 0; v < z.size(); ++v) {
        if (in[v]) cfg.z1[v] = z[v];
        else cfg.z2[v] = z[v];
    }
    if (!cfg.v1.empty()) cfg.t1 = induced_subgraph(g, cfg.v1);
    return cfg;
}

std::vector<RatCycle> restrict_chern(const SplitConfig& cfg, const RatCycle& lp) {
    if (!in_dual_lattice(cfg.graph, lp))
        throw std::invalid_argument("restrict_chern: class not in L'");
    auto coords = dual_coordinates(cfg.graph, lp);  // l' = sum a_v E*_v
    std::vector<RatCycle> out;
    for (const auto& comp : cfg.t1) {
        RatCycle r(comp.graph.vertex_count());
        for (std::size_t i = 0; i < comp.orig_index.size(); ++i) {
            const Rat& a = coords[comp.orig_index[i]];
            if (a == 0) continue;
            const RatCycle& dual = comp.graph.dual(i);
            for (std::size_t j = 0; j < r.size(); ++j) r[j] += a * dual[j];
        }
        out.push_back(std::move(r));
    }
    return out;
}

IntCycle truncate_cycle(const SplitConfig& cfg, const IntCycle& z_minus_l) {
    if (z_minus_l.size() != cfg.z.size())
        throw std::invalid_argument("truncate_cycle: cycle indexed by wrong vertex set");
    return cmin(z_minus_l, cfg.z1);
}

InnerH1 default_inner_h1(const SplitConfig& cfg, const RatCycle& lp, const SearchGuards& guards,
                         InvariantCache* cache) {
    if (!in_dual_lattice(cfg.graph, lp))
        throw std::invalid_argument("default_inner_h1: class not in L'");
    return [&cfg, lp, guards, cache](const IntCycle& l) -> long long {
        IntCycle w = truncate_cycle(cfg, cfg.z - l);
        // Coefficients of R1(l - l') in the E*-basis: (l' - l, E_v).
        RatCycle shifted = lp - l;
        auto coeff = dual_coordinates(cfg.graph, shifted);
        long long total = 0;
        for (const auto& comp : cfg.t1) {
            IntCycle wc(comp.graph.vertex_count());
            bool any = false;
            for (std::size_t i = 0; i < comp.orig_index.size(); ++i) {
                wc[i] = w[comp.orig_index[i]];
                if (wc[i] != 0) any = true;
            }
            if (!any) continue;
            bool class_zero = true;
            RatCycle m(comp.graph.vertex_count());
            for (std::size_t i = 0; i < comp.orig_index.size(); ++i) {
                Rat c = -coeff[comp.orig_index[i]];  // m' = R1(l - l')
                if (c == 0) continue;
                class_zero = false;
                const RatCycle& dual = comp.graph.dual(i);
                for (std::size_t j = 0; j < m.size(); ++j) m[j] += c * dual[j];
            }
            std::string key = comp.graph.fingerprint() + "|relinner|" + cycle_str(wc) + ";" +
                              cycle_str(m);
            if (cache) {
                if (auto v = cache->get(key)) {
                    total += *v;
                    continue;
                }
            }
            long long part;
            if (class_zero) {
                part = detail::h1_sum(comp.graph, wc, guards, cache);
            } else {
                part = h1_natural(comp.graph, wc, m, guards, cache);
            }
            if (cache) cache->put(key, part);
            total += part;
        }
        return total;
    };
}

RelativeDominance relative_dominant(const SplitConfig& cfg, const RatCycle& lp,
                                    const InnerH1& inner, const SearchGuards& guards) {
    if (!lipman_cone_member(cfg.graph, -lp).member)
        throw std::invalid_argument("relative_dominant: -l' is not in the Lipman cone");
    detail::box_volume_checked(IntCycle(cfg.z.size()), cfg.z, guards.max_box_points,
                               "relative_dominant");
    Rat lhs = chi(cfg.graph, -lp) - to_rat(inner(IntCycle(cfg.z.size())));
    RelativeDominance out;
    out.dominant = true;
    for_each_in_box(cfg.z, [&](const IntCycle& l) {
        if (l.is_zero()) return true;
        Rat rhs = chi(cfg.graph, -lp + l) - to_rat(inner(l));
        if (!(lhs < rhs)) {
            out.dominant = false;
            out.violating = l;
            return false;
        }
        return true;
    });
    return out;
}

long long relative_h1(const SplitConfig& cfg, const RatCycle& lp, const InnerH1& inner,
                      const SearchGuards& guards) {
    if (!in_dual_lattice(cfg.graph, lp))
        throw std::invalid_argument("relative_h1: class not in L'");
    detail::box_volume_checked(IntCycle(cfg.z.size()), cfg.z, guards.max_box_points,
                               "relative_h1");
    std::optional<Rat> best;
    for_each_in_box(cfg.z, [&](const IntCycle& l) {
        Rat term = chi(cfg.graph, -lp + l) - to_rat(inner(l));
        if (!best || term < *best) best = term;
        return true;
    });
    return to_long(chi(cfg.graph, -lp) - *best);
}

long long relative_eca_dim(const SplitConfig& cfg, const RatCycle& lp, long long h1_z1_bundle,
                           const SearchGuards& guards, InvariantCache* cache) {
    Rat deg = intersection_pairing(cfg.graph, lp, RatCycle(cfg.z));
    return h1_z1_bundle - h1_structure_z1(cfg, guards, cache) + to_long(deg);
}

long long h1_structure_z1(const SplitConfig& cfg, const SearchGuards& guards,
                          InvariantCache* cache) {
    long long total = 0;
    for (const auto& comp : cfg.t1) {
        IntCycle wc(comp.graph.vertex_count());
        for (std::size_t i = 0; i < comp.orig_index.size(); ++i)
            wc[i] = cfg.z1[comp.orig_index[i]];
        total += detail::h1_sum(comp.graph, wc, guards, cache);
    }
    return total;
}

}  // namespace reslat
