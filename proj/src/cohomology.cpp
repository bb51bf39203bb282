#include "reslat/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace reslat {

namespace {

void check_cycle(const ResolutionGraph& g, const IntCycle& z, const char* who) {
    if (z.size() != g.vertex_count())
        throw std::invalid_argument(std::string(who) + ": cycle indexed by wrong vertex set");
}

std::string key_of(const ResolutionGraph& g, const char* op, const std::string& rest) {
    return g.fingerprint() + "|" + op + "|" + rest;
}

long long cached(InvariantCache* cache, const std::string& key,
                 const std::function<long long()>& compute) {
    if (cache) {
        if (auto v = cache->get(key)) return *v;
    }
    long long v = compute();
    if (cache) cache->put(key, v);
    return v;
}

Rat min_chi_up_to(const ResolutionGraph& g, const IntCycle& z, bool exclude_zero,
                  const SearchGuards& guards) {
    IntCycle zero(z.size());
    auto scan = detail::scan_min(g, RatCycle(z.size()), zero, z, exclude_zero ? &zero : nullptr,
                                 nullptr, guards.max_box_points);
    if (!scan.nonempty) throw std::invalid_argument("min_chi_up_to: empty range");
    return scan.minimum;
}

}  // namespace

namespace detail {

long long h1_sum(const ResolutionGraph& g, const IntCycle& z, const SearchGuards& guards,
                 InvariantCache* cache) {
    check_cycle(g, z, "h1_sum");
    if (!z.is_effective()) throw std::invalid_argument("h1_sum: cycle is not effective");
    if (z.is_zero()) return 0;
    return cached(cache, key_of(g, "h1", cycle_str(z)), [&] {
        long long total = 0;
        for (const auto& comp : support_components(g, z)) {
            IntCycle zc(z.size());
            for (int v : comp) zc[v] = z[v];
            Rat m = min_chi_up_to(g, zc, /*exclude_zero=*/true, guards);
            total += to_long(1 - m);
        }
        return total;
    });
}

}  // namespace detail

long long h1_generic(const ResolutionGraph& g, const IntCycle& z, const SearchGuards& guards,
                     InvariantCache* cache) {
    check_cycle(g, z, "h1_generic");
    if (z.is_zero()) throw std::invalid_argument("h1_generic: empty cycle");
    return detail::h1_sum(g, z, guards, cache);
}

long long h1_natural(const ResolutionGraph& g, const IntCycle& z, const RatCycle& lp,
                     const SearchGuards& guards, InvariantCache* cache) {
    check_cycle(g, z, "h1_natural");
    if (!z.is_effective()) throw std::invalid_argument("h1_natural: cycle is not effective");
    if (!in_dual_lattice(g, lp)) throw std::invalid_argument("h1_natural: class not in L'");
    for (std::size_t v = 0; v < z.size(); ++v)
        if (z[v] != 0 && lp[v] <= 0)
            throw FormulaRangeError("h1_natural: formula not applicable, class coordinate at '" +
                                    g.id(v) + "' is not positive on the support");
    return cached(cache, key_of(g, "h1nat", cycle_str(z) + ";" + cycle_str(lp)), [&] {
        IntCycle zero(z.size());
        auto scan =
            detail::scan_min(g, lp, zero, z, nullptr, nullptr, guards.max_box_points);
        return to_long(chi(g, lp) - scan.minimum);
    });
}

long long geometric_genus(const ResolutionGraph& g, const SearchGuards& guards,
                          InvariantCache* cache) {
    return cached(cache, key_of(g, "pg", ""), [&] {
        auto res = min_chi_effective(g, RatCycle(g.vertex_count()), /*exclude_zero=*/true, guards);
        return to_long(1 - res.minimum);
    });
}

bool is_rational(const ResolutionGraph& g, const SearchGuards& guards, InvariantCache* cache) {
    return geometric_genus(g, guards, cache) == 0;
}

long long h1_resolution_natural(const ResolutionGraph& g, const RatCycle& lp,
                                const SearchGuards& guards, InvariantCache* cache) {
    if (!in_dual_lattice(g, lp))
        throw std::invalid_argument("h1_resolution_natural: class not in L'");
    return cached(cache, key_of(g, "h1res", cycle_str(lp)), [&] {
        auto res = min_chi_effective(g, lp, /*exclude_zero=*/false, guards);
        long long base = to_long(chi(g, lp) - res.minimum);
        bool nonpositive = std::all_of(lp.c.begin(), lp.c.end(), [](const Rat& x) { return x <= 0; });
        if (nonpositive && !is_rational(g, guards, cache)) base += 1;
        return base;
    });
}

long long hfrak(const ResolutionGraph& g, const IntCycle& l0, const SearchGuards& guards,
                InvariantCache* cache) {
    check_cycle(g, l0, "hfrak");
    if (!l0.is_effective()) throw std::invalid_argument("hfrak: negative coefficients");
    if (l0.is_zero()) return 0;
    return cached(cache, key_of(g, "hfrak", cycle_str(l0)), [&] {
        auto shifted = min_chi_effective(g, RatCycle(l0), /*exclude_zero=*/false, guards);
        auto base = min_chi_effective(g, RatCycle(g.vertex_count()), /*exclude_zero=*/false, guards);
        long long v = to_long(shifted.minimum - base.minimum);
        if (!is_rational(g, guards, cache)) v += 1;
        return v;
    });
}

bool semigroup_member(const ResolutionGraph& g, const RatCycle& lp, const SearchGuards& guards,
                      InvariantCache* cache) {
    if (!in_dual_lattice(g, lp)) throw std::invalid_argument("semigroup_member: class not in L'");
    if (lp.is_zero()) return true;
    return cached(cache, key_of(g, "sgr", cycle_str(lp)), [&] {
               auto res = min_chi_effective(g, lp, /*exclude_zero=*/true, guards);
               return static_cast<long long>(chi(g, lp) < res.minimum ? 1 : 0);
           }) != 0;
}

IntCycle maximal_ideal_cycle(const ResolutionGraph& g, const SearchGuards& guards,
                             InvariantCache* cache) {
    if (is_rational(g, guards, cache))
        throw FormulaRangeError("maximal_ideal_cycle: not defined for rational graphs");
    auto res = min_chi_effective(g, RatCycle(g.vertex_count()), /*exclude_zero=*/true, guards);
    auto mx = argmin_max_element(res);
    if (!mx.maximum) {
        std::string msg = "maximal_ideal_cycle: argmin set has no maximal element";
        for (const auto& w : mx.witnesses) msg += " " + cycle_str(w);
        throw NonUniqueCycleError(msg);
    }
    // The maximum is the componentwise join of the (complete) argmin set,
    // so it dominates every minimizer by construction.
    return *mx.maximum;
}

long long e_z(const ResolutionGraph& g, const IntCycle& z, const std::vector<int>& j,
              const SearchGuards& guards, InvariantCache* cache) {
    check_cycle(g, z, "e_z");
    if (!z.is_effective()) throw std::invalid_argument("e_z: cycle is not effective");
    IntCycle restricted = z;
    for (int v : j) {
        if (v < 0 || static_cast<std::size_t>(v) >= z.size() || z[v] == 0)
            throw std::invalid_argument("e_z: vertex set J is not contained in the support");
        restricted[v] = 0;
    }
    return detail::h1_sum(g, z, guards, cache) - detail::h1_sum(g, restricted, guards, cache);
}

bool has_regular_canonical_section(const ResolutionGraph& g, const IntCycle& z,
                                   const SearchGuards& guards, InvariantCache* cache) {
    check_cycle(g, z, "has_regular_canonical_section");
    if (!z.is_effective())
        throw std::invalid_argument("has_regular_canonical_section: cycle is not effective");
    if (!support_connected(g, z)) return false;
    return cached(cache, key_of(g, "regsec", cycle_str(z)), [&]() -> long long {
               IntCycle zero(z.size());
               Rat cz = chi(g, z);
               auto scan = detail::scan_min(g, RatCycle(z.size()), zero, z, /*skip=*/&z,
                                            /*stop_at_leq=*/&cz, guards.max_box_points);
               // A proper subcycle with chi <= chi(Z) kills regularity.
               return scan.stopped_early ? 0 : 1;
           }) != 0;
}

IntCycle cohomological_cycle(const ResolutionGraph& g, const IntCycle& z,
                             const SearchGuards& guards, InvariantCache* cache) {
    check_cycle(g, z, "cohomological_cycle");
    if (!z.is_effective())
        throw std::invalid_argument("cohomological_cycle: cycle is not effective");
    const long long target = detail::h1_sum(g, z, guards, cache);

    // h^1 is monotone, so {0 <= Z' <= Z : h^1(Z') = h^1(Z)} is an up-set in
    // the box and single-coordinate descent lands on a minimal element.
    auto descend = [&](IntCycle cur) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t v = 0; v < cur.size(); ++v) {
                while (cur[v] > 0) {
                    IntCycle cand = cur;
                    cand[v] -= 1;
                    if (detail::h1_sum(g, cand, guards, cache) != target) break;
                    cur = cand;
                    moved = true;
                }
            }
        }
        return cur;
    };
    IntCycle m1 = descend(z);

    // Uniqueness: any attaining cycle not above m1 sits below one of the
    // single-coordinate clips of Z, so |V| checks decide it.
    for (std::size_t v = 0; v < z.size(); ++v) {
        if (m1[v] == 0) continue;
        IntCycle clip = z;
        clip[v] = m1[v] - 1;
        if (detail::h1_sum(g, clip, guards, cache) != target) continue;
        IntCycle m2 = descend(clip);
        IntCycle meet = cmin(m1, m2);
        if (detail::h1_sum(g, meet, guards, cache) == target) return meet;
        throw NonUniqueCycleError("cohomological_cycle: minimal cycle is not unique, witnesses " +
                                  cycle_str(m1) + " and " + cycle_str(m2));
    }
    return m1;
}

CohomologyReport h0_natural_via_rr(const ResolutionGraph& g, const IntCycle& z, const RatCycle& lp,
                                   std::optional<long long> h1_known, const SearchGuards& guards,
                                   InvariantCache* cache) {
    check_cycle(g, z, "h0_natural_via_rr");
    CohomologyReport rep;
    rep.chi_O = chi(g, z);
    std::string h1_src;
    if (h1_known) {
        rep.h1 = *h1_known;
        h1_src = "provided";
    } else if (lp.is_zero()) {
        rep.h1 = detail::h1_sum(g, z, guards, cache);
        h1_src = "structure sheaf";
    } else {
        rep.h1 = h1_natural(g, z, lp, guards, cache);
        h1_src = "natural bundle formula";
    }
    // c1 of O_Z(-l') is -l'.
    Rat deg = -intersection_pairing(g, lp, RatCycle(z));
    rep.h0 = to_long(rep.chi_O + deg + to_rat(rep.h1));
    rep.formula_trace = "h0 = chi(Z) + (c1,Z) + h1 = " + rat_str(rep.chi_O) + " + " + rat_str(deg) +
                        " + " + std::to_string(rep.h1) + " (h1 " + h1_src + ")";
    return rep;
}

}  // namespace reslat
