#ifndef RESLAT_COHOMOLOGY_HPP
#define RESLAT_COHOMOLOGY_HPP

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "reslat/minimize.hpp"

namespace reslat {

// First Chern class of a (restricted) natural line bundle, together with the
// cycle it restricts to. An empty carrier means the whole resolution.
struct ChernClass {
    RatCycle l_prime;
    IntCycle carrier;
};

struct CohomologyReport {
    long long h0 = 0;
    long long h1 = 0;
    Rat chi_O;
    std::string formula_trace;
};

// Memo table for h1/min-chi style results, keyed by graph fingerprint plus
// operation arguments. Concurrent use is safe; results are deterministic, so
// racing writers store identical values.
class InvariantCache {
  public:
    std::optional<long long> get(const std::string& key) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = vals_.find(key);
        if (it == vals_.end()) return std::nullopt;
        return it->second;
    }
    void put(const std::string& key, long long v) {
        std::lock_guard<std::mutex> lock(mu_);
        vals_.emplace(key, v);
    }

  private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, long long> vals_;
};

// h^1(O_Z) of the generic analytic structure. Connected support:
// 1 - min{chi(l) : 0 < l <= Z}; disconnected support: sum over the
// connected components. Z = 0 is an error.
long long h1_generic(const ResolutionGraph& g, const IntCycle& z, const SearchGuards& guards = {},
                     InvariantCache* cache = nullptr);

// h^1(O_Z(-l')) for l' in L' with l'_v > 0 on the support of Z:
// chi(l') - min{chi(l'+l) : 0 <= l <= Z}. Outside that range the formula is
// not claimed and a FormulaRangeError is thrown.
long long h1_natural(const ResolutionGraph& g, const IntCycle& z, const RatCycle& lp,
                     const SearchGuards& guards = {}, InvariantCache* cache = nullptr);

// p_g = 1 - min{chi(l) : l > 0}.
long long geometric_genus(const ResolutionGraph& g, const SearchGuards& guards = {},
                          InvariantCache* cache = nullptr);

// chi(l') >= 1 for every effective nonzero cycle.
bool is_rational(const ResolutionGraph& g, const SearchGuards& guards = {},
                 InvariantCache* cache = nullptr);

// h^1 of the natural bundle O(-l') on the whole resolution:
// chi(l') - min{chi(l'+l) : l >= 0} (+1 when l' <= 0 and the graph is
// non-rational).
long long h1_resolution_natural(const ResolutionGraph& g, const RatCycle& lp,
                                const SearchGuards& guards = {}, InvariantCache* cache = nullptr);

// dim H^0(O)/H^0(O(-l_0)) for l_0 >= 0.
long long hfrak(const ResolutionGraph& g, const IntCycle& l0, const SearchGuards& guards = {},
                InvariantCache* cache = nullptr);

// Analytic-semigroup membership for generic structures: l' = 0 or
// chi(l') < chi(l'+l) for every integer l > 0.
bool semigroup_member(const ResolutionGraph& g, const RatCycle& lp, const SearchGuards& guards = {},
                      InvariantCache* cache = nullptr);

// Unique maximal element of {Z > 0 : chi(Z) = min chi}; non-rational graphs
// only.
IntCycle maximal_ideal_cycle(const ResolutionGraph& g, const SearchGuards& guards = {},
                             InvariantCache* cache = nullptr);

// e_Z(J) = h^1(O_Z) - h^1(O_{Z with the J coordinates zeroed}); J must lie in
// the support of Z. This is the stable Abel-map image dimension for classes
// supported on J.
long long e_z(const ResolutionGraph& g, const IntCycle& z, const std::vector<int>& j,
              const SearchGuards& guards = {}, InvariantCache* cache = nullptr);

// Generic-structure test for H^0(O_Z(K+Z))_reg != 0: the support is connected
// and chi(Z') > chi(Z) for every 0 <= Z' < Z.
bool has_regular_canonical_section(const ResolutionGraph& g, const IntCycle& z,
                                   const SearchGuards& guards = {},
                                   InvariantCache* cache = nullptr);

// Least 0 <= Z' <= Z with h^1(O_{Z'}) = h^1(O_Z); fails loudly (with two
// witnesses) if the minimum is not unique.
IntCycle cohomological_cycle(const ResolutionGraph& g, const IntCycle& z,
                             const SearchGuards& guards = {}, InvariantCache* cache = nullptr);

// Riemann-Roch bookkeeping for the bundle O_Z(-l'):
// h0 = chi(Z) + (-l', Z) + h1. The h1 term comes from h1_natural, from the
// structure-sheaf formula when l' = 0, or from the explicit override.
CohomologyReport h0_natural_via_rr(const ResolutionGraph& g, const IntCycle& z, const RatCycle& lp,
                                   std::optional<long long> h1_known = std::nullopt,
                                   const SearchGuards& guards = {}, InvariantCache* cache = nullptr);

namespace detail {

// Component-summed h^1(O_Z); 0 for the empty cycle. The building block for
// e_Z, towers and the relative formulas.
long long h1_sum(const ResolutionGraph& g, const IntCycle& z, const SearchGuards& guards = {},
                 InvariantCache* cache = nullptr);

}  // namespace detail

}  // namespace reslat

#endif
