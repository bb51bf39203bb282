#ifndef RESLAT_RELATIVE_HPP
#define RESLAT_RELATIVE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "reslat/cohomology.hpp"
#include "reslat/graph.hpp"

namespace reslat {

/**
 * A vertex partition V = V1 u V2 with a cycle Z split as Z = Z1 + Z2 along
 * it. T1 is the induced (possibly disconnected) subgraph on V1; each of its
 * components is a valid graph of its own.
 */
struct SplitConfig {
    ResolutionGraph graph;
    std::vector<int> v1;  // sorted parent indices
    IntCycle z, z1, z2;
    std::vector<SubgraphComponent> t1;
};

SplitConfig make_split(const ResolutionGraph& g, const std::vector<int>& v1, const IntCycle& z);

// Image of l' under the cohomological restriction operator R1, expressed in
// each component's own coordinates: decompose l' = sum a_v E*_v, keep
// v in V1, re-express through the component duals. Requires l' in L'.
std::vector<RatCycle> restrict_chern(const SplitConfig& cfg, const RatCycle& lp);

// min(Z - l, Z1) componentwise.
IntCycle truncate_cycle(const SplitConfig& cfg, const IntCycle& z_minus_l);

// Oracle signature for the inner terms h^1((Z-l)_1, L(-l)); l ranges over
// [0, Z].
using InnerH1 = std::function<long long(const IntCycle& l)>;

// Default oracle: restricted natural bundles evaluated per component of T1
// by the generic-structure formulas (class zero on a component falls back to
// the structure sheaf; a mixed-sign restricted class is out of formula range
// and throws). Memoized via the cache.
InnerH1 default_inner_h1(const SplitConfig& cfg, const RatCycle& lp,
                         const SearchGuards& guards = {}, InvariantCache* cache = nullptr);

struct RelativeDominance {
    bool dominant = false;
    std::optional<IntCycle> violating;  // lexicographically first failure
};

// Relative dominance of (l', L|Z1) on Z: for all 0 < l <= Z,
// chi(-l') - h1(Z1, L) < chi(-l'+l) - h1((Z-l)_1, L(-l)). Requires -l' in
// the Lipman cone.
RelativeDominance relative_dominant(const SplitConfig& cfg, const RatCycle& lp,
                                    const InnerH1& inner, const SearchGuards& guards = {});

// h^1(Z, L) for L the restricted natural bundle of class l' on a relatively
// generic structure: chi(-l') - min over 0 <= l <= Z of
// (chi(-l'+l) - h1((Z-l)_1, L(-l))).
long long relative_h1(const SplitConfig& cfg, const RatCycle& lp, const InnerH1& inner,
                      const SearchGuards& guards = {});

// Dimension of the relative effective-divisor space over the fiber of L|Z1:
// h1(Z1, L) - h1(O_{Z1}) + (l', Z).
long long relative_eca_dim(const SplitConfig& cfg, const RatCycle& lp, long long h1_z1_bundle,
                           const SearchGuards& guards = {}, InvariantCache* cache = nullptr);

// h^1 of the structure sheaf on Z1 (component-summed).
long long h1_structure_z1(const SplitConfig& cfg, const SearchGuards& guards = {},
                          InvariantCache* cache = nullptr);

}  // namespace reslat

#endif
