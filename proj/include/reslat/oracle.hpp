#ifndef RESLAT_ORACLE_HPP
#define RESLAT_ORACLE_HPP

#include <optional>
#include <vector>

#include "reslat/graph.hpp"

// Reference implementations built from the definitions with plain loops:
// no incremental kernel, no memoization, own linear solver. Tests and
// --oracle runs compare the main library against these.
namespace reslat::oracle {

Rat chi_ref(const ResolutionGraph& g, const RatCycle& l);
RatCycle canonical_cycle_ref(const ResolutionGraph& g);
mpz_class determinant_ref(const ResolutionGraph& g);

struct MinRef {
    Rat minimum;
    std::vector<IntCycle> argmins;
};

// Plain odometer scan of [lower, upper]; optionally skips one point.
MinRef min_box_ref(const ResolutionGraph& g, const RatCycle& shift, const IntCycle& lower,
                   const IntCycle& upper, const IntCycle* skip = nullptr);

// Minimum over all effective cycles (optionally excluding zero), with the
// candidate region bounded exactly before scanning.
MinRef min_effective_ref(const ResolutionGraph& g, const RatCycle& shift, bool exclude_zero);

long long h1_ref(const ResolutionGraph& g, const IntCycle& z);  // 0 for the zero cycle
long long h1_natural_ref(const ResolutionGraph& g, const IntCycle& z, const RatCycle& lp);
long long e_z_ref(const ResolutionGraph& g, const IntCycle& z, const std::vector<int>& j);
long long pg_ref(const ResolutionGraph& g);
bool rational_ref(const ResolutionGraph& g);
bool has_regular_ref(const ResolutionGraph& g, const IntCycle& z);
bool semigroup_ref(const ResolutionGraph& g, const RatCycle& lp);
long long hfrak_ref(const ResolutionGraph& g, const IntCycle& l0);
long long h1_resolution_ref(const ResolutionGraph& g, const RatCycle& lp);

// candidate == minimal Z' <= z_input with h1(Z') = h1(z_input)?
bool is_minimal_cohomological_ref(const ResolutionGraph& g, const IntCycle& z_input,
                                  const IntCycle& candidate);

}  // namespace reslat::oracle

#endif
