#ifndef RESLAT_LATTICE_HPP
#define RESLAT_LATTICE_HPP

#include <vector>

#include "reslat/graph.hpp"

namespace reslat {

// (a, b) under the intersection form, exact.
Rat intersection_pairing(const ResolutionGraph& g, const RatCycle& a, const RatCycle& b);
long long intersection_pairing(const ResolutionGraph& g, const IntCycle& a, const IntCycle& b);
Rat intersection_pairing(const ResolutionGraph& g, const RatCycle& a, const IntCycle& b);

// Riemann-Roch function chi(l') = -(l', l' - Z_K)/2.
Rat chi(const ResolutionGraph& g, const RatCycle& l);
Rat chi(const ResolutionGraph& g, const IntCycle& l);

// Membership in L': (l', E_v) integral for all v.
bool in_dual_lattice(const ResolutionGraph& g, const RatCycle& lp);

// The representative of [l'] in the semi-open cube [0,1)^V; requires l' in L'.
RatCycle class_rep(const ResolutionGraph& g, const RatCycle& lp);

struct LipmanResult {
    bool member = false;
    // When member: l' = sum a_v E*_v with a_v = -(l', E_v) >= 0.
    std::vector<Rat> dual_coords;
};

// Lipman cone test: (l', E_v) <= 0 for all v.
LipmanResult lipman_cone_member(const ResolutionGraph& g, const RatCycle& lp);

// |det(I)| = |H_1(M,Z)| = [L' : L].
mpz_class discriminant_order(const ResolutionGraph& g);

// E*-coordinates of l': a_v = -(l', E_v). l' = sum a_v E*_v always.
std::vector<Rat> dual_coordinates(const ResolutionGraph& g, const RatCycle& lp);

}  // namespace reslat

#endif
