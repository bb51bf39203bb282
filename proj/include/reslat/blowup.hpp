#ifndef RESLAT_BLOWUP_HPP
#define RESLAT_BLOWUP_HPP

#include <string>
#include <vector>

#include "reslat/cohomology.hpp"
#include "reslat/graph.hpp"

namespace reslat {

/**
 * One blow-up step. The pullback maps preserve the intersection pairing and
 * chi exactly, and the anticanonical cycle of the new graph is
 * pullback(Z_K) - E_new.
 */
struct BlowupResult {
    ResolutionGraph graph;
    std::string new_vertex_id;
    std::size_t new_vertex = 0;           // index in the new graph
    std::vector<std::size_t> old_to_new;  // old vertex index -> new vertex index
    std::vector<std::size_t> parents;     // old indices whose coefficients feed the new one

    IntCycle pullback(const IntCycle& l) const;
    RatCycle pullback(const RatCycle& l) const;
};

// Blow up the intersection point of the edge {u,v}: new (-1)-vertex between
// them, euler numbers of u and v drop by one.
BlowupResult blowup_edge(const ResolutionGraph& g, std::size_t u, std::size_t v,
                         const std::string& id_hint = "");

// Blow up a generic (regular) point of E_v: new (-1)-leaf at v, euler of v
// drops by one.
BlowupResult blowup_vertex(const ResolutionGraph& g, std::size_t v,
                           const std::string& id_hint = "");

// t successive blow-ups along a transversal cut through E_v: each step blows
// up a generic point of the newest divisor.
struct IteratedBlowup {
    std::vector<BlowupResult> steps;
    std::vector<std::string> chain_ids;

    const ResolutionGraph& final_graph() const { return steps.back().graph; }
    IntCycle pullback(const IntCycle& l) const;
    RatCycle pullback(const RatCycle& l) const;
};

IteratedBlowup iterated_blowup_chain(const ResolutionGraph& g, std::size_t v, int t);

// Multiplicity t of the simple base point of O(-l') detected at a generic
// point of E_v: t is the largest i for which the i-th blow-up class
// b_i*(l') + sum_{j<=i} j E_{v_j} still has h^1 = h^1(l') + i. Requires l'
// in the analytic semigroup; 0 when (l', E_v) = 0.
long long simple_base_multiplicity(const ResolutionGraph& g, const RatCycle& lp, std::size_t v,
                                   int step_cap = 16, const SearchGuards& guards = {},
                                   InvariantCache* cache = nullptr);

}  // namespace reslat

#endif
