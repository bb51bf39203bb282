#ifndef RESLAT_CLASSIFY_HPP
#define RESLAT_CLASSIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reslat/cohomology.hpp"

namespace reslat {

enum class G12Status { Forbidden, Guaranteed, Undetermined };

std::string to_string(G12Status s);

struct CheckEntry {
    std::string name;
    bool holds = false;
    std::string values;
};

// Conditions derived inside proofs by contradiction: any degree-2 pencil
// would have to satisfy them. Their failure corroborates a Forbidden verdict
// but proves nothing by itself, hence the applicable flag.
struct ConditionEntry {
    std::string name;
    bool holds = false;
    bool applicable = false;
    std::string values;
};

struct TowerLevel {
    int t = 0;
    IntCycle cycle;
    long long h1 = 0;
    long long coeff_w1 = 0, coeff_w2 = 0;  // pair towers; coeff at the tracked vertex for single
    long long e_u1 = -1, e_u2 = -1, e_pair = -1;  // -1 when not defined at this level
};

struct CycleTower {
    std::vector<TowerLevel> levels;
    std::string stop_reason;
};

struct G12Report {
    bool pair_mode = true;
    std::string u1, u2;  // vertex ids; u2 empty in single mode
    G12Status status = G12Status::Undetermined;
    std::string status_reason;
    std::vector<CheckEntry> checks;
    std::vector<ConditionEntry> necessary_conditions;
    std::optional<CycleTower> tower;
    // Raw values for independent re-verification.
    long long e_u1 = 0, e_u2 = 0, e_pair = 0;
    long long h1_z = 0;
    Rat chi_z;
};

// Decision for the Chern class -E*_{u'} - E*_{u''} on Z. Forbidden: every
// bundle in the Abel image has h^0 = 1; Guaranteed: some bundle has h^0 = 2;
// Undetermined otherwise (with the failing check named).
G12Report classify_pair(const ResolutionGraph& g, const IntCycle& z, std::size_t u1,
                        std::size_t u2, const SearchGuards& guards = {},
                        InvariantCache* cache = nullptr);

// Decision for the class -2E*_u on Z. Only the Forbidden direction exists
// in the single-vertex case; there is no Guaranteed counterpart.
G12Report classify_single(const ResolutionGraph& g, const IntCycle& z, std::size_t u,
                          const SearchGuards& guards = {}, InvariantCache* cache = nullptr);

std::vector<ConditionEntry> necessary_conditions_pair(const ResolutionGraph& g, const IntCycle& z,
                                                      std::size_t u1, std::size_t u2,
                                                      const SearchGuards& guards = {},
                                                      InvariantCache* cache = nullptr);

std::vector<ConditionEntry> necessary_conditions_single(const ResolutionGraph& g,
                                                        const IntCycle& z, std::size_t u,
                                                        const SearchGuards& guards = {},
                                                        InvariantCache* cache = nullptr);

// Tower Z^1 = Z, Z^t = cohomological cycle of Z^{t-1} - E_{w'}, recording
// h^1, the coefficients at w', w'' and the e-values per level. Levels are
// recorded, not asserted.
CycleTower cycle_tower_pair(const ResolutionGraph& g, const IntCycle& z, std::size_t u1,
                            std::size_t u2, const SearchGuards& guards = {},
                            InvariantCache* cache = nullptr);

// Same recursion subtracting E at the chosen neighbor of u.
CycleTower cycle_tower_single(const ResolutionGraph& g, const IntCycle& z, std::size_t u,
                              std::size_t u_neighbor, const SearchGuards& guards = {},
                              InvariantCache* cache = nullptr);

struct EnumParams {
    int max_vertices = 7;
    long long euler_min = -5;
    long long euler_max = -1;
    long long coeff_cap = 4;
    std::optional<G12Status> target;
    bool pairs = true;
    bool singles = true;
    // Resource guards; hitting one stops the stream and is reported.
    std::uint64_t max_graphs = 2'000'000;
    std::uint64_t max_emitted = 1'000'000;
    SearchGuards search = {};
};

struct EnumInstance {
    ResolutionGraph graph;
    IntCycle z;
    std::string u1, u2;  // u2 empty for single-vertex instances
    G12Report report;
};

struct EnumStats {
    std::uint64_t trees_generated = 0;   // decorated trees up to isomorphism
    std::uint64_t graphs_negdef = 0;     // of those, negative definite
    std::uint64_t graphs_examined = 0;   // classification attempted
    std::uint64_t graphs_nonrational = 0;
    std::uint64_t cycles_tested = 0;
    std::uint64_t instances_classified = 0;
    std::uint64_t emitted = 0;
    std::uint64_t graphs_guard_skipped = 0;
    bool guard_hit = false;
    std::string guard_reason;
};

// Streams classified instances over all non-isomorphic negative-definite
// decorated trees within the bounds, in deterministic order (vertex count,
// then canonical code, then cycle, then vertices). The sink may return false
// to stop early. Every emitted report's e-values come from fresh brute force
// over the instance.
EnumStats enumerate_instances(const EnumParams& params,
                              const std::function<bool(const EnumInstance&)>& sink);

// Canonical code of a decorated tree: minimal AHU string over all roots.
// Equal codes = isomorphic as euler-labelled trees.
std::string canonical_tree_code(const ResolutionGraph& g);

}  // namespace reslat

#endif
