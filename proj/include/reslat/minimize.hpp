#ifndef RESLAT_MINIMIZE_HPP
#define RESLAT_MINIMIZE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "reslat/errors.hpp"
#include "reslat/graph.hpp"
#include "reslat/lattice.hpp"

namespace reslat {

struct SearchGuards {
    std::uint64_t max_box_points = 10'000'000;
    std::size_t max_argmin = 10'000;

    // Overrides from RESLAT_MAX_BOX_POINTS / RESLAT_MAX_ARGMIN.
    static SearchGuards from_env();
};

struct Box {
    IntCycle lower, upper;
};

struct MinChiResult {
    Rat minimum;
    std::vector<IntCycle> argmin_set;  // exhaustive unless truncated
    std::uint64_t argmin_count = 0;
    bool argmin_truncated = false;
    IntCycle argmin_join;       // componentwise max over the whole argmin set
    bool join_attains = false;  // chi(shift + join) == minimum
    // Pairwise-incomparable argmin sample; kept even past the truncation cap
    // so a missing maximum can always be witnessed.
    std::vector<IntCycle> maximal_sample;
    Box search_box;

    // Extras for the unbounded search:
    bool certified = false;          // candidate region provably inside the box
    bool shell_clear = false;        // every boundary-shell point exceeds the minimum
    bool min_over_L_checked = false; // shift = 0: equality with the min over all of L verified
};

// Exact minimum of chi(shift + l) over integer l with lower <= l <= upper,
// by exhaustive enumeration; full argmin set (capped by guards.max_argmin).
MinChiResult min_chi_box(const ResolutionGraph& g, const RatCycle& shift, const IntCycle& lower,
                         const IntCycle& upper, const SearchGuards& guards = {});

// Exact minimum of chi(shift + l) over ALL effective l (l >= 0; exclude_zero
// drops l = 0). The box grows until an exact ellipsoid bound certifies that
// every candidate at or below the current minimum lies inside it; with
// shift = 0 the minimum is additionally verified to agree with the minimum
// over the full lattice L.
MinChiResult min_chi_effective(const ResolutionGraph& g, const RatCycle& shift, bool exclude_zero,
                               const SearchGuards& guards = {});

// Greedy local minimization: single-coordinate steps l -> l +- E_v while chi
// strictly decreases, staying inside the box; ties broken by canonical vertex
// order (and +E_v before -E_v). Advisory: verify against min_chi_box when
// certainty is required.
IntCycle laufer_descent(const ResolutionGraph& g, const RatCycle& shift, const IntCycle& start,
                        const Box& box);

struct ArgminMax {
    std::optional<IntCycle> maximum;
    std::vector<IntCycle> witnesses;  // two incomparable argmins when no maximum
};

// Componentwise-maximal element of the argmin set, if one exists.
ArgminMax argmin_max_element(const MinChiResult& result);

namespace detail {

// Single low-level scan used by the public searches and by the cohomology
// formulas: minimize chi(shift + l) over the box, optionally skipping one
// point, optionally stopping as soon as a value <= stop_at_leq is seen.
struct BoxScan {
    bool nonempty = false;  // at least one point visited
    Rat minimum;
    IntCycle first_argmin;
    bool stopped_early = false;
};

BoxScan scan_min(const ResolutionGraph& g, const RatCycle& shift, const IntCycle& lower,
                 const IntCycle& upper, const IntCycle* skip, const Rat* stop_at_leq,
                 std::uint64_t max_points);

std::uint64_t box_volume_checked(const IntCycle& lower, const IntCycle& upper,
                                 std::uint64_t max_points, const char* who);

}  // namespace detail

}  // namespace reslat

#endif
