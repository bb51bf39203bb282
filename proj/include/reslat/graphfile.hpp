#ifndef RESLAT_GRAPHFILE_HPP
#define RESLAT_GRAPHFILE_HPP

#include <map>
#include <optional>
#include <string>

#include "reslat/graph.hpp"

namespace reslat {

// Text format:
//   # comment
//   vertex <id> euler=<int> [genus=<int>]
//   edge <id> <id>
//   cycle <name> <id>=<int> ...
struct GraphFileResult {
    std::optional<ResolutionGraph> graph;
    std::map<std::string, IntCycle> cycles;  // named cycles, canonical order
    std::vector<Diagnostic> diagnostics;     // syntax and validation problems
    bool ok() const { return graph.has_value(); }
};

GraphFileResult parse_graph_file(const std::string& text);

// Canonical emission: vertices sorted by id, edges sorted, cycle entries
// sorted with zero coefficients omitted. parse(emit(g)) == g and
// emit(parse(doc)) is a fixed point.
std::string emit_graph_file(const ResolutionGraph& g,
                            const std::map<std::string, IntCycle>& cycles = {});

}  // namespace reslat

#endif
