#ifndef RESLAT_GRAPH_HPP
#define RESLAT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reslat/cycle.hpp"
#include "reslat/rational.hpp"

namespace reslat {

// Unvalidated graph description, as read from a file or built by hand.
struct RawGraph {
    struct Vertex {
        std::string id;
        long long euler = 0;
        long long genus = 0;
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

struct Diagnostic {
    std::string code;     // stable identifier, e.g. "not-negative-definite"
    std::string message;  // human-readable, names the witnessing vertex/minor
};

/**
 * A validated resolution graph: a connected tree of genus-0 vertices whose
 * intersection matrix (euler numbers on the diagonal, 1 for edges) is
 * negative definite with nonzero determinant.
 *
 * Vertices are kept in canonical order (ids sorted ascending); every cycle
 * is a coefficient vector in that order. All derived data is exact and the
 * object is immutable after construction, so concurrent reads are safe.
 */
class ResolutionGraph {
  public:
    std::size_t vertex_count() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(std::size_t v) const { return ids_[v]; }
    long long euler(std::size_t v) const { return euler_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    int valency(std::size_t v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(std::size_t u, std::size_t v) const;

    // Index of a vertex id, or nullopt.
    std::optional<std::size_t> index_of(const std::string& id) const;

    // Intersection matrix I: I_vv = euler, I_vw = 1 iff edge.
    long long intersection(std::size_t u, std::size_t v) const {
        return u == v ? euler_[u] : (has_edge(u, v) ? 1 : 0);
    }
    const std::vector<std::vector<Rat>>& inverse() const { return inv_; }

    // det(I); |det| is the order of the discriminant group L'/L.
    const mpz_class& determinant() const { return det_; }

    // Anticanonical cycle Z_K: (Z_K, E_v) = (E_v,E_v) + 2 for all v.
    const RatCycle& canonical_cycle() const { return zk_; }

    // Dual basis E*_v with (E*_v, E_w) = -delta_vw; columns of -I^{-1}.
    const RatCycle& dual(std::size_t v) const { return duals_[v]; }
    const std::vector<RatCycle>& dual_basis() const { return duals_; }

    // 64-bit FNV-1a of the canonical file emission, as 16 hex chars.
    const std::string& fingerprint() const { return fingerprint_; }

    // Construction goes through validate_graph below.
    struct Key {};
    ResolutionGraph(Key, std::vector<std::string> ids, std::vector<long long> euler,
                    std::vector<std::pair<int, int>> edges);

  private:
    std::vector<std::string> ids_;
    std::vector<long long> euler_;
    std::vector<std::pair<int, int>> edges_;  // index pairs, u < v, sorted
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<Rat>> inv_;
    std::vector<RatCycle> duals_;
    RatCycle zk_;
    mpz_class det_;
    std::string fingerprint_;
};

struct ValidationResult {
    std::optional<ResolutionGraph> graph;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return graph.has_value(); }
};

// Checks every invariant and returns either the validated graph or the full
// list of violations (unknown edge endpoints, duplicate ids, nonzero genus,
// not a tree, not negative definite, zero determinant).
ValidationResult validate_graph(const RawGraph& raw);

// Convenience for tests and internal transforms; throws on invalid input.
ResolutionGraph make_graph(const RawGraph& raw);

// Connected components of {v : z_v != 0} in g, each sorted ascending.
std::vector<std::vector<int>> support_components(const ResolutionGraph& g, const IntCycle& z);

bool support_connected(const ResolutionGraph& g, const IntCycle& z);

// One connected component of an induced subgraph, with its embedding.
struct SubgraphComponent {
    ResolutionGraph graph;
    std::vector<int> orig_index;  // component vertex i <-> parent vertex orig_index[i]
};

// Induced subgraph on the given parent-vertex set, split into components.
// Principal submatrices of a negative definite matrix stay negative
// definite, so each component is again a valid graph.
std::vector<SubgraphComponent> induced_subgraph(const ResolutionGraph& g,
                                                const std::vector<int>& vertices);

}  // namespace reslat

#endif
