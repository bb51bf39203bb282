#include "reslat/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace reslat {

namespace {

// Leading principal minors by fraction-free (Bareiss) elimination.
// minors[k] = det of the (k+1)x(k+1) top-left block, exact.
std::vector<mpz_class> leading_minors(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = to_mpz(m[i][j]);

    std::vector<mpz_class> minors(n);
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            if (a[k - 1][k - 1] == 0) {
                // Pivot vanished: a leading minor is zero. Finish the minors
                // with plain expansion on the affected blocks.
                break;
            }
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    a[i][j] = (a[i][j] * a[k - 1][k - 1] - a[i][k - 1] * a[k - 1][j]) / prev;
                }
            prev = a[k - 1][k - 1];
        }
        minors[k] = a[k][k];
    }
    // Zero pivot fallback: cofactor expansion for any minors not yet set.
    for (std::size_t k = 0; k < n; ++k) {
        if (minors[k] != 0) continue;
        // Recompute minor k+1 x k+1 by rational-free recursive expansion.
        const std::size_t d = k + 1;
        std::vector<std::vector<mpz_class>> b(d, std::vector<mpz_class>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) b[i][j] = to_mpz(m[i][j]);
        // Gaussian elimination over rationals via mpq.
        std::vector<std::vector<Rat>> r(d, std::vector<Rat>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) r[i][j] = Rat(b[i][j]);
        Rat det = 1;
        bool zero = false;
        for (std::size_t col = 0; col < d && !zero; ++col) {
            std::size_t piv = col;
            while (piv < d && r[piv][col] == 0) ++piv;
            if (piv == d) {
                zero = true;
                break;
            }
            if (piv != col) {
                std::swap(r[piv], r[col]);
                det = -det;
            }
            det *= r[col][col];
            for (std::size_t i = col + 1; i < d; ++i) {
                if (r[i][col] == 0) continue;
                Rat f = r[i][col] / r[col][col];
                for (std::size_t j = col; j < d; ++j) r[i][j] -= f * r[col][j];
            }
        }
        minors[k] = zero ? mpz_class(0) : det.get_num();  // det of integer matrix is integral
    }
    return minors;
}

// Exact inverse by Gauss-Jordan over mpq. Throws if singular.
std::vector<std::vector<Rat>> invert(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = to_rat(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("invert: singular matrix");
        if (piv != col) std::swap(a[piv], a[col]);
        Rat d = a[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) a[col][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

bool valid_id(const std::string& id) {
    if (id.empty()) return false;
    for (char ch : id) {
        if (ch == '=' || ch == '#' || ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' ||
            ch == '\r')
            return false;
    }
    return true;
}

}  // namespace

ResolutionGraph::ResolutionGraph(Key, std::vector<std::string> ids, std::vector<long long> euler,
                                 std::vector<std::pair<int, int>> edges)
    : ids_(std::move(ids)), euler_(std::move(euler)), edges_(std::move(edges)) {
    const std::size_t n = ids_.size();
    adj_.assign(n, {});
    for (auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());

    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = euler_[i];
    for (auto& [u, v] : edges_) m[u][v] = m[v][u] = 1;

    auto minors = leading_minors(m);
    det_ = n ? minors.back() : mpz_class(1);
    inv_ = invert(m);

    duals_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        RatCycle d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = -inv_[i][v];
        duals_.push_back(std::move(d));
    }

    // Z_K from the adjunction relations: I * zk = (e_v + 2)_v.
    zk_ = RatCycle(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += inv_[i][j] * to_rat(euler_[j] + 2);
        zk_[i] = acc;
    }

    // Fingerprint over the canonical structural description.
    std::string desc;
    for (std::size_t i = 0; i < n; ++i)
        desc += "v " + ids_[i] + " " + std::to_string(euler_[i]) + "\n";
    for (auto& [u, v] : edges_) desc += "e " + ids_[u] + " " + ids_[v] + "\n";
    fingerprint_ = hex64(fnv1a(desc));
}

bool ResolutionGraph::has_edge(std::size_t u, std::size_t v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), static_cast<int>(v));
}

std::optional<std::size_t> ResolutionGraph::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

ValidationResult validate_graph(const RawGraph& raw) {
    ValidationResult res;
    auto fail = [&res](std::string code, std::string msg) {
        res.diagnostics.push_back({std::move(code), std::move(msg)});
    };

    std::map<std::string, long long> euler_by_id;
    for (const auto& v : raw.vertices) {
        if (!valid_id(v.id)) {
            fail("bad-id", "vertex id '" + v.id + "' contains forbidden characters");
            continue;
        }
        if (euler_by_id.count(v.id)) {
            fail("duplicate-vertex", "vertex '" + v.id + "' declared twice");
            continue;
        }
        euler_by_id[v.id] = v.euler;
        if (v.genus != 0)
            fail("nonzero-genus", "vertex '" + v.id + "' has genus " + std::to_string(v.genus) +
                                      ", only genus 0 is supported");
    }
    if (raw.vertices.empty()) fail("empty-graph", "graph has no vertices");

    std::vector<std::string> ids;
    ids.reserve(euler_by_id.size());
    for (auto& [id, e] : euler_by_id) ids.push_back(id);
    std::vector<long long> euler;
    euler.reserve(ids.size());
    for (auto& id : ids) euler.push_back(euler_by_id[id]);

    auto index_of = [&ids](const std::string& id) -> int {
        auto it = std::lower_bound(ids.begin(), ids.end(), id);
        if (it == ids.end() || *it != id) return -1;
        return static_cast<int>(it - ids.begin());
    };

    std::set<std::pair<int, int>> edge_set;
    for (const auto& [a, b] : raw.edges) {
        int u = index_of(a), v = index_of(b);
        if (u < 0) fail("unknown-vertex", "edge endpoint '" + a + "' is not a declared vertex");
        if (v < 0) fail("unknown-vertex", "edge endpoint '" + b + "' is not a declared vertex");
        if (u < 0 || v < 0) continue;
        if (u == v) {
            fail("self-loop", "edge from '" + a + "' to itself");
            continue;
        }
        auto e = std::minmax(u, v);
        if (!edge_set.insert({e.first, e.second}).second)
            fail("duplicate-edge", "edge {" + a + "," + b + "} declared twice");
    }

    if (!res.diagnostics.empty()) return res;

    const std::size_t n = ids.size();
    std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());

    // Tree check: connected and |E| = |V| - 1.
    {
        std::vector<std::vector<int>> adj(n);
        for (auto& [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n) {
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v]) {
                    fail("not-a-tree", "graph is disconnected; vertex '" + ids[v] +
                                           "' is not reachable from '" + ids[0] + "'");
                    break;
                }
        } else if (edges.size() != n - 1) {
            fail("not-a-tree", "graph has a cycle (" + std::to_string(edges.size()) +
                                   " edges on " + std::to_string(n) + " vertices)");
        }
    }
    if (!res.diagnostics.empty()) return res;

    // Negative definiteness: leading principal minors alternate in sign,
    // minor_k * (-1)^k > 0. A zero determinant is reported separately.
    {
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = euler[i];
        for (auto& [u, v] : edges) m[u][v] = m[v][u] = 1;
        auto minors = leading_minors(m);
        for (std::size_t k = 0; k < n; ++k) {
            int want = (k % 2 == 0) ? -1 : 1;
            if (sgn(minors[k]) != want) {
                fail("not-negative-definite",
                     "leading principal minor #" + std::to_string(k + 1) + " (through vertex '" +
                         ids[k] + "') is " + minors[k].get_str() + ", expected sign " +
                         (want > 0 ? "+" : "-"));
                if (minors[k] == 0)
                    fail("zero-determinant", "a leading principal minor vanishes; the form is degenerate");
                break;
            }
        }
    }
    if (!res.diagnostics.empty()) return res;

    res.graph.emplace(ResolutionGraph::Key{}, std::move(ids), std::move(euler), std::move(edges));
    return res;
}

ResolutionGraph make_graph(const RawGraph& raw) {
    auto res = validate_graph(raw);
    if (!res.ok()) {
        std::string msg = "invalid graph:";
        for (auto& d : res.diagnostics) msg += " [" + d.code + "] " + d.message;
        throw std::invalid_argument(msg);
    }
    return std::move(*res.graph);
}

std::vector<std::vector<int>> support_components(const ResolutionGraph& g, const IntCycle& z) {
    if (z.size() != g.vertex_count())
        throw std::invalid_argument("support_components: cycle size mismatch");
    std::vector<char> in(z.size(), 0), seen(z.size(), 0);
    for (std::size_t v = 0; v < z.size(); ++v) in[v] = z[v] != 0;
    std::vector<std::vector<int>> comps;
    for (std::size_t v = 0; v < z.size(); ++v) {
        if (!in[v] || seen[v]) continue;
        std::vector<int> comp, stack{static_cast<int>(v)};
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.adjacency()[u])
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool support_connected(const ResolutionGraph& g, const IntCycle& z) {
    return support_components(g, z).size() == 1;
}

std::vector<SubgraphComponent> induced_subgraph(const ResolutionGraph& g,
                                                const std::vector<int>& vertices) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : vertices) in[v] = 1;

    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<SubgraphComponent> out;
    for (int v : vertices) {
        if (seen[v]) continue;
        std::vector<int> comp, stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.adjacency()[u])
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());

        RawGraph raw;
        for (int u : comp) raw.vertices.push_back({g.id(u), g.euler(u), 0});
        for (int u : comp)
            for (int w : g.adjacency()[u])
                if (u < w && in[w]) raw.edges.push_back({g.id(u), g.id(w)});
        out.push_back({make_graph(raw), comp});
    }
    return out;
}

}  // namespace reslat
