#ifndef RESLAT_TESTS_TEST_UTIL_HPP
#define RESLAT_TESTS_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "reslat/graph.hpp"

namespace reslat::testutil {

inline ResolutionGraph single_vertex(long long euler = -2) {
    RawGraph raw;
    raw.vertices.push_back({"a", euler, 0});
    return make_graph(raw);
}

// Path with the given euler numbers, ids a01, a02, ...
inline ResolutionGraph chain(const std::vector<long long>& eulers) {
    RawGraph raw;
    auto id = [](std::size_t i) {
        std::string s = std::to_string(i + 1);
        return std::string("a") + (s.size() < 2 ? "0" + s : s);
    };
    for (std::size_t i = 0; i < eulers.size(); ++i) raw.vertices.push_back({id(i), eulers[i], 0});
    for (std::size_t i = 0; i + 1 < eulers.size(); ++i) raw.edges.push_back({id(i), id(i + 1)});
    return make_graph(raw);
}

inline ResolutionGraph a_n(int n) { return chain(std::vector<long long>(n, -2)); }

// Star: center plus legs, single edges center-leg.
inline ResolutionGraph star(long long center, const std::vector<long long>& legs) {
    RawGraph raw;
    raw.vertices.push_back({"c", center, 0});
    for (std::size_t i = 0; i < legs.size(); ++i) {
        std::string id = "l" + std::to_string(i + 1);
        raw.vertices.push_back({id, legs[i], 0});
        raw.edges.push_back({"c", id});
    }
    return make_graph(raw);
}

inline ResolutionGraph star_144() { return star(-1, {-4, -4, -4}); }

inline ResolutionGraph d_n(int n) {
    // Path of n-2 vertices with two extra leaves at one end.
    RawGraph raw;
    auto id = [](int i) {
        std::string s = std::to_string(i);
        return std::string("a") + (s.size() < 2 ? "0" + s : s);
    };
    for (int i = 0; i < n; ++i) raw.vertices.push_back({id(i), -2, 0});
    for (int i = 0; i + 1 < n - 2; ++i) raw.edges.push_back({id(i), id(i + 1)});
    raw.edges.push_back({id(n - 3), id(n - 2)});
    raw.edges.push_back({id(n - 3), id(n - 1)});
    return make_graph(raw);
}

// E6/E7/E8 as stars with legs of lengths (1,2,2), (1,2,3), (1,2,4).
inline ResolutionGraph e_n(int n) {
    RawGraph raw;
    int legs[3] = {1, 2, n - 4};
    raw.vertices.push_back({"c", -2, 0});
    for (int leg = 0; leg < 3; ++leg) {
        std::string prev = "c";
        for (int i = 0; i < legs[leg]; ++i) {
            std::string id = "l" + std::to_string(leg) + std::to_string(i);
            raw.vertices.push_back({id, -2, 0});
            raw.edges.push_back({prev, id});
            prev = id;
        }
    }
    return make_graph(raw);
}

// Random negative-definite tree; retries decorations until the form checks.
inline ResolutionGraph random_tree(std::mt19937_64& rng, int max_vertices, long long euler_min,
                                   long long euler_max) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    for (;;) {
        RawGraph raw;
        auto id = [](int i) {
            std::string s = std::to_string(i);
            return std::string("a") + (s.size() < 2 ? "0" + s : s);
        };
        std::uniform_int_distribution<long long> eu(euler_min, euler_max);
        for (int i = 0; i < n; ++i) raw.vertices.push_back({id(i), eu(rng), 0});
        for (int i = 1; i < n; ++i) {
            std::uniform_int_distribution<int> parent(0, i - 1);
            raw.edges.push_back({id(parent(rng)), id(i)});
        }
        auto res = validate_graph(raw);
        if (res.ok()) return std::move(*res.graph);
    }
}

inline IntCycle random_cycle(std::mt19937_64& rng, std::size_t n, long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    IntCycle z(n);
    for (std::size_t v = 0; v < n; ++v) z[v] = d(rng);
    return z;
}

}  // namespace reslat::testutil

#endif
