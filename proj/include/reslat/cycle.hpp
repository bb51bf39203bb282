#ifndef RESLAT_CYCLE_HPP
#define RESLAT_CYCLE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "reslat/rational.hpp"

namespace reslat {

// Cycles are coefficient vectors aligned with a graph's canonical vertex
// order (ids sorted ascending). IntCycle lives in L, RatCycle in L ⊗ Q.
struct IntCycle {
    std::vector<long long> c;

    IntCycle() = default;
    explicit IntCycle(std::size_t n) : c(n, 0) {}
    explicit IntCycle(std::vector<long long> v) : c(std::move(v)) {}

    std::size_t size() const { return c.size(); }
    long long& operator[](std::size_t i) { return c[i]; }
    long long operator[](std::size_t i) const { return c[i]; }

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
    }
    bool is_effective() const {
        return std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; });
    }
    long long sum() const {
        long long s = 0;
        for (long long x : c) s += x;
        return s;
    }

    friend bool operator==(const IntCycle& a, const IntCycle& b) { return a.c == b.c; }
    friend bool operator!=(const IntCycle& a, const IntCycle& b) { return a.c != b.c; }

    // Componentwise partial order.
    friend bool leq(const IntCycle& a, const IntCycle& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }

    friend IntCycle operator+(const IntCycle& a, const IntCycle& b) {
        IntCycle r(a.c);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
        return r;
    }
    friend IntCycle operator-(const IntCycle& a, const IntCycle& b) {
        IntCycle r(a.c);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
        return r;
    }

    friend IntCycle cmin(const IntCycle& a, const IntCycle& b) {
        IntCycle r(a.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
        return r;
    }
    friend IntCycle cmax(const IntCycle& a, const IntCycle& b) {
        IntCycle r(a.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
        return r;
    }
};

struct RatCycle {
    std::vector<Rat> c;

    RatCycle() = default;
    explicit RatCycle(std::size_t n) : c(n, Rat(0)) {}
    explicit RatCycle(std::vector<Rat> v) : c(std::move(v)) {}
    explicit RatCycle(const IntCycle& z) {
        c.reserve(z.size());
        for (long long x : z.c) c.push_back(to_rat(x));
    }

    std::size_t size() const { return c.size(); }
    Rat& operator[](std::size_t i) { return c[i]; }
    const Rat& operator[](std::size_t i) const { return c[i]; }

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
    }
    bool is_integral() const {
        return std::all_of(c.begin(), c.end(), [](const Rat& x) { return is_integer(x); });
    }

    friend bool operator==(const RatCycle& a, const RatCycle& b) { return a.c == b.c; }
    friend bool operator!=(const RatCycle& a, const RatCycle& b) { return a.c != b.c; }

    friend RatCycle operator+(const RatCycle& a, const RatCycle& b) {
        RatCycle r(a.c);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
        return r;
    }
    friend RatCycle operator-(const RatCycle& a, const RatCycle& b) {
        RatCycle r(a.c);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
        return r;
    }
    friend RatCycle operator-(const RatCycle& a) {
        RatCycle r(a.c);
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend RatCycle operator*(const Rat& s, const RatCycle& a) {
        RatCycle r(a.c);
        for (auto& x : r.c) x *= s;
        return r;
    }
    friend RatCycle operator+(const RatCycle& a, const IntCycle& b) {
        RatCycle r(a.c);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += to_rat(b[i]);
        return r;
    }
    friend RatCycle operator-(const RatCycle& a, const IntCycle& b) {
        RatCycle r(a.c);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= to_rat(b[i]);
        return r;
    }
};

inline IntCycle unit_cycle(std::size_t n, std::size_t v) {
    IntCycle e(n);
    e[v] = 1;
    return e;
}

inline std::vector<int> support(const IntCycle& z) {
    std::vector<int> s;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

inline std::string cycle_str(const IntCycle& z) {
    std::string s = "(";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(z[i]);
    }
    return s + ")";
}

inline std::string cycle_str(const RatCycle& z) {
    std::string s = "(";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) s += ",";
        s += rat_str(z[i]);
    }
    return s + ")";
}

}  // namespace reslat

#endif
