#include "reslat/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace reslat::oracle {

namespace {

Rat pairing_ref(const ResolutionGraph& g, const RatCycle& a, const RatCycle& b) {
    const std::size_t n = g.vertex_count();
    Rat acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long m = i == j ? g.euler(i) : (g.has_edge(i, j) ? 1 : 0);
            if (m != 0) acc += a[i] * b[j] * to_rat(m);
        }
    return acc;
}

// Gaussian elimination solve I x = rhs over mpqers.
RatCycle solve_ref(const ResolutionGraph& g, const std::vector<Rat>& rhs) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = to_rat(i == j ? g.euler(i) : (g.has_edge(i, j) ? 1 : 0));
        a[i][n] = rhs[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("solve_ref: singular");
        std::swap(a[piv], a[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    RatCycle x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

template <class F>
void box_walk(const IntCycle& lower, const IntCycle& upper, F&& f) {
    IntCycle cur = lower;
    for (;;) {
        f(cur);
        std::size_t pos = upper.size();
        while (pos > 0) {
            --pos;
            if (cur[pos] < upper[pos]) {
                cur[pos] += 1;
                break;
            }
            if (pos == 0) return;
            cur[pos] = lower[pos];
        }
    }
}

long long floor_sqrt_plus(const Rat& center, const Rat& radicand) {
    if (radicand < 0) return -1;
    double est =
        mpq_get_d(center.get_mpq_t()) + std::sqrt(mpq_get_d(radicand.get_mpq_t()));
    long long k = static_cast<long long>(est) + 3;
    auto inside = [&](long long x) {
        Rat d = to_rat(x) - center;
        if (d <= 0) return true;
        return d * d <= radicand;
    };
    while (!inside(k)) --k;
    while (inside(k + 1)) ++k;
    return k;
}

}  // namespace

Rat chi_ref(const ResolutionGraph& g, const RatCycle& l) {
    RatCycle zk = canonical_cycle_ref(g);
    return -pairing_ref(g, l, l - zk) / 2;
}

RatCycle canonical_cycle_ref(const ResolutionGraph& g) {
    std::vector<Rat> rhs(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) rhs[v] = to_rat(g.euler(v) + 2);
    return solve_ref(g, rhs);
}

mpz_class determinant_ref(const ResolutionGraph& g) {
    // Expansion-free: rational Gaussian elimination, product of pivots.
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = to_rat(i == j ? g.euler(i) : (g.has_edge(i, j) ? 1 : 0));
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    if (det.get_den() != 1) throw std::logic_error("determinant_ref: non-integer determinant");
    return det.get_num();
}

MinRef min_box_ref(const ResolutionGraph& g, const RatCycle& shift, const IntCycle& lower,
                   const IntCycle& upper, const IntCycle* skip) {
    MinRef out;
    bool have = false;
    box_walk(lower, upper, [&](const IntCycle& l) {
        if (skip && l == *skip) return;
        Rat c = chi_ref(g, shift + l);
        if (!have || c < out.minimum) {
            out.minimum = c;
            out.argmins.assign(1, l);
            have = true;
        } else if (c == out.minimum) {
            out.argmins.push_back(l);
        }
    });
    if (!have) throw std::invalid_argument("min_box_ref: empty search set");
    return out;
}

MinRef min_effective_ref(const ResolutionGraph& g, const RatCycle& shift, bool exclude_zero) {
    const std::size_t n = g.vertex_count();
    RatCycle zk = canonical_cycle_ref(g);
    RatCycle xstar = Rat(1, 2) * zk - shift;
    Rat m_cont = chi_ref(g, shift + xstar);

    std::optional<Rat> m0;
    auto consider = [&](const IntCycle& p) {
        if (exclude_zero && p.is_zero()) return;
        if (!p.is_effective()) return;
        Rat c = chi_ref(g, shift + p);
        if (!m0 || c < *m0) m0 = c;
    };
    consider(IntCycle(n));
    for (std::size_t v = 0; v < n; ++v) consider(unit_cycle(n, v));
    IntCycle rounded(n);
    for (std::size_t v = 0; v < n; ++v) {
        mpz_class fl;
        Rat half = xstar[v] + Rat(1, 2);
        mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
        rounded[v] = std::max(0LL, static_cast<long long>(fl.get_si()));
    }
    consider(rounded);

    // Any effective l with chi(shift+l) <= m0 lies in this box.
    IntCycle lower(n), upper(n);
    for (std::size_t v = 0; v < n; ++v) {
        Rat radicand = 2 * (*m0 - m_cont) * g.dual(v)[v];
        upper[v] = std::max(1LL, floor_sqrt_plus(xstar[v], radicand));
    }
    IntCycle zero(n);
    return min_box_ref(g, shift, lower, upper, exclude_zero ? &zero : nullptr);
}

long long h1_ref(const ResolutionGraph& g, const IntCycle& z) {
    if (z.is_zero()) return 0;
    long long total = 0;
    for (const auto& comp : support_components(g, z)) {
        IntCycle zc(z.size());
        for (int v : comp) zc[v] = z[v];
        IntCycle zero(z.size());
        auto m = min_box_ref(g, RatCycle(z.size()), zero, zc, &zero);
        total += to_long(1 - m.minimum);
    }
    return total;
}

long long h1_natural_ref(const ResolutionGraph& g, const IntCycle& z, const RatCycle& lp) {
    IntCycle zero(z.size());
    auto m = min_box_ref(g, lp, zero, z, nullptr);
    return to_long(chi_ref(g, lp) - m.minimum);
}

long long e_z_ref(const ResolutionGraph& g, const IntCycle& z, const std::vector<int>& j) {
    IntCycle restricted = z;
    for (int v : j) restricted[v] = 0;
    return h1_ref(g, z) - h1_ref(g, restricted);
}

long long pg_ref(const ResolutionGraph& g) {
    return to_long(1 - min_effective_ref(g, RatCycle(g.vertex_count()), true).minimum);
}

bool rational_ref(const ResolutionGraph& g) { return pg_ref(g) == 0; }

bool has_regular_ref(const ResolutionGraph& g, const IntCycle& z) {
    if (support_components(g, z).size() != 1) return false;
    Rat cz = chi_ref(g, RatCycle(z));
    bool ok = true;
    IntCycle zero(z.size());
    box_walk(zero, z, [&](const IntCycle& l) {
        if (l == z) return;
        if (chi_ref(g, RatCycle(l)) <= cz) ok = false;
    });
    return ok;
}

bool semigroup_ref(const ResolutionGraph& g, const RatCycle& lp) {
    if (lp.is_zero()) return true;
    return chi_ref(g, lp) < min_effective_ref(g, lp, true).minimum;
}

long long hfrak_ref(const ResolutionGraph& g, const IntCycle& l0) {
    if (l0.is_zero()) return 0;
    Rat a = min_effective_ref(g, RatCycle(l0), false).minimum;
    Rat b = min_effective_ref(g, RatCycle(g.vertex_count()), false).minimum;
    return to_long(a - b) + (rational_ref(g) ? 0 : 1);
}

long long h1_resolution_ref(const ResolutionGraph& g, const RatCycle& lp) {
    Rat m = min_effective_ref(g, lp, false).minimum;
    long long base = to_long(chi_ref(g, lp) - m);
    bool nonpos = true;
    for (const auto& x : lp.c)
        if (x > 0) nonpos = false;
    if (nonpos && !rational_ref(g)) base += 1;
    return base;
}

bool is_minimal_cohomological_ref(const ResolutionGraph& g, const IntCycle& z_input,
                                  const IntCycle& candidate) {
    long long target = h1_ref(g, z_input);
    if (!leq(candidate, z_input) || !candidate.is_effective()) return false;
    if (h1_ref(g, candidate) != target) return false;
    bool minimal = true;
    IntCycle zero(z_input.size());
    box_walk(zero, candidate, [&](const IntCycle& q) {
        if (q == candidate || !minimal) return;
        if (h1_ref(g, q) == target) minimal = false;
    });
    return minimal;
}

}  // namespace reslat::oracle
