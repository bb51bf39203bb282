#include "reslat/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <type_traits>

namespace reslat {

namespace {

template <class S>
S scalar_of(long long x) {
    if constexpr (std::is_same_v<S, long long>) return x;
    else return to_rat(x);
}

Rat rat_of_scalar(long long x) { return to_rat(x); }
Rat rat_of_scalar(const Rat& x) { return x; }

// 2*chi(shift + l) = G(l) + 2*chi(shift) with G(l) = -(l,l) + (l, w) and
// w = I*(Z_K - 2*shift). For shift in L' the weight vector w is integral,
// so the whole scan runs in machine integers; otherwise it runs in mpq.
struct ScanSetup {
    std::vector<Rat> w;
    Rat two_chi_shift;
    bool integral_w = true;
};

ScanSetup scan_setup(const ResolutionGraph& g, const RatCycle& shift) {
    const std::size_t n = g.vertex_count();
    if (shift.size() != n) throw std::invalid_argument("scan: shift indexed by wrong vertex set");
    ScanSetup s;
    s.w.assign(n, Rat(0));
    for (std::size_t v = 0; v < n; ++v) {
        // (I*Z_K)_v = e_v + 2 by adjunction.
        Rat wv = to_rat(g.euler(v) + 2);
        Rat is = to_rat(g.euler(v)) * shift[v];
        for (int u : g.adjacency()[v]) is += shift[u];
        wv -= 2 * is;
        if (!is_integer(wv)) s.integral_w = false;
        s.w[v] = wv;
    }
    s.two_chi_shift = 2 * chi(g, shift);
    return s;
}

// Odometer over [lower,upper], last coordinate fastest (lexicographic
// ascending in canonical vertex order). Maintains t = I*l and G
// incrementally. Scalar is long long or Rat.
template <class Scalar, class Visit>
void scan_core(const ResolutionGraph& g, const ScanSetup& setup, const IntCycle& lower,
               const IntCycle& upper, Visit&& visit) {
    const std::size_t n = g.vertex_count();
    std::vector<long long> cur(lower.c);
    std::vector<Scalar> w(n), t(n);
    for (std::size_t v = 0; v < n; ++v) {
        if constexpr (std::is_same_v<Scalar, long long>)
            w[v] = to_long(setup.w[v]);
        else
            w[v] = setup.w[v];
    }

    auto recompute = [&] {
        Scalar G = scalar_of<Scalar>(0);
        for (std::size_t v = 0; v < n; ++v) {
            Scalar tv = scalar_of<Scalar>(g.euler(v) * cur[v]);
            for (int u : g.adjacency()[v]) tv += scalar_of<Scalar>(cur[u]);
            t[v] = tv;
        }
        for (std::size_t v = 0; v < n; ++v) G += scalar_of<Scalar>(cur[v]) * (w[v] - t[v]);
        return G;
    };

    Scalar G = recompute();
    IntCycle point{cur};
    for (;;) {
        point.c = cur;
        if (!visit(G, point)) return;
        // advance
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (cur[pos] < upper[pos]) break;
            if (pos == 0) return;  // exhausted
            // reset this coordinate to lower and carry on
            long long d = lower[pos] - cur[pos];
            G += scalar_of<Scalar>(d) * (w[pos] - 2 * t[pos]) -
                 scalar_of<Scalar>(g.euler(pos) * d * d);
            cur[pos] = lower[pos];
            t[pos] += scalar_of<Scalar>(g.euler(pos) * d);
            for (int u : g.adjacency()[pos]) t[u] += scalar_of<Scalar>(d);
        }
        // increment coordinate pos by 1
        G += w[pos] - 2 * t[pos] - scalar_of<Scalar>(g.euler(pos));
        cur[pos] += 1;
        t[pos] += scalar_of<Scalar>(g.euler(pos));
        for (int u : g.adjacency()[pos]) t[u] += scalar_of<Scalar>(1);
    }
}

// Conservative overflow check for the machine-integer path.
bool int_path_safe(const ResolutionGraph& g, const ScanSetup& setup, const IntCycle& lower,
                   const IntCycle& upper) {
    if (!setup.integral_w) return false;
    const std::size_t n = g.vertex_count();
    mpz_class bmax = 1, wmax = 0, emax = 1;
    for (std::size_t v = 0; v < n; ++v) {
        mpz_class b = to_mpz(std::max(std::abs(lower[v]), std::abs(upper[v])));
        bmax = std::max(bmax, b);
        wmax = std::max(wmax, mpz_class(abs(setup.w[v].get_num())));
        emax = std::max(emax, to_mpz(std::abs(g.euler(v)) + g.valency(v)));
    }
    // |t_v| <= emax*bmax, |G| <= n*bmax*(wmax + 2*emax*bmax + emax)
    mpz_class gbound = mpz_class(n) * bmax * (wmax + 2 * emax * bmax + emax);
    return gbound < mpz_class("2305843009213693952");  // 2^61
}

template <class Scalar>
Scalar g_threshold(const Rat& chi_threshold, const Rat& two_chi_shift);

template <>
long long g_threshold<long long>(const Rat& thr, const Rat& two_chi_shift) {
    // G <= 2*thr - two_chi_shift, both sides exact; floor is safe for int G.
    Rat rhs = 2 * thr - two_chi_shift;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), rhs.get_num().get_mpz_t(), rhs.get_den().get_mpz_t());
    if (!fl.fits_slong_p()) return fl < 0 ? std::numeric_limits<long long>::min() / 2
                                          : std::numeric_limits<long long>::max() / 2;
    return fl.get_si();
}

template <>
Rat g_threshold<Rat>(const Rat& thr, const Rat& two_chi_shift) {
    return 2 * thr - two_chi_shift;
}

// floor(c + sqrt(r)) for rationals r >= 0, exact.
long long floor_plus_sqrt(const Rat& c, const Rat& r) {
    if (r < 0) throw std::logic_error("floor_plus_sqrt: negative radicand");
    double est = mpq_get_d(c.get_mpq_t()) + std::sqrt(mpq_get_d(r.get_mpq_t()));
    long long k = static_cast<long long>(est) + 3;
    auto ok = [&](long long x) {
        Rat d = to_rat(x) - c;
        if (d <= 0) return true;
        return d * d <= r;
    };
    while (!ok(k)) --k;
    while (ok(k + 1)) ++k;
    return k;
}

}  // namespace

SearchGuards SearchGuards::from_env() {
    SearchGuards g;
    if (const char* s = std::getenv("RESLAT_MAX_BOX_POINTS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) g.max_box_points = v;
    }
    if (const char* s = std::getenv("RESLAT_MAX_ARGMIN")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) g.max_argmin = static_cast<std::size_t>(v);
    }
    return g;
}

namespace detail {

std::uint64_t box_volume_checked(const IntCycle& lower, const IntCycle& upper,
                                 std::uint64_t max_points, const char* who) {
    std::uint64_t vol = 1;
    for (std::size_t v = 0; v < lower.size(); ++v) {
        if (lower[v] > upper[v])
            throw std::invalid_argument(std::string(who) + ": empty box (lower > upper)");
        std::uint64_t span = static_cast<std::uint64_t>(upper[v] - lower[v]) + 1;
        if (vol > max_points / span + 1) vol = max_points + 1;
        else vol *= span;
        if (vol > max_points)
            throw GuardLimitError(std::string(who) + ": search too large (box exceeds " +
                                  std::to_string(max_points) + " points)");
    }
    return vol;
}

BoxScan scan_min(const ResolutionGraph& g, const RatCycle& shift, const IntCycle& lower,
                 const IntCycle& upper, const IntCycle* skip, const Rat* stop_at_leq,
                 std::uint64_t max_points) {
    box_volume_checked(lower, upper, max_points, "scan_min");
    auto setup = scan_setup(g, shift);
    BoxScan out;

    auto run = [&](auto scalar_tag) {
        using S = decltype(scalar_tag);
        bool have = false;
        S best{};
        std::optional<S> stopg;
        if (stop_at_leq) stopg = g_threshold<S>(*stop_at_leq, setup.two_chi_shift);
        scan_core<S>(g, setup, lower, upper, [&](const S& G, const IntCycle& l) {
            if (skip && l == *skip) return true;
            if (!have || G < best) {
                best = G;
                out.first_argmin = l;
                have = true;
            }
            if (stopg && G <= *stopg) {
                out.stopped_early = true;
                return false;
            }
            return true;
        });
        if (have) {
            out.nonempty = true;
            out.minimum = (rat_of_scalar(best) + setup.two_chi_shift) / 2;
        }
    };

    if (int_path_safe(g, setup, lower, upper)) run(static_cast<long long>(0));
    else run(Rat(0));
    return out;
}

}  // namespace detail

namespace {

// Shared enumeration with argmin bookkeeping.
MinChiResult enumerate_box(const ResolutionGraph& g, const RatCycle& shift, const IntCycle& lower,
                           const IntCycle& upper, const IntCycle* skip, const SearchGuards& guards,
                           const IntCycle* shell_of) {
    detail::box_volume_checked(lower, upper, guards.max_box_points, "min_chi_box");
    auto setup = scan_setup(g, shift);
    const std::size_t n = g.vertex_count();

    MinChiResult res;
    res.search_box = {lower, upper};

    auto run = [&](auto scalar_tag) {
        using S = decltype(scalar_tag);
        bool have = false;
        S best{};
        bool have_shell = false;
        S shell_best{};
        auto note_shell = [&](const S& G, const IntCycle& l) {
            if (!shell_of) return;
            for (std::size_t v = 0; v < n; ++v)
                if (l[v] == (*shell_of)[v]) {
                    if (!have_shell || G < shell_best) {
                        shell_best = G;
                        have_shell = true;
                    }
                    return;
                }
        };
        scan_core<S>(g, setup, lower, upper, [&](const S& G, const IntCycle& l) {
            if (skip && l == *skip) return true;
            note_shell(G, l);
            if (!have || G < best) {
                have = true;
                best = G;
                res.argmin_set.clear();
                res.argmin_set.push_back(l);
                res.argmin_count = 1;
                res.argmin_truncated = false;
                res.argmin_join = l;
                res.maximal_sample.assign(1, l);
                return true;
            }
            if (G == best) {
                ++res.argmin_count;
                if (res.argmin_set.size() < guards.max_argmin) res.argmin_set.push_back(l);
                else res.argmin_truncated = true;
                res.argmin_join = cmax(res.argmin_join, l);
                // keep a small antichain of maximal argmins
                bool dominated = false;
                for (auto& m : res.maximal_sample)
                    if (leq(l, m)) {
                        dominated = true;
                        break;
                    }
                if (!dominated) {
                    std::erase_if(res.maximal_sample,
                                  [&](const IntCycle& m) { return leq(m, l); });
                    if (res.maximal_sample.size() < 8) res.maximal_sample.push_back(l);
                }
            }
            return true;
        });
        if (!have) throw std::invalid_argument("min_chi_box: empty search set");
        res.minimum = (rat_of_scalar(best) + setup.two_chi_shift) / 2;
        res.shell_clear = shell_of && (!have_shell || shell_best > best);
    };

    if (int_path_safe(g, setup, lower, upper)) run(static_cast<long long>(0));
    else run(Rat(0));

    res.join_attains = chi(g, shift + res.argmin_join) == res.minimum;
    return res;
}

}  // namespace

MinChiResult min_chi_box(const ResolutionGraph& g, const RatCycle& shift, const IntCycle& lower,
                         const IntCycle& upper, const SearchGuards& guards) {
    if (lower.size() != g.vertex_count() || upper.size() != g.vertex_count())
        throw std::invalid_argument("min_chi_box: box indexed by wrong vertex set");
    return enumerate_box(g, shift, lower, upper, nullptr, guards, nullptr);
}

MinChiResult min_chi_effective(const ResolutionGraph& g, const RatCycle& shift, bool exclude_zero,
                               const SearchGuards& guards) {
    const std::size_t n = g.vertex_count();
    if (shift.size() != n)
        throw std::invalid_argument("min_chi_effective: shift indexed by wrong vertex set");

    // Continuous minimizer of chi(shift + x) is x* = Z_K/2 - shift.
    RatCycle xstar = Rat(1, 2) * g.canonical_cycle() - shift;
    Rat m_cont = chi(g, shift + xstar);

    // Feasible upper bound for the minimum.
    IntCycle rounded(n);
    for (std::size_t v = 0; v < n; ++v) {
        mpz_class fl;
        Rat half = xstar[v] + Rat(1, 2);
        mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
        rounded[v] = std::max(0LL, static_cast<long long>(fl.get_si()));
    }
    std::optional<Rat> m0;
    auto consider = [&](const IntCycle& p) {
        if (exclude_zero && p.is_zero()) return;
        Rat c = chi(g, shift + p);
        if (!m0 || c < *m0) m0 = c;
    };
    consider(rounded);
    consider(IntCycle(n));
    for (std::size_t v = 0; v < n; ++v) consider(unit_cycle(n, v));

    // Every l >= 0 with chi(shift+l) <= m0 satisfies
    // (l_v - x*_v)^2 <= 2 (m0 - m_cont) (E*_v)_v.
    auto bound_from = [&](const Rat& m) {
        IntCycle upper(n);
        Rat gap = m - m_cont;
        if (gap < 0) gap = 0;
        for (std::size_t v = 0; v < n; ++v) {
            Rat r = 2 * gap * g.dual(v)[v];
            upper[v] = std::max(0LL, floor_plus_sqrt(xstar[v], r));
        }
        return upper;
    };

    IntCycle lower(n), upper = bound_from(*m0);
    for (std::size_t v = 0; v < n; ++v) upper[v] = std::max(upper[v], 1LL);

    IntCycle zero(n);
    MinChiResult res;
    for (;;) {
        res = enumerate_box(g, shift, lower, upper, exclude_zero ? &zero : nullptr, guards, &upper);
        IntCycle need = bound_from(res.minimum);
        bool contained = true;
        for (std::size_t v = 0; v < n; ++v)
            if (need[v] > upper[v]) contained = false;
        if (contained) {
            res.certified = true;
            break;
        }
        for (std::size_t v = 0; v < n; ++v) upper[v] = std::max(upper[v] * 2, need[v]);
    }
    res.search_box = {lower, upper};

    if (shift.is_zero() && !exclude_zero) {
        // Verify the stated identity min over L_{>=0} = min over L by scanning
        // the signed certified box (skipped quietly if the guard forbids it).
        IntCycle slo(n), shi(n);
        Rat gap = res.minimum - m_cont;
        if (gap < 0) gap = 0;
        for (std::size_t v = 0; v < n; ++v) {
            Rat r = 2 * gap * g.dual(v)[v];
            shi[v] = floor_plus_sqrt(xstar[v], r);
            slo[v] = std::min(0LL, -floor_plus_sqrt(-xstar[v], r));
        }
        try {
            auto full = detail::scan_min(g, shift, slo, shi, nullptr, nullptr,
                                         guards.max_box_points);
            res.min_over_L_checked = full.nonempty && full.minimum == res.minimum;
        } catch (const GuardLimitError&) {
            res.min_over_L_checked = false;
        }
    }
    return res;
}

IntCycle laufer_descent(const ResolutionGraph& g, const RatCycle& shift, const IntCycle& start,
                        const Box& box) {
    const std::size_t n = g.vertex_count();
    if (!leq(box.lower, start) || !leq(start, box.upper))
        throw std::invalid_argument("laufer_descent: start outside box");
    IntCycle cur = start;
    Rat cur_chi = chi(g, shift + cur);
    for (;;) {
        bool moved = false;
        IntCycle best_pt;
        Rat best_chi;
        for (std::size_t v = 0; v < n && true; ++v) {
            for (int dir : {+1, -1}) {
                IntCycle cand = cur;
                cand[v] += dir;
                if (cand[v] < box.lower[v] || cand[v] > box.upper[v]) continue;
                Rat c = chi(g, shift + cand);
                if (c >= cur_chi) continue;
                if (!moved || c < best_chi) {
                    moved = true;
                    best_chi = c;
                    best_pt = cand;
                }
            }
        }
        if (!moved) return cur;
        cur = best_pt;
        cur_chi = best_chi;
    }
}

ArgminMax argmin_max_element(const MinChiResult& result) {
    ArgminMax out;
    if (result.argmin_count == 0) return out;
    if (result.join_attains) {
        out.maximum = result.argmin_join;
        return out;
    }
    if (result.maximal_sample.size() >= 2) {
        out.witnesses = {result.maximal_sample[0], result.maximal_sample[1]};
    }
    return out;
}

}  // namespace reslat
