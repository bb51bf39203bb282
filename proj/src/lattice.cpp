#include "reslat/lattice.hpp"

#include <stdexcept>

namespace reslat {

namespace {
void check_size(const ResolutionGraph& g, std::size_t n, const char* who) {
    if (n != g.vertex_count())
        throw std::invalid_argument(std::string(who) + ": cycle indexed by a different vertex set");
}
}  // namespace

Rat intersection_pairing(const ResolutionGraph& g, const RatCycle& a, const RatCycle& b) {
    check_size(g, a.size(), "intersection_pairing");
    check_size(g, b.size(), "intersection_pairing");
    Rat acc = 0;
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[v] == 0) continue;
        Rat row = to_rat(g.euler(v)) * b[v];
        for (int w : g.adjacency()[v]) row += b[w];
        acc += a[v] * row;
    }
    return acc;
}

long long intersection_pairing(const ResolutionGraph& g, const IntCycle& a, const IntCycle& b) {
    check_size(g, a.size(), "intersection_pairing");
    check_size(g, b.size(), "intersection_pairing");
    long long acc = 0;
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[v] == 0) continue;
        long long row = g.euler(v) * b[v];
        for (int w : g.adjacency()[v]) row += b[w];
        acc += a[v] * row;
    }
    return acc;
}

Rat intersection_pairing(const ResolutionGraph& g, const RatCycle& a, const IntCycle& b) {
    return intersection_pairing(g, a, RatCycle(b));
}

Rat chi(const ResolutionGraph& g, const RatCycle& l) {
    // (l, Z_K) = sum l_v (e_v + 2) by adjunction; avoids touching Z_K itself.
    check_size(g, l.size(), "chi");
    Rat lk = 0;
    for (std::size_t v = 0; v < l.size(); ++v) lk += l[v] * to_rat(g.euler(v) + 2);
    Rat ll = intersection_pairing(g, l, l);
    return (lk - ll) / 2;
}

Rat chi(const ResolutionGraph& g, const IntCycle& l) {
    check_size(g, l.size(), "chi");
    long long lk = 0;
    for (std::size_t v = 0; v < l.size(); ++v) lk += l[v] * (g.euler(v) + 2);
    long long ll = intersection_pairing(g, l, l);
    return to_rat(lk - ll) / 2;
}

bool in_dual_lattice(const ResolutionGraph& g, const RatCycle& lp) {
    check_size(g, lp.size(), "in_dual_lattice");
    for (std::size_t v = 0; v < lp.size(); ++v) {
        Rat p = to_rat(g.euler(v)) * lp[v];
        for (int w : g.adjacency()[v]) p += lp[w];
        if (!is_integer(p)) return false;
    }
    return true;
}

RatCycle class_rep(const ResolutionGraph& g, const RatCycle& lp) {
    check_size(g, lp.size(), "class_rep");
    if (!in_dual_lattice(g, lp))
        throw std::invalid_argument("class_rep: input is not in the dual lattice L'");
    RatCycle r(lp.size());
    for (std::size_t v = 0; v < lp.size(); ++v) {
        // r_v = lp_v - floor(lp_v), in [0,1).
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), lp[v].get_num().get_mpz_t(), lp[v].get_den().get_mpz_t());
        r[v] = lp[v] - Rat(fl);
    }
    return r;
}

LipmanResult lipman_cone_member(const ResolutionGraph& g, const RatCycle& lp) {
    check_size(g, lp.size(), "lipman_cone_member");
    LipmanResult res;
    res.member = true;
    res.dual_coords.assign(lp.size(), Rat(0));
    for (std::size_t v = 0; v < lp.size(); ++v) {
        Rat p = to_rat(g.euler(v)) * lp[v];
        for (int w : g.adjacency()[v]) p += lp[w];
        if (p > 0) res.member = false;
        res.dual_coords[v] = -p;
    }
    if (!res.member) res.dual_coords.clear();
    return res;
}

mpz_class discriminant_order(const ResolutionGraph& g) { return abs(g.determinant()); }

std::vector<Rat> dual_coordinates(const ResolutionGraph& g, const RatCycle& lp) {
    check_size(g, lp.size(), "dual_coordinates");
    std::vector<Rat> a(lp.size(), Rat(0));
    for (std::size_t v = 0; v < lp.size(); ++v) {
        Rat p = to_rat(g.euler(v)) * lp[v];
        for (int w : g.adjacency()[v]) p += lp[w];
        a[v] = -p;
    }
    return a;
}

}  // namespace reslat
