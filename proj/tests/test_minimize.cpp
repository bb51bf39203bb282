#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reslat/minimize.hpp"
#include "reslat/oracle.hpp"
#include "test_util.hpp"

using namespace reslat;
using namespace reslat::testutil;

TEST_CASE("min_chi_box: spec examples") {
    auto s = single_vertex(-2);
    RatCycle zero(1);

    IntCycle one(1);
    one[0] = 1;
    auto r1 = min_chi_box(s, zero, one, one);
    CHECK(r1.minimum == 1);
    CHECK(r1.argmin_set.size() == 1);
    CHECK(r1.argmin_set[0] == one);

    IntCycle z0(1);
    auto r0 = min_chi_box(s, zero, z0, z0);
    CHECK(r0.minimum == 0);
    CHECK(r0.argmin_set[0].is_zero());

    auto st = star_144();
    IntCycle lo(4), hi(4);
    for (int v = 0; v < 4; ++v) hi[v] = 4;
    auto rs = min_chi_box(st, RatCycle(4), lo, hi);
    CHECK(rs.minimum == 0);
    IntCycle zk(4);
    zk[0] = 2;
    zk[1] = zk[2] = zk[3] = 1;
    bool found = false;
    for (auto& a : rs.argmin_set) found = found || a == zk;
    CHECK(found);
}

TEST_CASE("min_chi_box: guard limit is an error, never truncation") {
    auto g = a_n(6);
    IntCycle lo(6), hi(6);
    for (int v = 0; v < 6; ++v) hi[v] = 100;
    SearchGuards guards;
    guards.max_box_points = 1000;
    CHECK_THROWS_AS((void)min_chi_box(g, RatCycle(6), lo, hi, guards), GuardLimitError);
}

TEST_CASE("min_chi_effective: rationality oracles") {
    auto e8 = e_n(8);
    auto r = min_chi_effective(e8, RatCycle(8), true);
    CHECK(r.minimum == 1);
    CHECK(r.certified);

    auto st = star_144();
    auto rs = min_chi_effective(st, RatCycle(4), true);
    CHECK(rs.minimum == 0);
    CHECK(rs.certified);

    // min over all of L agrees with the effective minimum at shift 0
    auto rz = min_chi_effective(st, RatCycle(4), false);
    CHECK(rz.minimum == 0);
    CHECK(rz.min_over_L_checked);
}

TEST_CASE("min_chi_effective: agrees with plain box brute force") {
    auto s = single_vertex(-2);
    RatCycle shift = -s.dual(0);  // -E*
    auto r = min_chi_effective(s, shift, false);
    IntCycle lo(1), hi(1);
    hi[0] = 8;
    auto brute = min_chi_box(s, shift, lo, hi);
    CHECK(r.minimum == brute.minimum);

    // idempotence under box enlargement
    IntCycle big = r.search_box.upper;
    for (std::size_t v = 0; v < big.size(); ++v) big[v] = 2 * big[v] + 1;
    auto wider = min_chi_box(s, shift, lo, big);
    CHECK(wider.minimum == r.minimum);
}

TEST_CASE("min_chi_effective: random cross-check against reference") {
    std::mt19937_64 rng(7011);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = random_tree(rng, 5, -5, -1);
        const std::size_t n = g.vertex_count();
        RatCycle shift(n);
        std::uniform_int_distribution<int> pick(-2, 2);
        for (std::size_t v = 0; v < n; ++v)
            if (pick(rng) > 0) shift = shift - g.dual(v);
        bool excl = trial % 2 == 0;
        auto fast = min_chi_effective(g, shift, excl);
        auto ref = oracle::min_effective_ref(g, shift, excl);
        CHECK(fast.minimum == ref.minimum);

        // enlarging the certified box does not change the minimum
        IntCycle lo(n), big = fast.search_box.upper;
        for (std::size_t v = 0; v < n; ++v) big[v] = 2 * big[v];
        auto again = min_chi_box(g, shift, lo, big);
        if (excl) CHECK(again.minimum <= fast.minimum);
        else CHECK(again.minimum == fast.minimum);
    }
}

TEST_CASE("laufer_descent: spec examples") {
    auto s = single_vertex(-2);
    IntCycle start(1), lo(1), hi(1);
    start[0] = 3;
    hi[0] = 8;
    auto res = laufer_descent(s, RatCycle(1), start, {lo, hi});
    CHECK(res.is_zero());

    // start already a global minimum stays put
    auto res0 = laufer_descent(s, RatCycle(1), lo, {lo, hi});
    CHECK(res0.is_zero());
}

TEST_CASE("laufer_descent: never beats the oracle, usually matches it") {
    // The descent is advisory: its value can exceed the global minimum on a
    // small fraction of instances (coordinate descent can stall where the
    // Hessian -I is not diagonally dominant). The acceptance suite measures
    // the exact-equality criterion; here we pin the sound invariant and flag
    // the stall rate.
    std::mt19937_64 rng(90125);
    int checked = 0, stalls = 0;
    while (checked < 60) {
        auto g = random_tree(rng, 6, -5, -1);
        const std::size_t n = g.vertex_count();
        RatCycle shift(n);
        std::uniform_int_distribution<int> pick(0, 3);
        for (std::size_t v = 0; v < n; ++v) {
            int p = pick(rng);
            if (p == 1) shift = shift - g.dual(v);
            if (p == 2) shift = shift + g.dual(v);
        }
        IntCycle lo(n), hi(n);
        for (std::size_t v = 0; v < n; ++v) hi[v] = 4;
        auto brute = min_chi_box(g, shift, lo, hi);

        // start from the clamped rounding of the continuous minimizer
        RatCycle xstar = Rat(1, 2) * g.canonical_cycle() - shift;
        IntCycle start(n);
        for (std::size_t v = 0; v < n; ++v) {
            mpz_class fl;
            Rat half = xstar[v] + Rat(1, 2);
            mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
            start[v] = std::clamp<long long>(fl.get_si(), 0, 4);
        }
        auto desc = laufer_descent(g, shift, start, {lo, hi});
        Rat val = chi(g, shift + desc);
        CHECK(val >= brute.minimum);
        if (val != brute.minimum) ++stalls;

        // descent started at a global minimizer must stay there in value
        auto stay = laufer_descent(g, shift, brute.argmin_set[0], {lo, hi});
        CHECK(chi(g, shift + stay) == brute.minimum);
        ++checked;
    }
    MESSAGE("descent stalled above the minimum on ", stalls, "/", checked, " instances");
    CHECK(stalls <= 6);  // empirical regression bound, not a correctness claim
}

TEST_CASE("argmin_max_element") {
    auto s = single_vertex(-2);
    IntCycle z0(1);
    auto r0 = min_chi_box(s, RatCycle(1), z0, z0);
    auto m0 = argmin_max_element(r0);
    REQUIRE(m0.maximum.has_value());
    CHECK(m0.maximum->is_zero());

    // incomparable argmins: fabricate a result
    MinChiResult fake;
    fake.minimum = 0;
    IntCycle a(2), b(2);
    a[0] = 1;
    b[1] = 1;
    fake.argmin_set = {a, b};
    fake.argmin_count = 2;
    fake.argmin_join = cmax(a, b);
    fake.join_attains = false;
    fake.maximal_sample = {a, b};
    auto mx = argmin_max_element(fake);
    CHECK(!mx.maximum.has_value());
    REQUIRE(mx.witnesses.size() == 2);
    CHECK(!leq(mx.witnesses[0], mx.witnesses[1]));
    CHECK(!leq(mx.witnesses[1], mx.witnesses[0]));
}

TEST_CASE("box minimum bounds every sample point") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_tree(rng, 5, -4, -1);
        const std::size_t n = g.vertex_count();
        IntCycle lo(n), hi(n);
        for (std::size_t v = 0; v < n; ++v) hi[v] = 3;
        auto res = min_chi_box(g, RatCycle(n), lo, hi);
        for (int s = 0; s < 10; ++s) {
            auto l = random_cycle(rng, n, 0, 3);
            CHECK(res.minimum <= chi(g, l));
        }
        auto ref = oracle::min_box_ref(g, RatCycle(n), lo, hi);
        CHECK(ref.minimum == res.minimum);
        CHECK(ref.argmins.size() == res.argmin_count);
    }
}
