#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reslat/lattice.hpp"
#include "test_util.hpp"

using namespace reslat;
using namespace reslat::testutil;

TEST_CASE("validate: single vertices") {
    RawGraph ok;
    ok.vertices.push_back({"a", -2, 0});
    CHECK(validate_graph(ok).ok());

    RawGraph bad;
    bad.vertices.push_back({"a", 0, 0});
    auto res = validate_graph(bad);
    CHECK(!res.ok());
    CHECK(res.diagnostics[0].code == "not-negative-definite");
}

TEST_CASE("validate: determinant zero pair") {
    RawGraph raw;
    raw.vertices.push_back({"a", -1, 0});
    raw.vertices.push_back({"b", -1, 0});
    raw.edges.push_back({"a", "b"});
    auto res = validate_graph(raw);
    CHECK(!res.ok());
    bool neg = false;
    for (auto& d : res.diagnostics)
        if (d.code == "not-negative-definite" || d.code == "zero-determinant") neg = true;
    CHECK(neg);
}

TEST_CASE("validate: non-tree and genus diagnostics") {
    RawGraph cyclic;
    for (std::string id : {"a", "b", "c"}) cyclic.vertices.push_back({id, -3, 0});
    cyclic.edges = {{"a", "b"}, {"b", "c"}, {"a", "c"}};
    auto res = validate_graph(cyclic);
    CHECK(!res.ok());
    CHECK(res.diagnostics[0].code == "not-a-tree");

    RawGraph genus;
    genus.vertices.push_back({"a", -2, 1});
    auto g2 = validate_graph(genus);
    CHECK(!g2.ok());
    CHECK(g2.diagnostics[0].code == "nonzero-genus");

    RawGraph disconnected;
    disconnected.vertices.push_back({"a", -2, 0});
    disconnected.vertices.push_back({"b", -2, 0});
    CHECK(!validate_graph(disconnected).ok());
}

TEST_CASE("pairing on small graphs") {
    auto g = a_n(2);
    IntCycle e1 = unit_cycle(2, 0), e2 = unit_cycle(2, 1);
    CHECK(intersection_pairing(g, e1, e1) == -2);
    CHECK(intersection_pairing(g, e1, e2) == 1);

    auto s = single_vertex(-2);
    IntCycle e(1);
    e[0] = 1;
    CHECK(intersection_pairing(s, e, e) == -2);
}

TEST_CASE("dual basis: Kronecker and examples") {
    auto s = single_vertex(-2);
    CHECK(s.dual(0)[0] == Rat(1, 2));

    auto g = a_n(2);
    CHECK(g.dual(0)[0] == Rat(2, 3));
    CHECK(g.dual(0)[1] == Rat(1, 3));
    CHECK(g.dual(1)[0] == Rat(1, 3));
    CHECK(g.dual(1)[1] == Rat(2, 3));

    for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t w = 0; w < 2; ++w) {
            RatCycle ew(2);
            ew[w] = 1;
            CHECK(intersection_pairing(g, g.dual(v), ew) == (v == w ? Rat(-1) : Rat(0)));
        }
}

TEST_CASE("canonical cycle examples") {
    CHECK(single_vertex(-2).canonical_cycle().is_zero());

    auto m1 = single_vertex(-1);
    CHECK(m1.canonical_cycle()[0] == Rat(-1));

    auto st = star_144();
    auto zk = st.canonical_cycle();
    // canonical order: c, l1, l2, l3
    CHECK(zk[0] == 2);
    CHECK(zk[1] == 1);
    CHECK(zk[2] == 1);
    CHECK(zk[3] == 1);
    RatCycle ec(4);
    ec[0] = 1;
    CHECK(intersection_pairing(st, zk, ec) == 1);
    RatCycle el(4);
    el[1] = 1;
    CHECK(intersection_pairing(st, zk, el) == -2);
}

TEST_CASE("chi basics") {
    auto s = single_vertex(-2);
    CHECK(chi(s, RatCycle(1)) == 0);
    for (long long n = -3; n <= 3; ++n) {
        IntCycle z(1);
        z[0] = n;
        CHECK(chi(s, z) == to_rat(n * n));
    }
    CHECK(chi(s, s.canonical_cycle()) == 0);
}

TEST_CASE("class representative in the unit cube") {
    auto s = single_vertex(-2);
    RatCycle half(1);
    half[0] = Rat(1, 2);
    CHECK(class_rep(s, half)[0] == Rat(1, 2));
    RatCycle v(1);
    v[0] = Rat(5, 2);
    CHECK(class_rep(s, v)[0] == Rat(1, 2));
    RatCycle in_l(1);
    in_l[0] = 7;
    CHECK(class_rep(s, in_l).is_zero());

    RatCycle bad(1);
    bad[0] = Rat(1, 3);
    CHECK_THROWS_AS((void)class_rep(s, bad), std::invalid_argument);
}

TEST_CASE("lipman cone membership") {
    auto g = a_n(2);
    RatCycle zero(2);
    auto r0 = lipman_cone_member(g, zero);
    CHECK(r0.member);
    CHECK(r0.dual_coords[0] == 0);

    auto rd = lipman_cone_member(g, g.dual(0));
    CHECK(rd.member);
    CHECK(rd.dual_coords[0] == 1);
    CHECK(rd.dual_coords[1] == 0);

    RatCycle neg(2);
    neg[0] = -1;  // -E_1: (.,E_1) = 2 > 0
    CHECK(!lipman_cone_member(g, neg).member);
}

TEST_CASE("discriminant orders") {
    CHECK(discriminant_order(single_vertex(-2)) == 2);
    CHECK(discriminant_order(a_n(2)) == 3);
    CHECK(discriminant_order(e_n(8)) == 1);
    CHECK(discriminant_order(e_n(7)) == 2);
    CHECK(discriminant_order(e_n(6)) == 3);
    CHECK(discriminant_order(d_n(4)) == 4);
}

TEST_CASE("random graphs: exact identities") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_tree(rng, 7, -6, -1);
        const std::size_t n = g.vertex_count();

        // dual basis Kronecker, positivity
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t w = 0; w < n; ++w) {
                RatCycle ew(n);
                ew[w] = 1;
                CHECK(intersection_pairing(g, g.dual(v), ew) == (v == w ? Rat(-1) : Rat(0)));
            }
            for (std::size_t i = 0; i < n; ++i) CHECK(g.dual(v)[i] > 0);
        }

        // adjunction residuals and chi(E_v) = 1
        for (std::size_t v = 0; v < n; ++v) {
            RatCycle ev(n);
            ev[v] = 1;
            CHECK(intersection_pairing(g, g.canonical_cycle(), ev) == to_rat(g.euler(v) + 2));
            CHECK(chi(g, unit_cycle(n, v)) == 1);
        }

        // bilinearity of chi and symmetry of the pairing
        auto a = random_cycle(rng, n, -3, 3);
        auto b = random_cycle(rng, n, -3, 3);
        CHECK(intersection_pairing(g, a, b) == intersection_pairing(g, b, a));
        CHECK(chi(g, a + b) == chi(g, a) + chi(g, b) - to_rat(intersection_pairing(g, a, b)));

        // matrix * inverse = identity exactly
        const auto& inv = g.inverse();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rat acc = 0;
                for (std::size_t k = 0; k < n; ++k)
                    acc += to_rat(g.intersection(i, k)) * inv[k][j];
                CHECK(acc == (i == j ? Rat(1) : Rat(0)));
            }

        // chi grows along every ray: positive leading coefficient
        if (!a.is_zero()) {
            // chi(n a) = alpha n^2 + beta n with alpha = -(a,a)/2 > 0
            CHECK(intersection_pairing(g, a, a) < 0);
        }
    }
}
