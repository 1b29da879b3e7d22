#include <doctest.h>

#include <random>
#include <set>

#include "pdcoh/errors.hpp"
#include "pdcoh/rootdata.hpp"
#include "pdcoh/selftest.hpp"
#include "pdcoh/weyl.hpp"

using namespace pdcoh;

namespace {

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

}  // namespace

TEST_CASE("CartanSpec parsing and validation") {
    CHECK(CartanSpec::parse("GL4").to_string() == "GL4");
    CHECK(CartanSpec::parse("B10").to_string() == "B10");
    CHECK(CartanSpec::parse("A2xA1").to_string() == "A2xA1");
    CHECK(CartanSpec::parse("GL3xTorus1").to_string() == "GL3xTorus1");
    CHECK(CartanSpec::parse("E6xG2").factors.size() == 2);
    CHECK_THROWS_AS(CartanSpec::parse("D2"), Error);
    CHECK_THROWS_AS(CartanSpec::parse("E9"), Error);
    CHECK_THROWS_AS(CartanSpec::parse("Q3"), Error);
    CHECK_THROWS_AS(CartanSpec::parse(""), Error);
    CHECK_THROWS_AS(CartanSpec::parse("A0"), Error);
}

TEST_CASE("GL_3 standard realization") {
    RootDatum d = build_root_datum(CartanSpec::parse("GL3"));
    REQUIRE(d.ambient_rank == 3);
    REQUIRE(d.rank() == 2);
    CHECK(d.simple_roots[0] == qv({1, -1, 0}));
    CHECK(d.simple_roots[1] == qv({0, 1, -1}));
    CHECK(d.positive_roots.size() == 3);
    // standard form on the ambient lattice
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(d.inner[a][b] == (a == b ? Rat(1) : Rat(0)));
    CHECK(d.pairing(d.simple_roots[0], qv({1, 0, 0})) == 1);
}

TEST_CASE("G2 Cartan matrix and positive roots") {
    RootDatum d = build_root_datum(CartanSpec::parse("G2"));
    // rows [[2,-1],[-3,2]] up to transpose convention
    CHECK(d.cartan[0][0] == 2);
    CHECK(d.cartan[1][1] == 2);
    CHECK(d.cartan[0][1] * d.cartan[1][0] == 3);
    CHECK(d.cartan[0][1] == -1);
    CHECK(d.cartan[1][0] == -3);
    CHECK(d.positive_roots.size() == 6);
    CHECK(selftest::oracle::positive_count_by_orbit(d) == 6);
}

TEST_CASE("B2 fundamental coweights satisfy the dual-basis condition") {
    RootDatum d = build_root_datum(CartanSpec::parse("B2"));
    for (std::size_t i = 0; i < d.rank(); ++i)
        for (std::size_t j = 0; j < d.rank(); ++j)
            CHECK(d.pairing(d.simple_roots[i], d.fundamental_coweights[j]) ==
                  (i == j ? Rat(1) : Rat(0)));
}

TEST_CASE("pairing axioms") {
    for (const char* name : {"A3", "B3", "C3", "G2", "F4", "GL4"}) {
        RootDatum d = build_root_datum(CartanSpec::parse(name));
        for (std::size_t i = 0; i < d.rank(); ++i)
            CHECK(d.pairing(d.simple_roots[i], d.simple_coroots[i]) == 2);
    }
    RootDatum a2 = build_root_datum(CartanSpec::parse("A2"));
    CHECK(a2.pairing(a2.simple_roots[0], a2.fundamental_coweights[1]) == 0);
    RootDatum d = build_root_datum(CartanSpec::parse("GL3"));
    CHECK_THROWS_AS(d.pairing(qv({1, 0}), qv({1, 0, 0})), Error);
}

TEST_CASE("positive root counts: generation closure vs reflection-orbit oracle") {
    struct Row {
        const char* name;
        int count;
    };
    const Row rows[] = {{"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},
                        {"B3", 9},  {"B4", 16}, {"C3", 9},  {"C4", 16}, {"D4", 12},
                        {"G2", 6},  {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120},
                        {"GL5", 10}, {"GL2xB2", 5}};
    for (const auto& row : rows) {
        RootDatum d = build_root_datum(CartanSpec::parse(row.name));
        CHECK_MESSAGE(static_cast<int>(d.positive_roots.size()) == row.count, row.name);
        CHECK_MESSAGE(selftest::oracle::positive_count_by_orbit(d) == row.count, row.name);
    }
}

TEST_CASE("positive roots have nonnegative integral coefficients") {
    for (const char* name : {"B3", "F4", "E6"}) {
        RootDatum d = build_root_datum(CartanSpec::parse(name));
        REQUIRE(d.positive_roots.size() == d.positive_root_coeffs.size());
        for (const auto& coef : d.positive_root_coeffs) {
            bool nonneg = true;
            for (const auto& c : coef)
                if (c < 0) nonneg = false;
            CHECK(nonneg);
        }
    }
}

TEST_CASE("inner product: normalization, invariance, factor proportionality") {
    RootDatum a1 = build_root_datum(CartanSpec::parse("A1"));
    CHECK(a1.inner_product(a1.simple_coroots[0], a1.simple_coroots[0]) == 2);

    // short/long coroot ratios: 2 for B/C/F4, 3 for G2
    auto norms = [](const RootDatum& d) {
        std::set<Rat> out;
        for (const auto& c : d.simple_coroots) out.insert(d.inner_product(c, c));
        return out;
    };
    CHECK(norms(build_root_datum(CartanSpec::parse("B3"))) == std::set<Rat>{Rat(2), Rat(4)});
    CHECK(norms(build_root_datum(CartanSpec::parse("C3"))) == std::set<Rat>{Rat(2), Rat(4)});
    CHECK(norms(build_root_datum(CartanSpec::parse("F4"))) == std::set<Rat>{Rat(2), Rat(4)});
    CHECK(norms(build_root_datum(CartanSpec::parse("G2"))) == std::set<Rat>{Rat(2), Rat(6)});
    CHECK(norms(build_root_datum(CartanSpec::parse("E6"))) == std::set<Rat>{Rat(2)});

    // W-invariance on random vectors, exact arithmetic
    std::mt19937 rng(7u);
    for (const char* name : {"B3", "G2", "GL4"}) {
        RootDatum d = build_root_datum(CartanSpec::parse(name));
        auto elements = enumerate_weyl_group(d);
        for (int trial = 0; trial < 100; ++trial) {
            const auto& w = elements[rng() % elements.size()];
            QVec x(d.ambient_rank), y(d.ambient_rank);
            for (int a = 0; a < d.ambient_rank; ++a) {
                x[a] = Rat(static_cast<long>(rng() % 7) - 3);
                y[a] = Rat(static_cast<long>(rng() % 7) - 3);
            }
            CHECK(d.inner_product(imat_apply(w.matrix, x), imat_apply(w.matrix, y)) ==
                  d.inner_product(x, y));
        }
    }
}

TEST_CASE("inner product is positive definite on the coroot span") {
    std::mt19937 rng(11u);
    for (const char* name : {"A3", "B3", "C4", "D4", "G2", "F4", "E6", "GL4"}) {
        RootDatum d = build_root_datum(CartanSpec::parse(name));
        for (int trial = 0; trial < 30; ++trial) {
            QVec v = qvec_zero(d.ambient_rank);
            for (const auto& c : d.simple_coroots) {
                long k = static_cast<long>(rng() % 5) - 2;
                if (k) v = qvec_add(v, qvec_scale(Rat(k), c));
            }
            if (qvec_is_zero(v)) continue;
            CHECK(d.inner_product(v, v) > 0);
        }
    }
}

TEST_CASE("diagram automorphisms") {
    SUBCASE("A3 flip permutes the positive roots") {
        RootDatum d = build_root_datum(CartanSpec::parse("A3"));
        DiagramAutomorphism tau = make_diagram_automorphism(d, {2, 1, 0});
        CHECK(tau.order == 2);
        std::set<QVec> pos(d.positive_roots.begin(), d.positive_roots.end());
        IMat inv = tau.matrix;  // tau has order 2
        for (const auto& beta : d.positive_roots) {
            QVec img(d.ambient_rank, Rat(0));
            for (int a = 0; a < d.ambient_rank; ++a)
                for (int b = 0; b < d.ambient_rank; ++b) img[b] += beta[a] * Rat(inv[a][b]);
            CHECK(pos.count(img) == 1);
        }
    }
    SUBCASE("GL4 flip matrix is minus-reversal") {
        RootDatum d = build_root_datum(CartanSpec::parse("GL4"));
        DiagramAutomorphism tau = make_diagram_automorphism(d, {2, 1, 0});
        QVec mu = qv({1, 0, 0, -1});
        CHECK(tau.apply(mu) == mu);
        CHECK(tau.apply(qv({1, 0, 0, 0})) == qv({0, 0, 0, -1}));
    }
    SUBCASE("D4 swap works, triality is rejected on the orthogonal lattice") {
        RootDatum d = build_root_datum(CartanSpec::parse("D4"));
        DiagramAutomorphism swap = make_diagram_automorphism(d, {0, 1, 3, 2});
        CHECK(swap.order == 2);
        CHECK_THROWS_AS(make_diagram_automorphism(d, {2, 1, 3, 0}), Error);
    }
    SUBCASE("invalid permutations are rejected") {
        RootDatum b3 = build_root_datum(CartanSpec::parse("B3"));
        CHECK_THROWS_AS(make_diagram_automorphism(b3, {2, 1, 0}), Error);
        RootDatum a2 = build_root_datum(CartanSpec::parse("A2"));
        CHECK_THROWS_AS(make_diagram_automorphism(a2, {0, 0}), Error);
    }
    SUBCASE("torus coordinates permute") {
        RootDatum t2 = build_root_datum(CartanSpec::parse("Torus2"));
        DiagramAutomorphism tau = make_diagram_automorphism(t2, {}, {1, 0});
        CHECK(tau.order == 2);
        CHECK(tau.apply(qv({1, 0})) == qv({0, 1}));
    }
    SUBCASE("identical factors may swap") {
        RootDatum d = build_root_datum(CartanSpec::parse("A1xA1"));
        DiagramAutomorphism tau = make_diagram_automorphism(d, {1, 0});
        CHECK(tau.order == 2);
        CHECK(tau.apply(qv({1, 0, 0, 0})) == qv({0, 0, 1, 0}));
    }
    SUBCASE("E6 flip transports the coroots") {
        RootDatum d = build_root_datum(CartanSpec::parse("E6"));
        DiagramAutomorphism tau = make_diagram_automorphism(d, {5, 1, 4, 3, 2, 0});
        for (std::size_t j = 0; j < d.rank(); ++j)
            CHECK(tau.apply(d.simple_coroots[j]) == d.simple_coroots[tau.root_perm[j]]);
    }
}

TEST_CASE("per-factor normalization scales the form") {
    Normalization norm;
    norm.factor_scale = {make_rat(3, 2)};
    RootDatum d = build_root_datum(CartanSpec::parse("A1"), norm);
    CHECK(d.inner_product(d.simple_coroots[0], d.simple_coroots[0]) == 3);
    Normalization bad;
    bad.factor_scale = {Rat(0)};
    CHECK_THROWS_AS(build_root_datum(CartanSpec::parse("A1"), bad), Error);
}
