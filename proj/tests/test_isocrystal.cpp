#include <doctest.h>

#include <functional>
#include <vector>

#include "pdcoh/errors.hpp"
#include "pdcoh/isocrystal.hpp"
#include "pdcoh/selftest.hpp"

using namespace pdcoh;

namespace {

NewtonVector nv(std::initializer_list<Rat> xs) { return NewtonVector::gln(QVec(xs)); }

}  // namespace

TEST_CASE("dominance order on slope vectors") {
    CHECK(dominance_leq(nv({make_rat(1, 2), make_rat(1, 2)}), nv({Rat(1), Rat(0)})));
    CHECK(dominance_leq(nv({Rat(1), Rat(0)}), nv({Rat(1), Rat(0)})));
    CHECK_FALSE(dominance_leq(nv({Rat(1), Rat(0)}), nv({make_rat(1, 2), make_rat(1, 2)})));
    CHECK_FALSE(dominance_leq(nv({Rat(1), Rat(1)}), nv({Rat(1), Rat(0)})));
    CHECK_THROWS_AS(dominance_leq(nv({Rat(1)}), nv({Rat(1), Rat(0)})), Error);
}

TEST_CASE("dominance is a partial order on the acceptable sets") {
    auto points = acceptable_set_gln(4, {Int(2), Int(1), Int(0), Int(-1)});
    for (const auto& a : points) {
        CHECK(dominance_leq(a.newton, a.newton));
        for (const auto& b : points) {
            if (dominance_leq(a.newton, b.newton) && dominance_leq(b.newton, a.newton))
                CHECK(a.newton.values == b.newton.values);
            for (const auto& c : points)
                if (dominance_leq(a.newton, b.newton) && dominance_leq(b.newton, c.newton))
                    CHECK(dominance_leq(a.newton, c.newton));
        }
    }
}

TEST_CASE("Galois averages") {
    RootDatum t2 = build_root_datum(CartanSpec::parse("Torus2"));
    DiagramAutomorphism swap = make_diagram_automorphism(t2, {}, {1, 0});
    QVec mu = {Rat(1), Rat(0)};
    CHECK(galois_average(t2, mu, swap) == QVec{make_rat(1, 2), make_rat(1, 2)});
    CHECK(galois_average(t2, mu, identity_automorphism(t2)) == mu);
    QVec fixed = {Rat(1), Rat(1)};
    CHECK(galois_average(t2, fixed, swap) == fixed);

    RootDatum t3 = build_root_datum(CartanSpec::parse("Torus3"));
    DiagramAutomorphism cyc = make_diagram_automorphism(t3, {}, {1, 2, 0});
    CHECK(cyc.order == 3);
    CHECK(galois_average(t3, {Rat(1), Rat(0), Rat(0)}, cyc) ==
          QVec{make_rat(1, 3), make_rat(1, 3), make_rat(1, 3)});
}

TEST_CASE("basic classes") {
    CHECK(is_basic_gln(nv({make_rat(1, 2), make_rat(1, 2)})));
    CHECK_FALSE(is_basic_gln(nv({Rat(1), Rat(0)})));
    CHECK(is_basic_gln(nv({Rat(0), Rat(0)})));
    RootDatum b3 = build_root_datum(CartanSpec::parse("B3"));
    CHECK(is_basic(b3, NewtonVector::general(qvec_zero(3))));
    CHECK_FALSE(is_basic(b3, NewtonVector::general({Rat(1), Rat(0), Rat(0)})));
}

TEST_CASE("acceptable sets for GL_n") {
    SUBCASE("n = 2, mu = (1,0)") {
        auto pts = acceptable_set_gln(2, {Int(1), Int(0)});
        REQUIRE(pts.size() == 2);
        CHECK(pts[0].newton.values == QVec{Rat(1), Rat(0)});
        CHECK(pts[1].newton.values == QVec{make_rat(1, 2), make_rat(1, 2)});
    }
    SUBCASE("n = 3, mu = (1,0,0)") {
        auto pts = acceptable_set_gln(3, {Int(1), Int(0), Int(0)});
        REQUIRE(pts.size() == 3);
        CHECK(pts[0].newton.values == QVec{Rat(1), Rat(0), Rat(0)});
        CHECK(pts[1].newton.values == QVec{make_rat(1, 2), make_rat(1, 2), Rat(0)});
        CHECK(pts[2].newton.values == QVec{make_rat(1, 3), make_rat(1, 3), make_rat(1, 3)});
    }
    SUBCASE("central mu is alone") {
        auto pts = acceptable_set_gln(3, {Int(2), Int(2), Int(2)});
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].newton.values == QVec{Rat(2), Rat(2), Rat(2)});
    }
    SUBCASE("kappa equals the endpoint sum and integrality holds") {
        auto pts = acceptable_set_gln(4, {Int(2), Int(0), Int(0), Int(-1)});
        for (const auto& p : pts) {
            CHECK(p.kappa == 1);
            // integrality per isotypic level
            const auto& v = p.newton.values;
            std::size_t i = 0;
            while (i < v.size()) {
                std::size_t j = i;
                while (j < v.size() && v[j] == v[i]) ++j;
                CHECK(is_integer(v[i] * static_cast<long>(j - i)));
                i = j;
            }
        }
    }
    SUBCASE("exactly one basic point, downward closure") {
        auto pts = acceptable_set_gln(4, {Int(1), Int(1), Int(0), Int(0)});
        int basics = 0;
        for (const auto& p : pts)
            if (is_basic_gln(p.newton)) ++basics;
        CHECK(basics == 1);
        // every integral point dominated by a member is listed
        for (const auto& p : pts)
            for (const auto& q : pts)
                if (dominance_leq(q.newton, p.newton)) {
                    bool found = false;
                    for (const auto& r : pts)
                        if (r.newton.values == q.newton.values) found = true;
                    CHECK(found);
                }
    }
    SUBCASE("invalid mu") {
        CHECK_THROWS_AS(acceptable_set_gln(2, {Int(0), Int(1)}), Error);
        CHECK_THROWS_AS(acceptable_set_gln(0, {}), Error);
    }
}

TEST_CASE("acceptable sets match the brute-force oracle, n <= 5, entries in [-3,3]") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::vector<Int>> mus;
        std::vector<Int> cur(n);
        std::function<void(int, int)> gen = [&](int pos, int maxv) {
            if (pos == n) {
                mus.push_back(cur);
                return;
            }
            for (int v = maxv; v >= -3; --v) {
                cur[pos] = v;
                gen(pos + 1, v);
            }
        };
        gen(0, 3);
        for (const auto& mu : mus) {
            auto engine = acceptable_set_gln(n, mu);
            auto brute = selftest::oracle::acceptable_set_brute(n, mu);
            REQUIRE(engine.size() == brute.size());
            for (std::size_t i = 0; i < engine.size(); ++i)
                CHECK(engine[i].newton.values == brute[i]);
        }
    }
}

TEST_CASE("general-frame acceptability") {
    RootDatum gl2 = build_root_datum(CartanSpec::parse("GL2"));
    auto id2 = identity_automorphism(gl2);
    QVec mu = {Rat(1), Rat(0)};
    CHECK(is_acceptable(gl2, NewtonVector::general({make_rat(1, 2), make_rat(1, 2)}), mu, id2));
    CHECK_FALSE(is_acceptable(gl2, NewtonVector::general({Rat(1), Rat(1)}), mu, id2));
    QVec central = {Rat(1), Rat(1)};
    CHECK(is_acceptable(gl2, NewtonVector::general(central), central, id2));
    CHECK_THROWS_AS(is_acceptable(gl2, NewtonVector::general({Rat(1), Rat(0)}), mu, id2), Error);

    RootDatum b3 = build_root_datum(CartanSpec::parse("B3"));
    auto id3 = identity_automorphism(b3);
    CHECK(is_acceptable(b3, NewtonVector::general(qvec_zero(3)), {Rat(1), Rat(0), Rat(0)}, id3));

    // Galois average enters the comparison: GL4 with the flip and a non-fixed
    // central shift of mu is handled through mu^diamond.
    RootDatum gl4 = build_root_datum(CartanSpec::parse("GL4"));
    DiagramAutomorphism flip = make_diagram_automorphism(gl4, {2, 1, 0});
    QVec nu0 = qvec_zero(4);
    CHECK(is_acceptable(gl4, NewtonVector::general(nu0), {Rat(1), Rat(0), Rat(0), Rat(-1)}, flip));
}

