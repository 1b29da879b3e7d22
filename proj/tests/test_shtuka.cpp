#include <doctest.h>

#include <bit>

#include "pdcoh/errors.hpp"
#include "pdcoh/selftest.hpp"
#include "pdcoh/shtuka.hpp"

using namespace pdcoh;

TEST_CASE("relative data of GL_n inner forms") {
    RootDatum gl4 = build_root_datum(CartanSpec::parse("GL4"));
    SUBCASE("isoclinic slope 1/2 on GL4 gives relative A1 with block size 2") {
        RelativeRootData j = derive_J_gln(gl4, 4, make_rat(1, 2));
        REQUIRE(j.size() == 1);
        CHECK(j.delta[0] ==
              QVec{make_rat(1, 2), make_rat(1, 2), make_rat(-1, 2), make_rat(-1, 2)});
        CHECK(gl4.pairing(j.delta[0], j.omega[0]) == 1);
    }
    SUBCASE("slope 0 reproduces the absolute simple roots") {
        RelativeRootData j = derive_J_gln(gl4, 4, Rat(0));
        REQUIRE(j.size() == 3);
        for (std::size_t a = 0; a < 3; ++a) CHECK(j.delta[a] == gl4.simple_roots[a]);
    }
    SUBCASE("slope 1/2 on GL2 leaves no relative roots") {
        RootDatum gl2 = build_root_datum(CartanSpec::parse("GL2"));
        CHECK(derive_J_gln(gl2, 2, make_rat(1, 2)).size() == 0);
    }
    SUBCASE("denominator must divide n") {
        CHECK_THROWS_AS(derive_J_gln(gl4, 4, make_rat(1, 3)), Error);
    }
}

TEST_CASE("datum presets") {
    SUBCASE("drinfeld(1)") {
        LocalShtukaDatum d = preset_drinfeld(1);
        CHECK(d.delta_j_size() == 1);
        CHECK(d.kset.entries.size() == 2);
        CHECK(d.dim_f == 1);
    }
    SUBCASE("gln_basic(2, (1,0), 1/2) is a valid anisotropic datum") {
        LocalShtukaDatum d = preset_gln_basic(2, {Int(1), Int(0)}, make_rat(1, 2));
        CHECK(d.delta_j_size() == 0);
        CHECK(d.kset.entries.size() == 2);
    }
    SUBCASE("gln_basic(2, (1,0), 1) has an empty period domain") {
        CHECK_THROWS_AS(preset_gln_basic(2, {Int(1), Int(0)}, Rat(1)), Error);
        try {
            preset_gln_basic(2, {Int(1), Int(0)}, Rat(1));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::EmptyPeriodDomain);
        }
    }
    SUBCASE("preset grammar") {
        CHECK(build_preset("drinfeld:2").preset_name == "drinfeld:2");
        CHECK(build_preset("gln_basic:2:1,0:1/2").delta_j_size() == 0);
        CHECK(build_preset("quadric:7").g.spec.to_string() == "B3");
        CHECK(build_preset("quadric:8").g.spec.to_string() == "D4");
        CHECK(build_preset("split:B3:1,0,0").delta_j_size() == 3);
        CHECK_THROWS_AS(build_preset("nonsense:1"), Error);
        CHECK_THROWS_AS(build_preset("drinfeld:1:2"), Error);
    }
}

TEST_CASE("orbit invariants") {
    SUBCASE("drinfeld chain: Delta \\ I_[w_i] = {a_{i+1}..a_d}") {
        for (int d = 1; d <= 4; ++d) {
            LocalShtukaDatum datum = preset_drinfeld(d);
            REQUIRE(static_cast<int>(datum.invariants.size()) == d + 1);
            for (const auto& inv : datum.invariants) {
                int l = datum.orbits[inv.orbit_id].length;
                std::uint32_t prefix = (l >= 32) ? 0xffffffffu : ((1u << l) - 1u);
                CHECK(inv.subset_I == prefix);
                CHECK(inv.n == d + l);
            }
        }
    }
    SUBCASE("w mu = nu forces I = Delta_J") {
        LocalShtukaDatum d = preset_split(CartanSpec::parse("GL2"), {Rat(0), Rat(0)});
        REQUIRE(d.invariants.size() == 1);
        CHECK(d.invariants[0].subset_I == d.full_subset());
        CHECK(d.invariants[0].n == 0);
    }
    SUBCASE("empty Delta_J gives n = 2l") {
        LocalShtukaDatum d = preset_gln_basic(2, {Int(1), Int(0)}, make_rat(1, 2));
        for (const auto& inv : d.invariants)
            CHECK(inv.n == 2 * d.orbits[inv.orbit_id].length);
    }
    SUBCASE("n stays within [0, 2 dim F]") {
        for (const auto& datum : selftest::standard_suite())
            for (const auto& inv : datum.invariants) {
                CHECK(inv.n >= 0);
                CHECK(inv.n <= 2 * datum.dim_f);
            }
    }
}

TEST_CASE("datum validation") {
    RootDatum gl4 = build_root_datum(CartanSpec::parse("GL4"));
    QVec mu = {Rat(1), Rat(1), Rat(0), Rat(0)};
    QVec nu(4, make_rat(1, 2));
    RelativeRootData j = derive_J_gln(gl4, 4, make_rat(1, 2));

    SUBCASE("a valid explicit datum builds") {
        LocalShtukaDatum d = build_datum(gl4, identity_automorphism(gl4), 2, mu, nu, j, "explicit");
        CHECK(d.provenance == "explicit");
        CHECK(d.group_preset == GroupPreset::GLnD);
    }
    SUBCASE("broken dual basis is rejected") {
        RelativeRootData bad = j;
        bad.omega[0] = qvec_scale(Rat(2), bad.omega[0]);
        CHECK_THROWS_AS(build_datum(gl4, identity_automorphism(gl4), 1, mu, nu, bad, "explicit"),
                        Error);
    }
    SUBCASE("omega must be orthogonal to the center") {
        RelativeRootData bad = j;
        // shift by a central vector: still dual to delta, no longer P-orthogonal
        QVec ones(4, Rat(1));
        bad.omega[0] = qvec_add(bad.omega[0], ones);
        CHECK_THROWS_AS(build_datum(gl4, identity_automorphism(gl4), 1, mu, nu, bad, "explicit"),
                        Error);
    }
    SUBCASE("tau must fix the omegas") {
        DiagramAutomorphism flip = make_diagram_automorphism(gl4, {2, 1, 0});
        QVec mu2 = {Rat(1), Rat(0), Rat(0), Rat(-1)};
        QVec nu2 = qvec_zero(4);
        RelativeRootData split_j = derive_J_gln(gl4, 4, Rat(0));
        CHECK_THROWS_AS(build_datum(gl4, flip, 1, mu2, nu2, split_j, "explicit"), Error);
    }
    SUBCASE("non-dominant or non-integral mu is rejected") {
        CHECK_THROWS_AS(
            build_datum(gl4, identity_automorphism(gl4), 1, {Rat(0), Rat(1), Rat(0), Rat(0)}, nu,
                        j, "explicit"),
            Error);
        CHECK_THROWS_AS(
            build_datum(gl4, identity_automorphism(gl4), 1,
                        {make_rat(1, 2), Rat(0), Rat(0), Rat(0)}, nu, j, "explicit"),
            Error);
    }
    SUBCASE("non-basic nu is rejected") {
        QVec bad_nu = {Rat(1), Rat(0), Rat(0), Rat(0)};
        CHECK_THROWS_AS(build_datum(gl4, identity_automorphism(gl4), 1, mu, bad_nu, j, "explicit"),
                        Error);
    }
}

TEST_CASE("quasi-split folding") {
    LocalShtukaDatum d = selftest::quasi_split_folded_datum();
    CHECK(d.delta_j_size() == 2);
    CHECK(d.kset.entries.size() == 12);
    // relative roots: the folded a1/a3 class and a2; omegas are tau-fixed
    for (const auto& omega : d.j.omega) CHECK(d.tau.apply(omega) == omega);
    int total = 0;
    for (const auto& o : d.orbits) total += o.size;
    CHECK(total == 12);
}
