#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobchi/catalog.hpp"
#include "frobchi/errors.hpp"
#include "test_helpers.hpp"

using namespace frobchi;
using namespace frobchi::testing;

TEST_CASE("del Pezzo presets carry the forced intersection numbers") {
    VarietySpec dp3 = del_pezzo_spec(3);
    CHECK(dp3.dim == 2);
    CHECK(dp3.name == "del_pezzo_3");
    REQUIRE(dp3.family.has_value());
    CHECK(dp3.family->kind == FamilyKind::DelPezzo);
    CHECK(dp3.family->param == 3);
    CHECK(dp3.table.lookup(Monomial::parse("c1^2", *dp3.gens)) == Rational(3));
    CHECK(dp3.table.lookup(Monomial::parse("c2", *dp3.gens)) == Rational(9));

    VarietySpec dp9 = del_pezzo_spec(9);
    CHECK(dp9.table.lookup(Monomial::parse("c1^2", *dp9.gens)) == Rational(9));
    CHECK(dp9.table.lookup(Monomial::parse("c2", *dp9.gens)) == Rational(3));

    CHECK_THROWS_AS(del_pezzo_spec(0), StructuralError);
    CHECK_THROWS_AS(del_pezzo_spec(10), StructuralError);
    CHECK_THROWS_AS(del_pezzo_spec(-1), StructuralError);
}

TEST_CASE("Fano threefold presets pin c1^3 and c1*c2 and omit c3") {
    VarietySpec f = fano3_spec(22);
    CHECK(f.dim == 3);
    CHECK(f.table.lookup(Monomial::parse("c1^3", *f.gens)) == Rational(22));
    CHECK(f.table.lookup(Monomial::parse("c1*c2", *f.gens)) == Rational(24));
    CHECK_FALSE(f.table.lookup(Monomial::parse("c3", *f.gens)).has_value());
    REQUIRE(f.family.has_value());
    CHECK(f.family->kind == FamilyKind::Fano3);
    CHECK(f.family->param == 22);

    CHECK_NOTHROW(fano3_spec(1));
    CHECK_THROWS_AS(fano3_spec(0), StructuralError);
    CHECK_THROWS_AS(fano3_spec(-2), StructuralError);
}

TEST_CASE("projective-space presets tabulate binomial intersection numbers") {
    VarietySpec p2 = pn_spec(2);
    CHECK(p2.dim == 2);
    CHECK(p2.table.lookup(Monomial::parse("c1^2", *p2.gens)) == Rational(9));
    CHECK(p2.table.lookup(Monomial::parse("c2", *p2.gens)) == Rational(3));

    VarietySpec p3 = pn_spec(3);
    CHECK(p3.table.lookup(Monomial::parse("c1^3", *p3.gens)) == Rational(64));
    CHECK(p3.table.lookup(Monomial::parse("c1*c2", *p3.gens)) == Rational(24));
    CHECK(p3.table.lookup(Monomial::parse("c3", *p3.gens)) == Rational(4));

    CHECK_THROWS_AS(pn_spec(0), StructuralError);
}

TEST_CASE("P^3 behaves as the volume-64 Fano threefold in the chi pipeline") {
    // Same c1^3 and c1*c2, and chi never consumes c3.
    CHECK(chi_symbolic(pn_spec(3)) == chi_symbolic(fano3_spec(64)));
    FrobParams fp(2, 1);
    CHECK(chi_frob_end(pn_spec(3), fp) == chi_frob_end(fano3_spec(64), fp));
}

TEST_CASE("closed-form chi values at selected points") {
    CHECK(chi_del_pezzo_closed(1, FrobParams(2, 1)) == -5);
    CHECK(chi_del_pezzo_closed(1, FrobParams(3, 1)) == -45);
    CHECK(chi_del_pezzo_closed(3, FrobParams(2, 1)) == 1);
    CHECK(chi_fano3_closed(22, FrobParams(2, 1)) == 12);

    for (long p : {2L, 3L, 5L, 7L})
        for (int e = 1; e <= 3; ++e) {
            FrobParams fp(p, e);
            Integer q2 = fp.q() * fp.q();
            CHECK(chi_del_pezzo_closed(4, fp) == q2);
            CHECK(chi_fano3_closed(24, fp) == q2 * q2);
        }

    CHECK(chi_del_pezzo_poly(2).to_string() == "(-1/2)q^4 + (3/2)q^2");
    CHECK(chi_fano3_poly(22).to_string() == "(-1/12)q^6 + (13/12)q^4");
    CHECK_THROWS_AS(chi_del_pezzo_poly(0), StructuralError);
    CHECK_THROWS_AS(chi_fano3_poly(-4), StructuralError);
}

TEST_CASE("engine chi equals the closed forms across a small grid") {
    const std::vector<std::pair<long, int>> fps = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
    for (int d = 1; d <= 9; ++d)
        for (auto [p, e] : fps) {
            FrobParams fp(p, e);
            CAPTURE(d); CAPTURE(p); CAPTURE(e);
            CHECK(chi_frob_end(del_pezzo_spec(d), fp) == chi_del_pezzo_closed(d, fp));
        }
    for (long vol : {2L, 22L, 24L, 64L})
        for (auto [p, e] : fps) {
            FrobParams fp(p, e);
            CAPTURE(vol); CAPTURE(p); CAPTURE(e);
            CHECK(chi_frob_end(fano3_spec(vol), fp) == chi_fano3_closed(vol, fp));
        }
}

TEST_CASE("tilting verdicts follow the chi-versus-h0 trichotomy") {
    TiltingVerdict negative = tilting_verdict(Integer(-5), Integer(1));
    CHECK(negative.verdict == Verdict::HigherCohomologyNonzero);
    CHECK(negative.chi == -5);
    CHECK(negative.rationale.find("chi = -5") != std::string::npos);

    TiltingVerdict zero = tilting_verdict(Integer(0), Integer(1));
    CHECK(zero.verdict == Verdict::HigherCohomologyNonzero);

    TiltingVerdict conditional = tilting_verdict(Integer(1), Integer(2));
    CHECK(conditional.verdict == Verdict::HigherCohomologyNonzeroGivenH0Bound);
    CHECK(conditional.rationale.find("1 < 2") != std::string::npos);

    TiltingVerdict open_one = tilting_verdict(Integer(2), Integer(2));
    CHECK(open_one.verdict == Verdict::Inconclusive);
    TiltingVerdict open_two = tilting_verdict(Integer(19), Integer(1));
    CHECK(open_two.verdict == Verdict::Inconclusive);
    CHECK_FALSE(open_two.rationale.empty());

    CHECK_THROWS_AS(tilting_verdict(Integer(5), Integer(0)), StructuralError);
    CHECK_THROWS_AS(tilting_verdict(Integer(5), Integer(-3)), StructuralError);

    CHECK(verdict_name(Verdict::HigherCohomologyNonzero) == "HigherCohomologyNonzero");
    CHECK(verdict_name(Verdict::HigherCohomologyNonzeroGivenH0Bound) ==
          "HigherCohomologyNonzeroGivenH0Bound");
    CHECK(verdict_name(Verdict::Inconclusive) == "Inconclusive");
}

TEST_CASE("h0 lower bound is 2 exactly for the F-split cubic surface case") {
    VarietySpec dp3 = del_pezzo_spec(3);
    H0Bound split = h0_lower_bound_for(dp3, FrobParams(2, 1));
    CHECK(split.bound == 2);
    CHECK(split.source.find("idempotent") != std::string::npos);

    CHECK(h0_lower_bound_for(dp3, FrobParams(2, 2)).bound == 1);
    CHECK(h0_lower_bound_for(dp3, FrobParams(3, 1)).bound == 1);
    CHECK(h0_lower_bound_for(del_pezzo_spec(2), FrobParams(2, 1)).bound == 1);
    CHECK(h0_lower_bound_for(fano3_spec(22), FrobParams(2, 1)).bound == 1);
    CHECK(h0_lower_bound_for(pn_spec(2), FrobParams(2, 1)).bound == 1);

    VarietySpec anonymous = del_pezzo_spec(3);
    anonymous.family = std::nullopt;
    H0Bound plain = h0_lower_bound_for(anonymous, FrobParams(2, 1));
    CHECK(plain.bound == 1);
    CHECK(plain.source == "identity section");
}

TEST_CASE("plane Frobenius pushforward multiplicities") {
    CHECK(pn_multiplicities(2, 1) == std::pair<Integer, Integer>{3, 0});
    CHECK(pn_multiplicities(3, 1) == std::pair<Integer, Integer>{7, 1});
    CHECK(pn_multiplicities(2, 2) == std::pair<Integer, Integer>{12, 3});

    // a = (q-1)(q+4)/2 and b = (q-1)(q-2)/2 across prime powers q = p^e.
    const std::vector<std::pair<long, int>> fps = {{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                                   {7, 1}, {2, 3}, {3, 2}};
    for (auto [p, e] : fps) {
        long q = 1;
        for (int i = 0; i < e; ++i)
            q *= p;
        auto [a, b] = pn_multiplicities(p, e);
        CAPTURE(p); CAPTURE(e);
        CHECK(a == Integer((q - 1) * (q + 4) / 2));
        CHECK(b == Integer((q - 1) * (q - 2) / 2));
        CHECK(1 + a + b == Integer(q * q)); // rank of F_*^e O_{P^2}
    }

    CHECK_THROWS_AS(pn_multiplicities(6, 1), StructuralError);
    CHECK_THROWS_AS(pn_multiplicities(2, 0), StructuralError);
}

TEST_CASE("jet-restriction dimension counts") {
    RestrictionDefect cubic_jets = restriction_defect(2, 1, 3);
    CHECK(cubic_jets.source_dim == 3);
    CHECK(cubic_jets.target_dim == 6);
    CHECK_FALSE(cubic_jets.surjective_possible);

    RestrictionDefect constants = restriction_defect(2, 0, 2);
    CHECK(constants.source_dim == 1);
    CHECK(constants.target_dim == 3);
    CHECK_FALSE(constants.surjective_possible);

    RestrictionDefect line = restriction_defect(1, 5, 3);
    CHECK(line.source_dim == 6);
    CHECK(line.target_dim == 3);
    CHECK(line.surjective_possible);

    RestrictionDefect twisted_down = restriction_defect(2, -1, 1);
    CHECK(twisted_down.source_dim == 0);
    CHECK(twisted_down.target_dim == 1);
    CHECK_FALSE(twisted_down.surjective_possible);

    // k = m + 2 jets always outnumber the degree-m sections.
    for (int n = 1; n <= 3; ++n)
        for (long m = 0; m <= 10; ++m) {
            CAPTURE(n); CAPTURE(m);
            CHECK_FALSE(restriction_defect(n, m, m + 2).surjective_possible);
        }

    CHECK_THROWS_AS(restriction_defect(0, 1, 1), StructuralError);
    CHECK_THROWS_AS(restriction_defect(2, 1, 0), StructuralError);
}
