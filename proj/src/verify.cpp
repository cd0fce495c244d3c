#include "frobchi/verify.hpp"

#include <functional>
#include <sstream>

#include "frobchi/catalog.hpp"
#include "frobchi/classes.hpp"
#include "frobchi/diffop.hpp"
#include "frobchi/errors.hpp"
#include "frobchi/frobpush.hpp"

namespace frobchi {

namespace {

// Abstract presentation in the Todd components themselves: generators
// d1..dn with degree(di) = i, td = 1 + d1 + ... + dn.
GeneratorSetPtr d_gens(int n) {
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back({"d" + std::to_string(i), i});
    return std::make_shared<GeneratorSet>(std::move(gens));
}

GradedElement abstract_todd(const GeneratorSetPtr& gens, int n) {
    GradedElement td = GradedElement::constant(gens, n, Rational(1));
    for (std::size_t i = 0; i < gens->size(); ++i)
        td += GradedElement::generator(gens, n, i);
    return td;
}

GradedElement dterm(const GeneratorSetPtr& gens, int n, const std::string& mono,
                    const Rational& coeff) {
    return GradedElement::term(gens, n, Monomial::parse(mono, *gens), coeff);
}

struct Runner {
    VerifyReport report;

    void add(const std::string& label, const std::function<std::string()>& check) {
        VerifyItem item{label, true, ""};
        try {
            item.detail = check();
        } catch (const std::exception& err) {
            item.pass = false;
            item.detail = err.what();
        }
        report.all_pass = report.all_pass && item.pass;
        report.items.push_back(std::move(item));
    }
};

void require(bool cond, const std::string& msg) {
    if (!cond)
        throw InconsistencyError(msg);
}

} // namespace

VerifyReport run_verification() {
    Runner r;

    r.add("reciprocal of 1 + d1 + d2 + d3 is 1 - d1 + (d1^2 - d2) + (2 d1 d2 - d1^3 - d3)", [] {
        auto gens = d_gens(3);
        GradedElement td = abstract_todd(gens, 3);
        GradedElement expected = GradedElement::constant(gens, 3, Rational(1)) -
                                 GradedElement::generator(gens, 3, 0) +
                                 dterm(gens, 3, "d1^2", 1) - dterm(gens, 3, "d2", 1) +
                                 dterm(gens, 3, "d1*d2", 2) - dterm(gens, 3, "d1^3", 1) -
                                 dterm(gens, 3, "d3", 1);
        require(td.inverse() == expected, "inverse expansion is off");
        require((td * td.inverse()) == GradedElement::constant(gens, 3, Rational(1)),
                "inverse fails to multiply back to 1");
        return "graded recursion reproduces the degree <= 3 expansion";
    });

    r.add("Todd polynomials: td1 = c1/2, td2 = (c1^2 + c2)/12, td3 = c1 c2/24", [] {
        GradedElement td = todd_universal(3);
        auto gens = td.generator_set();
        GradedElement expected = GradedElement::constant(gens, 3, Rational(1)) +
                                 dterm(gens, 3, "c1", Rational(1, 2)) +
                                 dterm(gens, 3, "c1^2", Rational(1, 12)) +
                                 dterm(gens, 3, "c2", Rational(1, 12)) +
                                 dterm(gens, 3, "c1*c2", Rational(1, 24));
        require(td == expected, "universal Todd expansion is off");
        return "log/exp pipeline matches the classical coefficients";
    });

    r.add("dual of the line character 1 + H + H^2/2 negates the odd part", [] {
        auto gens = std::make_shared<GeneratorSet>(std::vector<Generator>{{"H", 1}});
        GradedElement ch = chern_character_line(GradedElement::generator(gens, 2, 0));
        GradedElement expected = GradedElement::constant(gens, 2, Rational(1)) -
                                 GradedElement::generator(gens, 2, 0) +
                                 dterm(gens, 2, "H^2", Rational(1, 2));
        require(dual(ch) == expected, "dual character is off");
        return "ch(O(-H)) = 1 - H + H^2/2 as expected";
    });

    r.add("End character of r + a + b starts r^2 + 0 + (2 r b - a^2)", [] {
        auto gens = std::make_shared<GeneratorSet>(
            std::vector<Generator>{{"a", 1}, {"b", 2}});
        GradedElement ch = GradedElement::constant(gens, 2, Rational(3)) +
                           GradedElement::generator(gens, 2, 0) +
                           GradedElement::generator(gens, 2, 1);
        GradedElement end = end_character(ch);
        require(end.constant_term() == 9, "rank part must be r^2");
        require(end.component(1).empty(), "degree-1 part must vanish");
        GradedElement expected2 = dterm(gens, 2, "b", 6) - dterm(gens, 2, "a^2", 1);
        require(end.component_element(2) == expected2, "degree-2 part is off");
        return "checked with rank 3 and formal a, b";
    });

    r.add("psi_q^{-1} on 1 + d1 + d2 + d3 rescales degree i by q^{-i}", [] {
        auto gens = d_gens(3);
        GradedElement td = abstract_todd(gens, 3);
        for (long q : {2L, 3L, 4L, 9L}) {
            GradedElement got = adams_inverse(Rational(q), td);
            GradedElement expected = GradedElement::constant(gens, 3, Rational(1)) +
                                     dterm(gens, 3, "d1", Rational(1, q)) +
                                     dterm(gens, 3, "d2", Rational(1, q * q)) +
                                     dterm(gens, 3, "d3", Rational(1, q * q * q));
            require(got == expected, "rescaling is off at q = " + std::to_string(q));
        }
        return "checked at q = 2, 3, 4, 9";
    });

    r.add("psi_q^{-1}(td) / td = 1 + (q^{-1}-1) d1 + ((q^{-2}-1) d2 - (q^{-1}-1) d1^2) + ...", [] {
        auto gens = d_gens(3);
        GradedElement td = abstract_todd(gens, 3);
        for (long q : {2L, 3L, 5L}) {
            Rational s1 = Rational(1, q) - 1, s2 = Rational(1, q * q) - 1;
            GradedElement got = adams_inverse(Rational(q), td) * td.inverse();
            require(got.constant_term() == 1, "degree-0 part must be 1");
            require(got.component_element(1) == dterm(gens, 3, "d1", s1),
                    "degree-1 expansion is off at q = " + std::to_string(q));
            GradedElement expected2 = dterm(gens, 3, "d2", s2) - dterm(gens, 3, "d1^2", s1);
            require(got.component_element(2) == expected2,
                    "degree-2 expansion is off at q = " + std::to_string(q));
        }
        return "expansion verified through degree 2 at q = 2, 3, 5";
    });

    r.add("pushforward of the trivial line bundle: q^n + (q^{n-1}-q^n) d1 + ...", [] {
        const int n = 3;
        auto gens = d_gens(n);
        GradedElement td = abstract_todd(gens, n);
        GradedElement one = GradedElement::constant(gens, n, Rational(1));
        for (long q : {2L, 3L}) {
            GradedElement ch = pushforward_ch(one, td, Rational(q), n);
            Rational qn = rational_pow(Rational(q), n);
            Rational qn1 = rational_pow(Rational(q), n - 1);
            Rational qn2 = rational_pow(Rational(q), n - 2);
            require(ch.constant_term() == qn, "rank must be q^n");
            require(ch.component_element(1) == dterm(gens, n, "d1", qn1 - qn),
                    "degree-1 coefficient must be q^{n-1} - q^n");
            GradedElement expected2 = dterm(gens, n, "d2", qn2 - qn) -
                                      dterm(gens, n, "d1^2", qn1 - qn);
            require(ch.component_element(2) == expected2, "degree-2 part is off");
        }
        return "rank and first two graded pieces verified at q = 2, 3 (n = 3)";
    });

    r.add("End of the pushforward: degree 2 part is (q^{2(n-1)} - q^{2n})(2 d2 - d1^2)", [] {
        const int n = 3;
        auto gens = d_gens(n);
        GradedElement td = abstract_todd(gens, n);
        for (long q : {2L, 3L, 4L}) {
            GradedElement end = frob_end_ch(td, Rational(q), n);
            Rational c = rational_pow(Rational(q), 2 * (n - 1)) - rational_pow(Rational(q), 2 * n);
            GradedElement expected2 = dterm(gens, n, "d2", 2 * c) - dterm(gens, n, "d1^2", c);
            require(end.component_element(2) == expected2,
                    "degree-2 part is off at q = " + std::to_string(q));
            require(end.constant_term() == rational_pow(Rational(q), 2 * n),
                    "degree-0 part must be q^{2n}");
        }
        return "verified at q = 2, 3, 4 (n = 3)";
    });

    r.add("odd-degree components of the End pushforward vanish identically", [] {
        const int n = 3;
        auto gens = d_gens(n);
        GradedElement td = abstract_todd(gens, n);
        for (long q : {2L, 3L, 5L, 7L}) {
            GradedElement end = frob_end_ch(td, Rational(q), n);
            require(end.component(1).empty() && end.component(3).empty(),
                    "odd part is nonzero at q = " + std::to_string(q));
        }
        return "degrees 1 and 3 are empty at q = 2, 3, 5, 7";
    });

    r.add("degree-3 del Pezzo table: c1^2 = 3 and c2 = 9", [] {
        VarietySpec v = del_pezzo_spec(3);
        auto c1sq = v.table.lookup(Monomial::parse("c1^2", *v.gens));
        auto c2 = v.table.lookup(Monomial::parse("c2", *v.gens));
        require(c1sq && *c1sq == 3 && c2 && *c2 == 9, "table entries are off");
        return "c2 = 12 - d from chi(O) = 1";
    });

    r.add("d2 integrates to 1 on every del Pezzo", [] {
        for (int d = 1; d <= 9; ++d) {
            VarietySpec v = del_pezzo_spec(d);
            GradedElement d2 = todd_of(v).component_element(2);
            require(integrate(d2, v.table) == 1, "d2 integral is off at d = " + std::to_string(d));
        }
        return "(c1^2 + c2)/12 = 1 for d = 1..9";
    });

    r.add("2 d2 - d1^2 integrates to 2 - d/4 on the degree-d del Pezzo", [] {
        for (int d = 1; d <= 9; ++d) {
            VarietySpec v = del_pezzo_spec(d);
            GradedElement td = todd_of(v);
            GradedElement combo = Rational(2) * td.component_element(2) -
                                  td.component_element(1) * td.component_element(1);
            require(integrate(combo, v.table) == Rational(2) - frac(d, 4),
                    "combination is off at d = " + std::to_string(d));
        }
        return "matches 2 - d/4 for d = 1..9";
    });

    r.add("Fano threefold of volume 22: d1^3 = 22/8 and d1 d2 = 22/24 + 1", [] {
        VarietySpec v = fano3_spec(22);
        GradedElement td = todd_of(v);
        GradedElement d1 = td.component_element(1);
        GradedElement d2 = td.component_element(2);
        require(integrate(d1 * d1 * d1, v.table) == frac(22, 8), "d1^3 integral is off");
        require(integrate(d1 * d2, v.table) == frac(22, 24) + 1, "d1 d2 integral is off");
        return "both anticanonical intersection values hit";
    });

    r.add("chi(End F_* O) = 1 on the degree-3 del Pezzo at p = 2, e = 1", [] {
        Integer chi = chi_frob_end(del_pezzo_spec(3), FrobParams(2, 1));
        require(chi == 1, "expected 1, got " + chi.get_str());
        return "the borderline positive case";
    });

    r.add("chi = -45 = 81(-3/4) + 9(7/4) on the degree-1 del Pezzo at p = 3, e = 1", [] {
        FrobParams fp(3, 1);
        Integer engine = chi_frob_end(del_pezzo_spec(1), fp);
        Integer closed = chi_del_pezzo_closed(1, fp);
        require(engine == -45 && closed == -45,
                "expected -45, got engine " + engine.get_str() + ", closed " + closed.get_str());
        return "engine and closed form agree";
    });

    r.add("chi(End F_*^e O) = p^{2e} on the degree-4 del Pezzo", [] {
        for (long p : {2L, 3L, 5L, 7L})
            for (int e = 1; e <= 3; ++e) {
                FrobParams fp(p, e);
                Integer expected = integer_pow(Integer(p), 2UL * static_cast<unsigned long>(e));
                require(chi_frob_end(del_pezzo_spec(4), fp) == expected,
                        "off at p = " + std::to_string(p) + ", e = " + std::to_string(e));
            }
        return "q^2 across p in {2,3,5,7}, e in 1..3";
    });

    r.add("chi(End F_*^e O) = p^{4e} on the volume-24 Fano threefold", [] {
        for (long p : {2L, 3L, 5L})
            for (int e = 1; e <= 2; ++e) {
                FrobParams fp(p, e);
                Integer expected = integer_pow(Integer(p), 4UL * static_cast<unsigned long>(e));
                require(chi_frob_end(fano3_spec(24), fp) == expected,
                        "off at p = " + std::to_string(p) + ", e = " + std::to_string(e));
            }
        return "the q^6 term drops out exactly at volume 24";
    });

    r.add("symbolic chi for the degree-d del Pezzo is (d-4)/4 q^4 + (8-d)/4 q^2", [] {
        for (int d = 1; d <= 9; ++d)
            require(chi_symbolic(del_pezzo_spec(d)) == chi_del_pezzo_poly(d),
                    "interpolation disagrees at d = " + std::to_string(d));
        return "interpolated polynomial has exactly the two closed-form terms";
    });

    r.add("symbolic chi for the Fano threefold is (vol-24)/24 q^6 + (48-vol)/24 q^4", [] {
        for (long vol = 2; vol <= 64; vol += 2)
            require(chi_symbolic(fano3_spec(vol)) == chi_fano3_poly(vol),
                    "interpolation disagrees at vol = " + std::to_string(vol));
        return "interpolated polynomial has exactly the two closed-form terms";
    });

    r.add("leading chi coefficient is negative exactly below the threshold (d < 4, vol < 24)", [] {
        for (int d = 1; d <= 9; ++d)
            require((chi_symbolic(del_pezzo_spec(d)).leading_coefficient() < 0) == (d < 4),
                    "sign is off at d = " + std::to_string(d));
        for (long vol = 2; vol <= 64; vol += 2)
            require((chi_symbolic(fano3_spec(vol)).leading_coefficient() < 0) == (vol < 24),
                    "sign is off at vol = " + std::to_string(vol));
        return "threshold confirmed on both families";
    });

    r.add("chi < 0 for degree <= 3 del Pezzos at every (p, e) except (2, 1)", [] {
        for (int d = 1; d <= 3; ++d)
            for (long p : {2L, 3L, 5L, 7L})
                for (int e = 1; e <= 3; ++e) {
                    if (p == 2 && e == 1)
                        continue;
                    require(chi_frob_end(del_pezzo_spec(d), FrobParams(p, e)) < 0,
                            "chi not negative at d = " + std::to_string(d) +
                                ", p = " + std::to_string(p) + ", e = " + std::to_string(e));
                }
        return "negativity holds across the grid";
    });

    r.add("verdict logic on (chi, h0 bound): (-5,1), (1,2), (1,1)", [] {
        require(tilting_verdict(Integer(-5), Integer(1)).verdict ==
                    Verdict::HigherCohomologyNonzero,
                "chi <= 0 must force higher cohomology");
        require(tilting_verdict(Integer(1), Integer(2)).verdict ==
                    Verdict::HigherCohomologyNonzeroGivenH0Bound,
                "chi < bound must force it conditionally");
        require(tilting_verdict(Integer(1), Integer(1)).verdict == Verdict::Inconclusive,
                "chi >= bound must stay inconclusive");
        return "all three branches fire as specified";
    });

    r.add("F_*^e O_{P^2} multiplicities pass the Hilbert cross-check", [] {
        auto [a2, b2] = pn_multiplicities(2, 1);
        require(a2 == 3 && b2 == 0, "p = 2: expected (3, 0)");
        auto [a3, b3] = pn_multiplicities(3, 1);
        require(a3 == 7 && b3 == 1, "p = 3: expected (7, 1)");
        return "O + O(-1)^3 at q = 2; O + O(-1)^7 + O(-2) at q = 3";
    });

    r.add("restriction to (m+2)-jets at a point is never surjective by dimensions", [] {
        for (int n = 1; n <= 3; ++n)
            for (long m = 0; m <= 12; ++m) {
                RestrictionDefect rd = restriction_defect(n, m, m + 2);
                require(!rd.surjective_possible,
                        "dimension count fails at n = " + std::to_string(n) +
                            ", m = " + std::to_string(m));
            }
        return "C(m+n, n) < C(m+1+n, n) throughout the sampled grid";
    });

    r.add("splitting at p = 2: tau(t^2) = t, tau(t) = 0, tau(1) = 1", [] {
        PolyAction tau = splitting_tau_action(2, 1);
        require(tau(FpPoly::monomial(2, 2)) == FpPoly::monomial(2, 1), "tau(t^2) must be t");
        require(tau(FpPoly::monomial(2, 1)).is_zero(), "tau(t) must vanish");
        require(tau(FpPoly(2, {1})) == FpPoly(2, {1}), "tau(1) must be 1");
        return "the standard splitting behaves as stated";
    });

    r.add("the two level-2 embeddings of d/dt differ; the split one is d^[2] + t d^[3]", [] {
        DiffopReport report = verify_paper_example(2);
        std::ostringstream os;
        for (const auto& c : report.checks)
            if (!c.pass && !c.informational)
                os << c.label << "; ";
        require(report.all_pass, "operator checks failed: " + os.str());
        return "matrix identities and the inequality all hold";
    });

    return r.report;
}

} // namespace frobchi
