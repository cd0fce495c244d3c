#include "frobchi/catalog.hpp"

#include <functional>
#include <map>
#include <vector>

#include "frobchi/classes.hpp"
#include "frobchi/errors.hpp"

namespace frobchi {

VarietySpec del_pezzo_spec(int d) {
    if (d < 1 || d > 9)
        throw StructuralError("del Pezzo degree must be in 1..9");
    auto gens = GeneratorSet::chern(2);
    std::map<Monomial, Rational> entries;
    entries.emplace(Monomial::parse("c1^2", *gens), Rational(d));
    entries.emplace(Monomial::parse("c2", *gens), Rational(12 - d));
    IntersectionTable table(gens, 2, std::move(entries));
    return VarietySpec("del_pezzo_" + std::to_string(d), 2, gens, std::move(table),
                       FamilyInfo{FamilyKind::DelPezzo, d});
}

VarietySpec fano3_spec(long vol) {
    if (vol <= 0)
        throw StructuralError("anticanonical volume must be positive");
    auto gens = GeneratorSet::chern(3);
    std::map<Monomial, Rational> entries;
    entries.emplace(Monomial::parse("c1^3", *gens), Rational(vol));
    entries.emplace(Monomial::parse("c1*c2", *gens), Rational(24));
    // c3 stays out: chi(End F_*^e O) never integrates a c3 term.
    IntersectionTable table(gens, 3, std::move(entries));
    return VarietySpec("fano3_vol_" + std::to_string(vol), 3, gens, std::move(table),
                       FamilyInfo{FamilyKind::Fano3, vol});
}

namespace {

// All exponent vectors with sum_i exps[i] * degree[i] = target.
void enumerate_monomials(const GeneratorSet& gens, int target, std::size_t index,
                         std::vector<unsigned>& exps,
                         const std::function<void(const std::vector<unsigned>&)>& emit) {
    if (index == gens.size()) {
        if (target == 0)
            emit(exps);
        return;
    }
    int deg = gens[index].degree;
    for (int count = 0; count * deg <= target; ++count) {
        exps[index] = static_cast<unsigned>(count);
        enumerate_monomials(gens, target - count * deg, index + 1, exps, emit);
    }
    exps[index] = 0;
}

} // namespace

VarietySpec pn_spec(int n) {
    if (n < 1)
        throw StructuralError("projective space dimension must be >= 1");
    auto gens = GeneratorSet::chern(n);
    // c_i(T_{P^n}) = C(n+1, i) H^i and H^n integrates to 1, so a degree-n
    // monomial prod c_i^{a_i} integrates to prod C(n+1, i)^{a_i}.
    std::map<Monomial, Rational> entries;
    std::vector<unsigned> exps(gens->size(), 0);
    enumerate_monomials(*gens, n, 0, exps, [&](const std::vector<unsigned>& e) {
        Integer value(1);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned rep = 0; rep < e[i]; ++rep)
                value *= binomial(n + 1, gens->operator[](i).degree);
        entries.emplace(Monomial(e), Rational(value));
    });
    IntersectionTable table(gens, n, std::move(entries));
    return VarietySpec("p" + std::to_string(n), n, gens, std::move(table),
                       FamilyInfo{FamilyKind::ProjectiveSpace, n});
}

QPolynomial chi_del_pezzo_poly(int d) {
    if (d < 1 || d > 9)
        throw StructuralError("del Pezzo degree must be in 1..9");
    std::vector<Rational> coeffs(5, Rational(0));
    coeffs[2] = Rational(8 - d) / Rational(4);
    coeffs[4] = Rational(d - 4) / Rational(4);
    return QPolynomial(std::move(coeffs));
}

QPolynomial chi_fano3_poly(long vol) {
    if (vol <= 0)
        throw StructuralError("anticanonical volume must be positive");
    std::vector<Rational> coeffs(7, Rational(0));
    coeffs[4] = Rational(48 - vol) / Rational(24);
    coeffs[6] = Rational(vol - 24) / Rational(24);
    return QPolynomial(std::move(coeffs));
}

Integer chi_del_pezzo_closed(int d, const FrobParams& fp) {
    return require_integer(chi_del_pezzo_poly(d).evaluate(Rational(fp.q())),
                           "closed-form chi for del Pezzo degree " + std::to_string(d));
}

Integer chi_fano3_closed(long vol, const FrobParams& fp) {
    return require_integer(chi_fano3_poly(vol).evaluate(Rational(fp.q())),
                           "closed-form chi for Fano threefold volume " + std::to_string(vol));
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::HigherCohomologyNonzero:
        return "HigherCohomologyNonzero";
    case Verdict::HigherCohomologyNonzeroGivenH0Bound:
        return "HigherCohomologyNonzeroGivenH0Bound";
    case Verdict::Inconclusive:
        return "Inconclusive";
    }
    throw StructuralError("unknown verdict");
}

TiltingVerdict tilting_verdict(const Integer& chi, const Integer& h0_lower_bound) {
    if (h0_lower_bound < 1)
        throw StructuralError("h0 lower bound must be >= 1");
    TiltingVerdict out{chi, h0_lower_bound, Verdict::Inconclusive, ""};
    if (chi <= 0) {
        out.verdict = Verdict::HigherCohomologyNonzero;
        out.rationale = "chi = " + chi.get_str() +
                        " <= 0 while h^0 >= 1 (the identity is a global section), so some "
                        "higher cohomology group is nonzero";
    } else if (chi < h0_lower_bound) {
        out.verdict = Verdict::HigherCohomologyNonzeroGivenH0Bound;
        out.rationale = "chi = " + chi.get_str() + " < " + h0_lower_bound.get_str() +
                        " <= h^0, so the alternating sum forces nonzero higher cohomology "
                        "given the h^0 bound";
    } else {
        out.rationale = "chi = " + chi.get_str() + " >= h^0 bound " + h0_lower_bound.get_str() +
                        "; the Euler characteristic alone decides nothing here";
    }
    return out;
}

H0Bound h0_lower_bound_for(const VarietySpec& v, const FrobParams& fp) {
    if (v.family && v.family->kind == FamilyKind::DelPezzo && v.family->param == 3 &&
        fp.p() == 2 && fp.e() == 1) {
        return {Integer(2),
                "identity section plus the idempotent section of an F-split degree-3 surface"};
    }
    return {Integer(1), "identity section"};
}

namespace {

// h^0(O_{P^n}(m)) = C(m+n, n) for m >= 0, else 0.
Integer h0_pn(int n, long m) {
    if (m < 0)
        return Integer(0);
    return binomial(m + n, n);
}

} // namespace

std::pair<Integer, Integer> pn_multiplicities(long p, int e) {
    FrobParams fp(p, e);
    Rational q(fp.q());

    // ch(F_*^e O_{P^2}) in the hyperplane class H, from td(P^2) = 1 + (3/2)H + H^2.
    auto gens = std::make_shared<GeneratorSet>(std::vector<Generator>{{"H", 1}});
    GradedElement H = GradedElement::generator(gens, 2, 0);
    GradedElement td = GradedElement::constant(gens, 2, Rational(1)) + Rational(3, 2) * H +
                       GradedElement::term(gens, 2, Monomial::parse("H^2", *gens), Rational(1));
    GradedElement ch = pushforward_ch(GradedElement::constant(gens, 2, Rational(1)), td, q, 2);

    Rational rank = ch.constant_term();
    Rational c1(0);
    if (auto it = ch.component(1).find(Monomial::parse("H", *gens)); it != ch.component(1).end())
        c1 = it->second;

    // 1 + a + b = rank and a + 2b = -c1.
    Rational b_rat = -c1 - (rank - 1);
    Rational a_rat = rank - 1 - b_rat;
    Integer a = require_integer(a_rat, "multiplicity of O(-1) in F_*^e O_{P^2}");
    Integer b = require_integer(b_rat, "multiplicity of O(-2) in F_*^e O_{P^2}");
    if (a < 0 || b < 0)
        throw InconsistencyError("negative multiplicity in F_*^e O_{P^2}");

    // Independent check: pushing forward O(t q) must preserve section counts.
    Integer qi = fp.q();
    if (!qi.fits_slong_p())
        throw StructuralError("p^e too large for the Hilbert cross-check");
    long ql = qi.get_si();
    for (long t = 0; t <= 3; ++t) {
        Integer lhs = h0_pn(2, t) + a * h0_pn(2, t - 1) + b * h0_pn(2, t - 2);
        Integer rhs = h0_pn(2, t * ql);
        if (lhs != rhs)
            throw InconsistencyError("F_*^e O_{P^2} multiplicities fail the Hilbert check at t = " +
                                     std::to_string(t));
    }
    return {a, b};
}

RestrictionDefect restriction_defect(int n, long m, long k) {
    if (n < 1)
        throw StructuralError("restriction_defect needs n >= 1");
    if (k < 1)
        throw StructuralError("restriction_defect needs k >= 1");
    Integer source = m >= 0 ? binomial(m + n, n) : Integer(0);
    Integer target = binomial(k - 1 + n, n);
    return {source, target, source >= target};
}

} // namespace frobchi
