#pragma once

#include <string>
#include <utility>

#include "frobchi/frobpush.hpp"
#include "frobchi/variety.hpp"

// Built-in families (del Pezzo surfaces, Fano threefolds, projective spaces),
// the closed-form chi evaluations they satisfy, tilting-obstruction verdicts,
// and the independent checks on F_* O_{P^2}.

namespace frobchi {

// Degree-d del Pezzo surface, 1 <= d <= 9: c1^2 = d, and c2 = 12 - d forced
// by Noether's formula with chi(O) = 1.
VarietySpec del_pezzo_spec(int d);

// Fano threefold of anticanonical volume vol = (-K)^3 >= 1: c1^3 = vol,
// c1*c2 = 24 (Riemann-Roch for O with chi(O) = 1). c3 is deliberately left
// out of the table; nothing in the chi pipeline consumes it.
VarietySpec fano3_spec(long vol);

// Projective space P^n with tangent Chern classes c_i = C(n+1, i) H^i; the
// table carries every degree-n monomial in c_1..c_n.
VarietySpec pn_spec(int n);

// Closed forms: chi(End F_*^e O) = q^4 (d-4)/4 + q^2 (8-d)/4 for a degree-d
// del Pezzo, and q^6 (vol-24)/24 + q^4 (48-vol)/24 for a Fano threefold,
// with q = p^e. Exposed both as integers at (p, e) and as polynomials in q.
Integer chi_del_pezzo_closed(int d, const FrobParams& fp);
Integer chi_fano3_closed(long vol, const FrobParams& fp);
QPolynomial chi_del_pezzo_poly(int d);
QPolynomial chi_fano3_poly(long vol);

enum class Verdict { HigherCohomologyNonzero, HigherCohomologyNonzeroGivenH0Bound, Inconclusive };

std::string verdict_name(Verdict v);

struct TiltingVerdict {
    Integer chi;
    Integer h0_lower_bound;
    Verdict verdict;
    std::string rationale;
};

// Obstruction logic: chi <= 0 with h0 >= 1 forces higher cohomology outright;
// otherwise chi < h0_lower_bound forces it conditionally on the bound; else
// inconclusive. The bound must be >= 1 (the identity is a global section).
TiltingVerdict tilting_verdict(const Integer& chi, const Integer& h0_lower_bound);

// Lower bound for h^0(End F_*^e O) fed into tilting_verdict. Always at least
// 1 (identity section); 2 for the degree-3 del Pezzo at p = 2, e = 1, where
// the surface is F-split and the splitting idempotent gives an independent
// section. The source string says which.
struct H0Bound {
    Integer bound;
    std::string source;
};
H0Bound h0_lower_bound_for(const VarietySpec& v, const FrobParams& fp);

// Multiplicities (a, b) in F_*^e O_{P^2} = O + O(-1)^a + O(-2)^b, solved from
// the rank and first Chern class of the pushforward character and then
// cross-checked against the Hilbert-function identity
//   sum_j mult_j h^0(O(t-j)) = h^0(O(t p^e)) for t = 0..3.
// Non-integral, negative, or oracle-violating solutions raise an error.
std::pair<Integer, Integer> pn_multiplicities(long p, int e);

// Dimension count for restricting H^0(O_{P^n}(m)) to the length-C(k-1+n, n)
// jet space O/m^k at a point. surjective_possible is the crude dimension
// test source >= target; for k = m + 2 it is false for every m >= 0.
struct RestrictionDefect {
    Integer source_dim;
    Integer target_dim;
    bool surjective_possible;
};
RestrictionDefect restriction_defect(int n, long m, long k);

} // namespace frobchi
