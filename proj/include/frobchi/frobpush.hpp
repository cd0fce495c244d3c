#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frobchi/classes.hpp"
#include "frobchi/rational.hpp"
#include "frobchi/variety.hpp"

// The Frobenius pushforward operator on Chern characters,
//   ch(F_*^e L) = q^n * psi_q^{-1}(td(X) * ch(L)) / td(X),   q = p^e,
// and Euler characteristics of End(F_*^e O_X) via Riemann-Roch, both at
// concrete (p, e) and symbolically as a polynomial in q.

namespace frobchi {

// Frobenius parameters. q = p^e is cached as an exact integer. Interpolation
// code evaluates the same formulas at arbitrary q without going through this
// type (such q values are non-geometric and deliberately unchecked).
class FrobParams {
  public:
    FrobParams(long p, int e);

    long p() const { return p_; }
    int e() const { return e_; }
    const Integer& q() const { return q_; }

  private:
    long p_;
    int e_;
    Integer q_;
};

// Dense polynomial in q over the rationals. Coefficient i belongs to q^i;
// trailing zeros are trimmed, so the zero polynomial has no coefficients.
class QPolynomial {
  public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);

    // Unique polynomial of degree < points.size() through the given
    // (node, value) pairs, by exact Lagrange interpolation.
    static QPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(int k) const;
    Rational leading_coefficient() const;
    Rational evaluate(const Rational& q) const;

    bool operator==(const QPolynomial&) const = default;

    // Highest power first, every coefficient parenthesized:
    // "(-1/2)q^4 + (3/2)q^2"; the zero polynomial prints as "0".
    std::string to_string() const;

  private:
    std::vector<Rational> coeffs_;
};

// q^n * psi_q^{-1}(td * ch_E) * td^{-1}, truncated at the elements' bound.
// td must have constant term 1 and q must be nonzero. Stated for line-bundle
// characters; applied to arbitrary ones as the Q-linear multiplicative
// extension (it satisfies the composition law in q, see tests).
GradedElement pushforward_ch(const GradedElement& ch_E, const GradedElement& td,
                             const Rational& q, int n);
ChernCharacter pushforward_ch(const ChernCharacter& ch_E, const ToddClass& td,
                              const Rational& q, int n);

// Chern character of End(F_*^e O): end_character(pushforward_ch(1, td, q, n)).
GradedElement frob_end_ch(const GradedElement& td, const Rational& q, int n);

// chi(End F_*^e O_X) = integral of frob_end_ch * td over the variety, at an
// arbitrary rational q (used by the interpolation path).
Rational chi_frob_end_rational(const VarietySpec& v, const Rational& q);

// Same, at q = p^e; the result must be an exact integer, anything else means
// the intersection table is inconsistent and raises an error.
Integer chi_frob_end(const VarietySpec& v, const FrobParams& fp);

// chi as a polynomial in q, reconstructed by evaluating chi_frob_end_rational
// at the 2n+1 integer nodes q = 2..2n+2 and interpolating exactly; the result
// is re-checked at q = 2n+3 and 2n+4 and a mismatch raises an error.
QPolynomial chi_symbolic(const VarietySpec& v);

} // namespace frobchi
