#pragma once

#include <vector>

#include "frobchi/chow.hpp"
#include "frobchi/rational.hpp"

// Characteristic-class calculus in the truncated graded ring: universal Todd
// polynomials, exponential Chern characters, duals, endomorphism characters,
// and the degree-scaling Adams operations.

namespace frobchi {

// Bernoulli number B_k with the convention B_1 = -1/2 (so B_0 = 1, B_2 = 1/6,
// B_3 = 0, B_4 = -1/30, ...). Cached; k >= 0.
const Rational& bernoulli(int k);

// exp of an element with zero constant term, truncated at the element's bound.
GradedElement exp_graded(const GradedElement& a);

// log of an element with constant term 1, truncated at the element's bound.
GradedElement log_graded(const GradedElement& a);

// Universal Todd class through degree n in the Chern generators c1..cn:
//   td = 1 + c1/2 + (c1^2+c2)/12 + c1*c2/24 + ...
// computed via Newton power sums and the Bernoulli expansion of x/(1-e^{-x}).
GradedElement todd_universal(int n);

// Chern character of a line bundle with first Chern class d (degree-1 part
// of `d` is used; `d` must be homogeneous of degree 1 or zero): exp(d).
GradedElement chern_character_line(const GradedElement& d);

// Dual of a Chern character: negates the odd-degree components.
GradedElement dual(const GradedElement& ch);

// Chern character of End(E) = E* (x) E given ch(E): dual(ch) * ch.
GradedElement end_character(const GradedElement& ch);

// Adams operation psi_q: multiplies the degree-i component by q^i.
GradedElement adams(const Rational& q, const GradedElement& a);

// Inverse Adams operation psi_q^{-1}: multiplies the degree-i component by
// q^{-i}. Requires q != 0.
GradedElement adams_inverse(const Rational& q, const GradedElement& a);

// Thin validating wrappers. A Todd class must have constant term 1; a Chern
// character's constant term is its rank.
class ToddClass {
  public:
    explicit ToddClass(GradedElement value);
    const GradedElement& value() const { return value_; }

  private:
    GradedElement value_;
};

class ChernCharacter {
  public:
    explicit ChernCharacter(GradedElement value);
    const GradedElement& value() const { return value_; }
    const Rational& rank() const { return value_.constant_term(); }

  private:
    GradedElement value_;
};

} // namespace frobchi
