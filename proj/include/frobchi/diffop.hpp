#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frobchi/rational.hpp"

// Differential operators on R = F_p[t] in characteristic p. An operator
// linear over the subring of p^e-th powers is a p^e x p^e matrix over
// F_p[u], u = t^{p^e}, in the basis t^0..t^{p^e - 1}. The module builds
// divided powers, the natural inclusion between levels, the embedding
// induced by the standard Frobenius splitting, and compares the two.

namespace frobchi {

// Polynomial over F_p in one variable. Coefficients live in 0..p-1 and
// trailing zeros are trimmed, so equality is plain memberwise equality.
class FpPoly {
  public:
    explicit FpPoly(long p);
    FpPoly(long p, std::vector<long> coeffs); // entries reduced mod p

    static FpPoly monomial(long p, long degree, long coeff = 1);

    long p() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    long coefficient(long k) const;
    const std::vector<long>& coefficients() const { return coeffs_; }

    FpPoly operator+(const FpPoly& other) const;
    FpPoly operator-(const FpPoly& other) const;
    FpPoly operator*(const FpPoly& other) const;
    FpPoly scaled(long c) const;

    bool operator==(const FpPoly&) const = default;

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim();
    void require_same_field(const FpPoly& other) const;

    long p_ = 2;
    std::vector<long> coeffs_;
};

// C(m, k) mod p by Lucas' theorem (digitwise base-p binomials).
long binomial_mod_p(long m, long k, long p);

using PolyAction = std::function<FpPoly(const FpPoly&)>;

// Matrix of an operator in D^(e): size p^e x p^e, entries in F_p[u].
class OperatorMatrix {
  public:
    OperatorMatrix(long p, int e); // zero operator

    static OperatorMatrix identity(long p, int e);

    long p() const { return p_; }
    int e() const { return e_; }
    long size() const { return q_; }
    const FpPoly& entry(long row, long col) const;
    void set_entry(long row, long col, FpPoly value);

    // Action on an arbitrary polynomial: decompose f over the basis with
    // F_p[u]-coefficients, multiply by the matrix, reassemble.
    FpPoly apply(const FpPoly& f) const;

    OperatorMatrix operator+(const OperatorMatrix& other) const;
    OperatorMatrix operator-(const OperatorMatrix& other) const;
    // Composition: (a * b).apply(f) = a.apply(b.apply(f)).
    OperatorMatrix operator*(const OperatorMatrix& other) const;
    OperatorMatrix scaled(long c) const;

    bool operator==(const OperatorMatrix&) const = default;

    std::string to_string() const;

  private:
    long p_ = 2;
    int e_ = 1;
    long q_ = 2;
    std::vector<FpPoly> entries_; // row-major q_ x q_
};

// Divided power t^m -> C(m, k) t^{m-k}, the characteristic-p stand-in for
// (1/k!) d^k/dt^k. Lives in D^(e) whenever p^e > k.
class DividedPower {
  public:
    DividedPower(long p, long k);

    long p() const { return p_; }
    long order() const { return k_; }
    FpPoly apply(const FpPoly& f) const;
    PolyAction action() const;
    OperatorMatrix to_operator(int e) const; // requires p^e > k

  private:
    long p_;
    long k_;
};

// Plain actions used to assemble operators.
PolyAction multiplication_action(const FpPoly& g);
// f -> f^{p^k}, which over F_p just spreads coefficients: t^m -> t^{m p^k}.
PolyAction frobenius_power_action(long p, int k);
// The standard splitting: t^m -> t^{m / p^e} when p^e | m, else 0.
PolyAction splitting_tau_action(long p, int e);

// Matrix of an arbitrary action that is linear over F_p[t^w]: basis columns
// from the action on t^0..t^{w-1}, after probing linearity on shifted test
// inputs. A failed probe raises OperatorError.
OperatorMatrix to_matrix_over(const PolyAction& action, long p, long window);
// Same with window = p^e (membership test for D^(e)).
OperatorMatrix to_matrix(const PolyAction& action, long p, int e);

// Level change e -> e' > e along the identity of R: same action, bigger
// matrix. Injective and multiplicative.
OperatorMatrix natural_inclusion(const OperatorMatrix& op, int e_prime);

// Level change induced by the splitting: psi -> incl o psi o tau, where
// incl(r) = r^{p^{e'-e}} and tau is the splitting at level e'-e.
OperatorMatrix split_embedding(const OperatorMatrix& op, int e_prime);

// Structured comparison of the two embeddings on d/dt (and friends).
struct DiffopCheck {
    std::string label;
    bool pass = false;
    bool informational = false; // recorded outcome, not an assertion
    std::string detail;
};

struct DiffopReport {
    long p = 2;
    std::vector<DiffopCheck> checks;
    bool all_pass = true; // over non-informational checks

    OperatorMatrix incl_d;  // i(d/dt) at level 2
    OperatorMatrix split_d; // j(d/dt) at level 2

    DiffopReport(long p_, OperatorMatrix incl, OperatorMatrix split)
        : p(p_), incl_d(std::move(incl)), split_d(std::move(split)) {}
};

// Builds i(d/dt) and j(d/dt) for level 1 -> 2 at the given prime, checks
// j's action values, the divided-power identity for j at p = 2, i != j, and
// records exploratory comparisons (p = 3, multiplication by a p-th power).
DiffopReport verify_paper_example(long p = 2);

} // namespace frobchi
