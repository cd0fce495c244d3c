#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobchi/rational.hpp"

namespace frobchi {

// A formal graded generator: a named class of pure codimension `degree`.
struct Generator {
    std::string name;
    int degree = 1;

    bool operator==(const Generator&) const = default;
};

// Immutable ordered set of generators. Generators are kept sorted by name so
// that exponent vectors, monomial orderings and serializations are canonical.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<std::size_t> find(std::string_view name) const;

    bool operator==(const GeneratorSet& other) const { return gens_ == other.gens_; }

    // c1..cn with degree(ci) = i, the presentation every variety preset uses.
    static std::shared_ptr<const GeneratorSet> chern(int n);
    // x1..xk, all of degree 1 (formal root variables).
    static std::shared_ptr<const GeneratorSet> roots(int k);

private:
    std::vector<Generator> gens_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

// Exponent vector aligned with a GeneratorSet. Comparison is lexicographic in
// the name-sorted generator order; within one graded component (fixed total
// degree) that is graded-lex.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}
    static Monomial unit(std::size_t ngens) { return Monomial(std::vector<unsigned>(ngens, 0)); }

    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned exponent(std::size_t i) const { return exps_[i]; }
    int total_degree(const GeneratorSet& gens) const;
    bool is_unit() const;

    Monomial operator*(const Monomial& other) const;
    auto operator<=>(const Monomial&) const = default;

    // "1" for the unit, otherwise factors like "c1^2*c2" in generator order.
    std::string to_string(const GeneratorSet& gens) const;
    static Monomial parse(std::string_view text, const GeneratorSet& gens);

private:
    std::vector<unsigned> exps_;
};

// One graded component: monomials of a fixed total degree with nonzero
// rational coefficients. Zero coefficients are never stored.
using Component = std::map<Monomial, Rational>;

// Truncated element of the free graded ring on a generator set: one
// component per degree 0..bound. Products beyond the bound are discarded.
class GradedElement {
public:
    GradedElement(GeneratorSetPtr gens, int bound);

    static GradedElement constant(GeneratorSetPtr gens, int bound, const Rational& value);
    static GradedElement generator(GeneratorSetPtr gens, int bound, std::size_t index);
    // Single term coeff * monomial; the monomial's degree must be <= bound.
    static GradedElement term(GeneratorSetPtr gens, int bound, const Monomial& m,
                              const Rational& coeff);

    int bound() const { return bound_; }
    const GeneratorSetPtr& generator_set() const { return gens_; }
    const Component& component(int k) const;
    // The homogeneous degree-k slice as a standalone element (same bound).
    GradedElement component_element(int k) const;
    const Rational& constant_term() const;
    bool is_zero() const;
    bool is_homogeneous(int k) const;

    // Shrink or grow the truncation bound. Growing fills with zero
    // components; shrinking discards the top.
    GradedElement truncated(int new_bound) const;

    GradedElement& add_term(const Monomial& m, const Rational& coeff);

    GradedElement operator-() const;
    GradedElement& operator+=(const GradedElement& other);
    GradedElement& operator-=(const GradedElement& other);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator*(const Rational& s, const GradedElement& a);

    // Graded-recursive inverse; requires a nonzero degree-0 part.
    GradedElement inverse() const;

    // Degree-wise rescaling x_k -> factor(k) * x_k (Adams operations, duals).
    GradedElement scale_by_degree(const std::vector<Rational>& factors) const;

    bool operator==(const GradedElement& other) const;

    std::string to_string() const;

private:
    void require_compatible(const GradedElement& other) const;

    GeneratorSetPtr gens_;
    int bound_ = 0;
    std::vector<Component> comps_;
};

// Top-degree intersection numbers: the only quotient data the engine uses.
class IntersectionTable {
public:
    IntersectionTable(GeneratorSetPtr gens, int top_degree, std::map<Monomial, Rational> entries);

    const GeneratorSetPtr& generator_set() const { return gens_; }
    int top_degree() const { return top_; }
    const std::map<Monomial, Rational>& entries() const { return entries_; }
    std::optional<Rational> lookup(const Monomial& m) const;

    bool operator==(const IntersectionTable& other) const;

private:
    GeneratorSetPtr gens_;
    int top_ = 0;
    std::map<Monomial, Rational> entries_;
};

// Evaluates the top-degree component of `a` against the table. Lower degrees
// are ignored. A needed-but-absent monomial raises MissingIntersectionError.
Rational integrate(const GradedElement& a, const IntersectionTable& table);

} // namespace frobchi

