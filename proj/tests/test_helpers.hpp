#pragma once

#include <random>
#include <vector>

#include "frobchi/chow.hpp"

// Seeded random inputs for property tests. Everything draws from a caller-
// owned mt19937 so failures reproduce exactly.

namespace frobchi::testing {

// Single term from a monomial in string form, e.g. dterm(g, 3, "c1*c2", r).
inline GradedElement dterm(const GeneratorSetPtr& gens, int bound, std::string_view monomial,
                           const Rational& coeff) {
    return GradedElement::term(gens, bound, Monomial::parse(monomial, *gens), coeff);
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return frac(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
    Rational r = random_rational(rng);
    return r == 0 ? Rational(1) : r;
}

// Greedy degree fill: random monomial of total degree <= target (equal to
// target whenever a degree-1 generator exists, as in all the sets used here).
inline Monomial random_monomial(std::mt19937& rng, const GeneratorSet& gens, int target) {
    std::vector<unsigned> exps(gens.size(), 0);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    int remaining = target;
    for (int guard = 0; remaining > 0 && guard < 200; ++guard) {
        std::size_t i = pick(rng);
        if (gens[i].degree <= remaining) {
            ++exps[i];
            remaining -= gens[i].degree;
        }
    }
    return Monomial(std::move(exps));
}

inline GradedElement random_element(std::mt19937& rng, const GeneratorSetPtr& gens, int bound,
                                    int terms) {
    GradedElement out(gens, bound);
    std::uniform_int_distribution<int> deg(0, bound);
    for (int t = 0; t < terms; ++t)
        out.add_term(random_monomial(rng, *gens, deg(rng)), random_rational(rng));
    return out;
}

// Random element with an invertible (nonzero) constant term.
inline GradedElement random_unit(std::mt19937& rng, const GeneratorSetPtr& gens, int bound,
                                 int terms) {
    GradedElement out = random_element(rng, gens, bound, terms);
    if (out.constant_term() == 0)
        out.add_term(Monomial::unit(gens->size()), Rational(1));
    return out;
}

// Random Todd-like element: constant term exactly 1.
inline GradedElement random_todd_like(std::mt19937& rng, const GeneratorSetPtr& gens, int bound,
                                      int terms) {
    GradedElement out = random_element(rng, gens, bound, terms);
    out.add_term(Monomial::unit(gens->size()), Rational(1) - out.constant_term());
    return out;
}

} // namespace frobchi::testing
