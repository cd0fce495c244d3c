#include "frobchi/classes.hpp"

#include <mutex>

#include "frobchi/errors.hpp"

namespace frobchi {

const Rational& bernoulli(int k) {
    if (k < 0)
        throw StructuralError("bernoulli index must be >= 0");
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    // B_m = -1/(m+1) * sum_{j=0..m-1} C(m+1, j) B_j
    while (static_cast<std::size_t>(k) >= cache.size()) {
        int m = static_cast<int>(cache.size());
        Rational sum(0);
        for (int j = 0; j < m; ++j)
            sum += Rational(binomial(m + 1, j)) * cache[static_cast<std::size_t>(j)];
        cache.push_back(-sum / Rational(m + 1));
    }
    return cache[static_cast<std::size_t>(k)];
}

GradedElement exp_graded(const GradedElement& a) {
    if (a.constant_term() != 0)
        throw StructuralError("exp needs zero constant term");
    int bound = a.bound();
    GradedElement result = GradedElement::constant(a.generator_set(), bound, Rational(1));
    GradedElement power = GradedElement::constant(a.generator_set(), bound, Rational(1));
    Rational factorial(1);
    for (int k = 1; k <= bound; ++k) {
        power = power * a;
        if (power.is_zero())
            break;
        factorial *= Rational(k);
        result += (Rational(1) / factorial) * power;
    }
    return result;
}

GradedElement log_graded(const GradedElement& a) {
    if (a.constant_term() != 1)
        throw StructuralError("log needs constant term 1");
    int bound = a.bound();
    GradedElement u = a - GradedElement::constant(a.generator_set(), bound, Rational(1));
    GradedElement result(a.generator_set(), bound);
    GradedElement power = GradedElement::constant(a.generator_set(), bound, Rational(1));
    for (int k = 1; k <= bound; ++k) {
        power = power * u;
        if (power.is_zero())
            break;
        Rational coeff = Rational((k % 2 == 1) ? 1 : -1) / Rational(k);
        result += coeff * power;
    }
    return result;
}

namespace {

// Newton power sums s_1..s_n of the Chern roots expressed in c1..cn:
//   s_k = c1*s_{k-1} - c2*s_{k-2} + ... + (-1)^k k*c_k
std::vector<GradedElement> newton_power_sums(GeneratorSetPtr gens, int n) {
    std::vector<GradedElement> c;
    c.push_back(GradedElement::constant(gens, n, Rational(1))); // e_0 = 1
    for (int i = 1; i <= n; ++i)
        c.push_back(GradedElement::generator(gens, n, static_cast<std::size_t>(i - 1)));

    std::vector<GradedElement> s;
    s.push_back(GradedElement::constant(gens, n, Rational(n))); // s_0 = rank; unused below
    for (int k = 1; k <= n; ++k) {
        GradedElement sk(gens, n);
        for (int i = 1; i < k; ++i) {
            GradedElement term = c[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
            if (i % 2 == 0)
                term = -term;
            sk += term;
        }
        GradedElement tail = Rational(k) * c[static_cast<std::size_t>(k)];
        if (k % 2 == 0)
            tail = -tail;
        sk += tail;
        s.push_back(std::move(sk));
    }
    return s;
}

} // namespace

GradedElement todd_universal(int n) {
    if (n < 0)
        throw StructuralError("todd degree must be >= 0");
    auto gens = GeneratorSet::chern(n == 0 ? 1 : n);
    if (n == 0)
        return GradedElement::constant(gens, 0, Rational(1));

    auto s = newton_power_sums(gens, n);

    // log td(x) per root: x/2 - sum_{k>=1} B_{2k}/(2k (2k)!) x^{2k}; summing
    // over roots replaces x^j by the power sum s_j.
    GradedElement logtd(gens, n);
    logtd += Rational(1, 2) * s[1];
    Rational fact(1); // (2k)!
    for (int k = 1; 2 * k <= n; ++k) {
        fact *= Rational(2 * k - 1) * Rational(2 * k);
        Rational coeff = -bernoulli(2 * k) / (Rational(2 * k) * fact);
        logtd += coeff * s[static_cast<std::size_t>(2 * k)];
    }
    return exp_graded(logtd);
}

GradedElement chern_character_line(const GradedElement& d) {
    for (int k = 0; k <= d.bound(); ++k)
        if (k != 1 && !d.component(k).empty())
            throw StructuralError("line-bundle class must be homogeneous of degree 1");
    return exp_graded(d);
}

GradedElement dual(const GradedElement& ch) {
    std::vector<Rational> factors(static_cast<std::size_t>(ch.bound()) + 1);
    for (int k = 0; k <= ch.bound(); ++k)
        factors[static_cast<std::size_t>(k)] = Rational(k % 2 == 0 ? 1 : -1);
    return ch.scale_by_degree(factors);
}

GradedElement end_character(const GradedElement& ch) {
    return dual(ch) * ch;
}

GradedElement adams(const Rational& q, const GradedElement& a) {
    if (q == 0)
        throw StructuralError("Adams operation needs q != 0");
    std::vector<Rational> factors(static_cast<std::size_t>(a.bound()) + 1);
    Rational power(1);
    for (int k = 0; k <= a.bound(); ++k) {
        factors[static_cast<std::size_t>(k)] = power;
        power *= q;
    }
    return a.scale_by_degree(factors);
}

GradedElement adams_inverse(const Rational& q, const GradedElement& a) {
    if (q == 0)
        throw StructuralError("adams_inverse needs q != 0");
    return adams(Rational(1) / q, a);
}

ToddClass::ToddClass(GradedElement value) : value_(std::move(value)) {
    if (value_.constant_term() != 1)
        throw StructuralError("Todd class must have constant term 1");
}

ChernCharacter::ChernCharacter(GradedElement value) : value_(std::move(value)) {
    if (value_.constant_term() == 0 && !value_.is_zero())
        throw StructuralError("Chern character of a nonzero class must have nonzero rank");
}

} // namespace frobchi
