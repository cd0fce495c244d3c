#include "frobchi/frobpush.hpp"

#include <sstream>

#include "frobchi/errors.hpp"

namespace frobchi {

FrobParams::FrobParams(long p, int e) : p_(p), e_(e) {
    if (!is_prime(p))
        throw StructuralError("p = " + std::to_string(p) + " is not prime");
    if (e < 1)
        throw StructuralError("e must be >= 1");
    q_ = integer_pow(Integer(p), e);
}

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

QPolynomial QPolynomial::interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    const std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw StructuralError("interpolation nodes must be distinct");

    std::vector<Rational> acc(m, Rational(0));
    std::vector<Rational> basis; // coefficients of prod (x - x_j) built per i
    for (std::size_t i = 0; i < m; ++i) {
        basis.assign(1, Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i)
                continue;
            // multiply basis by (x - x_j)
            basis.push_back(Rational(0));
            for (std::size_t k = basis.size() - 1; k > 0; --k)
                basis[k] = basis[k - 1] - points[j].first * basis[k];
            basis[0] = -points[j].first * basis[0];
            denom *= points[i].first - points[j].first;
        }
        Rational scale = points[i].second / denom;
        for (std::size_t k = 0; k < basis.size(); ++k)
            acc[k] += scale * basis[k];
    }
    return QPolynomial(std::move(acc));
}

Rational QPolynomial::coefficient(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size())
        return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational QPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational QPolynomial::evaluate(const Rational& q) const {
    Rational value(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;)
        value = value * q + coeffs_[k];
    return value;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << display_string(coeffs_[k]) << ")";
        if (k == 1)
            os << "q";
        else if (k > 1)
            os << "q^" << k;
    }
    return os.str();
}

GradedElement pushforward_ch(const GradedElement& ch_E, const GradedElement& td,
                             const Rational& q, int n) {
    if (td.constant_term() != 1)
        throw StructuralError("Todd class must have constant term 1");
    if (q == 0)
        throw StructuralError("pushforward needs q != 0");
    if (n < 0)
        throw StructuralError("dimension must be >= 0");
    GradedElement scaled = adams_inverse(q, td * ch_E);
    return rational_pow(q, n) * (scaled * td.inverse());
}

ChernCharacter pushforward_ch(const ChernCharacter& ch_E, const ToddClass& td,
                              const Rational& q, int n) {
    return ChernCharacter(pushforward_ch(ch_E.value(), td.value(), q, n));
}

GradedElement frob_end_ch(const GradedElement& td, const Rational& q, int n) {
    GradedElement one = GradedElement::constant(td.generator_set(), td.bound(), Rational(1));
    return end_character(pushforward_ch(one, td, q, n));
}

Rational chi_frob_end_rational(const VarietySpec& v, const Rational& q) {
    GradedElement td = todd_of(v);
    GradedElement integrand = frob_end_ch(td, q, v.dim) * td;
    return integrate(integrand, v.table);
}

Integer chi_frob_end(const VarietySpec& v, const FrobParams& fp) {
    Rational chi = chi_frob_end_rational(v, Rational(fp.q()));
    return require_integer(chi, "chi(End F_*^e O) on " + v.name);
}

QPolynomial chi_symbolic(const VarietySpec& v) {
    const int n = v.dim;
    std::vector<std::pair<Rational, Rational>> points;
    for (int q = 2; q <= 2 * n + 2; ++q)
        points.emplace_back(Rational(q), chi_frob_end_rational(v, Rational(q)));
    QPolynomial poly = QPolynomial::interpolate(points);
    for (int q = 2 * n + 3; q <= 2 * n + 4; ++q) {
        Rational direct = chi_frob_end_rational(v, Rational(q));
        if (poly.evaluate(Rational(q)) != direct)
            throw InconsistencyError("interpolated chi disagrees with direct evaluation at q = " +
                                     std::to_string(q));
    }
    if (poly.degree() > 2 * n)
        throw InconsistencyError("interpolated chi exceeds the expected degree bound");
    return poly;
}

} // namespace frobchi
