#include "frobchi/rational.hpp"

#include <cctype>

namespace frobchi {

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string num, den = "1";
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(text);
    } else {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer n(num), d(den);
    if (d == 0)
        throw ParseError("zero denominator in rational '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string display_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_str();
}

Rational rational_pow(const Rational& q, long k) {
    if (k == 0)
        return Rational(1);
    if (k < 0) {
        if (q == 0)
            throw StructuralError("cannot raise zero to a negative power");
        return rational_pow(Rational(1) / q, -k);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(k));
    // num/den already coprime, so the power is canonical.
    return out;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer require_integer(const Rational& r, const std::string& context) {
    if (!is_integer(r))
        throw InconsistencyError(context + ": expected an integer, got " + fraction_string(r));
    return r.get_num();
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return Integer(0);
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer integer_pow(const Integer& base, unsigned long k) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
    return out;
}

bool is_prime(long p) {
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace frobchi
