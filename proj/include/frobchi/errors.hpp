#pragma once

#include <stdexcept>
#include <string>

namespace frobchi {

// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched truncation bounds / generator sets, malformed inputs to
// constructors, out-of-range family parameters.
class StructuralError : public Error {
public:
    using Error::Error;
};

// invert() on an element whose degree-0 part is zero.
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

// integrate() hit a top-degree monomial with nonzero coefficient that the
// intersection table does not provide. Lazy by design: raised only when the
// number is actually consumed.
class MissingIntersectionError : public Error {
public:
    MissingIntersectionError(const std::string& monomial, const std::string& msg)
        : Error(msg), monomial_(monomial) {}
    const std::string& monomial() const { return monomial_; }

private:
    std::string monomial_;
};

// Internally contradictory data: non-integral Euler characteristic,
// interpolation re-evaluation mismatch, non-integral bundle multiplicities.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

// An action handed to to_matrix is not linear over the requested subring.
class OperatorError : public Error {
public:
    using Error::Error;
};

// Malformed serialized input (JSON spec files, rational strings, monomial
// strings).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace frobchi

