#ifndef SECV_ERRORS_HPP
#define SECV_ERRORS_HPP

#include <stdexcept>

namespace secv {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Inverting a truncated series whose constant term is zero.
class NonUnitConstantTerm : public Error {
public:
    using Error::Error;
};

/// A class product left the h^p s_a s_b monomial algebra: some monomial
/// would carry three or more nontrivial Segre factors.
class MoreThanTwoSegreFactors : public Error {
public:
    using Error::Error;
};

/// Operands live on varieties of different dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A Segre integral table is missing a required (a, b) entry.
class IncompleteTable : public Error {
public:
    using Error::Error;
};

/// A Segre integral table with deg X = 0.
class ZeroDegree : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace secv

#endif
