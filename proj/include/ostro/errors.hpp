#pragma once

#include <stdexcept>
#include <string>

namespace ostro {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operator matrix has a pivot below machine epsilon.
class SingularOperator : public Error {
public:
    using Error::Error;
};

/// Some coordinate pair of a divided difference coincides, so a column is undefined.
class DegenerateDividedDifference : public Error {
public:
    using Error::Error;
};

class MaxIterationsExceeded : public Error {
public:
    using Error::Error;
};

class InsufficientTrace : public Error {
public:
    using Error::Error;
};

class NonContractingTrace : public Error {
public:
    using Error::Error;
};

class MissingReferenceRoot : public Error {
public:
    using Error::Error;
};

/// A boundary curve was evaluated on its vertical asymptote.
class PoleAtAsymptote : public Error {
public:
    using Error::Error;
};

}  // namespace ostro
