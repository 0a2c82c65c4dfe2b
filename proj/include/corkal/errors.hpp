// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace corkal {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// laurent
struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};
struct EvalAtZero : Error {
    EvalAtZero() : Error("cannot evaluate a Laurent polynomial at t = 0") {}
};
struct ZeroDivisor : Error {
    ZeroDivisor() : Error("division by the zero polynomial") {}
};

// twobridge / alexander
struct UnsupportedParams : Error {
    explicit UnsupportedParams(const std::string& what) : Error(what) {}
};
struct NotSymmetrizable : Error {
    NotSymmetrizable() : Error("no unit multiple is symmetric with value 1 at t = 1") {}
};

// constellation
struct KMismatch : Error {
    KMismatch() : Error("signatures have different k") {}
};
struct GenericityFailure : Error {
    explicit GenericityFailure(const std::string& what) : Error(what) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// homology
struct NotAComplex : Error {
    explicit NotAComplex(const std::string& what) : Error(what) {}
};

// input format violations (CLI exit code 2)
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace corkal
