#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dilates {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositeModulus : Error {
    explicit CompositeModulus(std::int64_t p)
        : Error("modulus " + std::to_string(p) + " is not prime"), modulus(p) {}
    std::int64_t modulus;
};

struct EmptyInput : Error {
    EmptyInput() : Error("operation requires a non-empty set") {}
    explicit EmptyInput(const std::string& what) : Error(what) {}
};

struct DomainError : Error {
    using Error::Error;
};

// A bisection bracket without a sign change. Signals a bug, not bad input.
struct BracketFailure : Error {
    using Error::Error;
};

struct UnknownConstant : Error {
    explicit UnknownConstant(std::int64_t t)
        : Error("no w(t) constant known for t = " + std::to_string(t)), t(t) {}
    std::int64_t t;
};

struct RuleNotApplicable : Error {
    using Error::Error;
};

struct InfeasibleEnumeration : Error {
    InfeasibleEnumeration(const std::string& what, double estimated_count)
        : Error(what), estimated_count(estimated_count) {}
    double estimated_count;
};

struct ElementOutsideWindow : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace dilates
