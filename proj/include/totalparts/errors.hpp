#pragma once

#include <stdexcept>
#include <string>

namespace totalparts {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotReal : public DomainError {
public:
    NotReal() : DomainError("value is not fixed by complex conjugation") {}
};

class InexactDivision : public DomainError {
public:
    InexactDivision() : DomainError("polynomial division leaves a nonzero remainder") {}
};

class ZeroSum : public DomainError {
public:
    ZeroSum() : DomainError("coefficients sum to zero; cannot normalize to a die") {}
};

class InvalidDistribution : public DomainError {
public:
    explicit InvalidDistribution(const std::string& what) : DomainError(what) {}
};

class NotFound : public DomainError {
public:
    explicit NotFound(const std::string& what) : DomainError(what) {}
};

class ParseError : public DomainError {
public:
    explicit ParseError(const std::string& what) : DomainError(what) {}
};

/// Raised when interval refinement exceeds the precision cap. Nonzero
/// algebraic numbers always separate from zero eventually, so this signals a bug.
class PrecisionExhausted : public std::logic_error {
public:
    explicit PrecisionExhausted(int bits)
        : std::logic_error("sign undecided at precision cap of " + std::to_string(bits) + " bits") {}
};

} // namespace totalparts
