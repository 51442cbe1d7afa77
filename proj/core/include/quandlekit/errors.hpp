#pragma once

#include <stdexcept>
#include <string>

namespace quandlekit {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error("integer overflow: " + what) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error("dimension mismatch: " + what) {}
};

class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& what) : Error("ring mismatch: " + what) {}
};

// Raised when an operation whose correctness argument needs an integral
// domain is handed a composite modulus.
class NotIntegralDomainError : public Error {
public:
    explicit NotIntegralDomainError(const std::string& what) : Error("not an integral domain: " + what) {}
};

class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& what) : Error("budget exceeded: " + what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class UnknownNameError : public Error {
public:
    explicit UnknownNameError(const std::string& what) : Error("unknown name: " + what) {}
};

}  // namespace quandlekit
