#pragma once

#include <stdexcept>
#include <string>

namespace pairbound {

class DivisionByZeroInterval : public std::domain_error {
public:
    DivisionByZeroInterval() : std::domain_error("DivisionByZeroInterval: divisor contains 0") {}
};

class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error("DomainError: " + what) {}
};

class UnsupportedArgument : public std::invalid_argument {
public:
    explicit UnsupportedArgument(const std::string& what)
        : std::invalid_argument("UnsupportedArgument: " + what) {}
};

class DivergentEnvelope : public std::domain_error {
public:
    explicit DivergentEnvelope(const std::string& what)
        : std::domain_error("DivergentEnvelope: " + what) {}
};

}  // namespace pairbound
