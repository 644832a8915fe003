#pragma once

#include <stdexcept>
#include <string>

namespace runstat {

// Bad argument or parameter outside its domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact integer result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Iterative numerical method ran out of budget or lost precision.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rational function evaluated at (or differentiated through) a root of its
// denominator.
class PoleError : public NumericalError {
public:
    PoleError(const std::string& what, double root) : NumericalError(what), root_(root) {}
    double root() const noexcept { return root_; }

private:
    double root_;
};

// Two independent computations of the same quantity disagree. Carries the
// observed deviation so callers can report it.
class ConsistencyError : public std::logic_error {
public:
    ConsistencyError(const std::string& what, double deviation)
        : std::logic_error(what), deviation_(deviation) {}
    double deviation() const noexcept { return deviation_; }

private:
    double deviation_;
};

}  // namespace runstat
