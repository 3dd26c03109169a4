#pragma once

#include <stdexcept>
#include <string>

namespace slender {

// Argument outside the mathematical domain of a function (z <= 0, r < eps, k = 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical procedure could not reach its accuracy target.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

// Evaluation exactly at (or numerically on top of) a slender-body pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Wavenumber outside the validity window of an eigenvalue-difference bound.
class WindowError : public std::out_of_range {
public:
    WindowError(const std::string& what, double limit)
        : std::out_of_range(what), limit_(limit) {}
    double limit() const noexcept { return limit_; }

private:
    double limit_;
};

class UnderflowError : public std::underflow_error {
public:
    using std::underflow_error::underflow_error;
};

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MeanModeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ResolutionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Rejected eigen-family / configuration combination.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace slender
