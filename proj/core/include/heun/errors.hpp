#pragma once

#include <stdexcept>
#include <string>

namespace heun {

/// Base class for all errors reported by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter set violates one of its invariants (Fuchs condition,
/// gamma at a non-positive integer, k outside (0,1), ...).
class invalid_parameter_error : public error {
public:
    using error::error;
};

/// The parameter set is structurally valid but outside what the requested
/// arithmetic mode supports (e.g. exact mode requires the singularity
/// location to be the square of a rational).
class unsupported_parameter_error : public invalid_parameter_error {
public:
    using invalid_parameter_error::invalid_parameter_error;
};

/// Division by an exact zero. Zero denominators signal a violated
/// precondition and are never silently turned into sentinels.
class division_by_zero_error : public error {
public:
    using error::error;
};

/// Input outside the mathematical domain of an operation (e.g. series
/// evaluation at |z| >= 1).
class domain_error : public error {
public:
    using error::error;
};

/// The requested computation method cannot be applied to the given
/// parameter set or arithmetic mode.
class method_not_applicable_error : public error {
public:
    using error::error;
};

/// An adaptive computation exceeded its configured cap before converging.
class non_convergence_error : public error {
public:
    using error::error;
};

} // namespace heun
