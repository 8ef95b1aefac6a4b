#pragma once

#include <stdexcept>
#include <string>

namespace vdcat {

/// Malformed input value (bad permutation, non-positive color, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller-side precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size cap or budget.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text input does not follow one of the file formats.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An arc-and-dot diagram violates the matching or color constraints.
class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An arc endpoint is used twice.
class MatchingError : public ConstraintError {
public:
    using ConstraintError::ConstraintError;
};

/// Two morphisms do not share the middle color vector.
class CompositionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A vector expected in some span is not there.
class MembershipError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal identity (d^2 = 0, chain-map law) failed. Always a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace vdcat
