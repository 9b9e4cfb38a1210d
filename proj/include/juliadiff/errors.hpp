#pragma once

#include <stdexcept>
#include <string>

namespace juliadiff {

/// Parameter or argument outside the mathematical domain of an operation
/// (e.g. |c| <= 2, n = 0 for K_n).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request whose output would exceed a configured size cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A numerical check that must never fail did fail (e.g. a sampled
/// difference outside the predicted difference disk).
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace juliadiff
