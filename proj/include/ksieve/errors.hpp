#pragma once

#include <stdexcept>
#include <string>

namespace ksieve {

// Parameter outside the documented domain of an operation (bad sizes, k < 2,
// a non-independent vertex set handed to the labeling synthesizer, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exponential routine was asked to run above its configured size cap.
class CapExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed graph / labeling / plan input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ksieve
