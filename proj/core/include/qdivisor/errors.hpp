#pragma once

#include <stdexcept>

namespace qdivisor {

// Raised when an internal cross-check between two independent routes fails.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Raised by exact Laurent division when the remainder is nonzero.
class inexact_division : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace qdivisor
