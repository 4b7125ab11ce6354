#pragma once

#include <stdexcept>

namespace nodal {

/// Raised when an argument falls outside the supported domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a field's nodal set cannot be resolved as nonsingular.
class NonsingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when traced nodal curves are inconsistent with the surface topology.
class ExtractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nodal
