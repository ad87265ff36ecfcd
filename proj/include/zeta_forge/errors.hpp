#pragma once

#include <stdexcept>
#include <string>

namespace zeta_forge {

/// Argument outside the mathematical domain of an operation (k = 0, n < 2, x outside (0,1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation point within 1e-12 of a lattice singularity.
class SingularInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A sequence table was asked for an index it does not hold.
class MissingIndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Two exact zeta routes produced different coefficients. Never expected on
/// correct code.
class RouteDisagreementError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zeta_forge
