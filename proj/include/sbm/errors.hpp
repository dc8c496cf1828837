#pragma once

#include <stdexcept>
#include <string>

namespace sbm {

/// Argument outside the physical or mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller broke a structural precondition (shape, symmetry, matrix form).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A density matrix failed the trace / positivity checks.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eigensolver did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The ground-state scan hit its block cutoff before the energy turned upward.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No sign change of E_{λ+1} - E_λ inside the admissible coupling bracket.
class NoCrossing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed crossing sequence broke strict monotonicity.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sbm
