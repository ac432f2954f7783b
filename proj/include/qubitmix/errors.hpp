#pragma once

#include <stdexcept>
#include <string>

namespace qubitmix {

// Input is not a valid qubit state (Bloch length > 1, non-Hermitian, ...).
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A scalar argument lies outside the operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameters are admissible states but the closed-form density is undefined
// there (point-mass laws, division by r1*r2 = 0, ...).
class DegenerateParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative numerical routine failed to reach its tolerance.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition on container contents.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qubitmix
