#pragma once

#include <stdexcept>
#include <string>

namespace cteig {

/// Raised when an arithmetic kernel produces a NaN or infinity. Carries the
/// name of the offending operation; non-finite values never propagate
/// silently through the solver layers.
class NonFiniteError : public std::runtime_error {
 public:
  explicit NonFiniteError(const std::string& op)
      : std::runtime_error("non-finite result in " + op) {}
};

/// An operation was invoked outside the perturbation regime it is defined
/// for (e.g. the strong-regime extreme solver on |alpha| <= 1).
class RegimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-point iteration hit its iteration cap without reaching tolerance.
class NoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bisection could not establish a sign-change bracket.
class FallbackUnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quotient form of the characteristic polynomial evaluated too close to a
/// tangent pole; callers must reroute to the Chebyshev form.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The hyperbolic fixed-point map was fed a transfer value >= 1.
class ArctanhDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An eigenvector formula degenerated to the zero vector.
class ZeroVectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sign-change bisection found no bracket (extreme eigenvalue inside [0,4]).
class NoBracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The dense oracle was requested beyond its n <= 4096 materialization cap.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The doubled real embedding did not yield coincident eigenvalue pairs.
class PairMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cteig
