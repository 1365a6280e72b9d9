#pragma once

#include <stdexcept>

namespace specop {

// A word quotient could not find the factor it must remove. In practice this
// signals that a regularity hypothesis of a factorization theorem is violated.
class MissingFactorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A factorization requiring regular blocks was applied to a non-regular one.
class RegularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A factorization requiring connected graphs met a disconnected one.
class ConnectivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edge colouring failed the admissibility conditions.
class AdmissibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A resolvent evaluation was requested too close to an eigenvalue.
class NearPoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specop
