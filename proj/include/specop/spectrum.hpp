#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specop/matrix.hpp"

namespace specop {

// Grouping tolerance for eigenvalue words.
inline constexpr double kDefaultTol = 1e-9;

// A commutative word of real eigenvalues: a sorted multiset of values with
// positive multiplicities, where stored values differ by more than the
// grouping tolerance.
class SpectrumWord {
 public:
  explicit SpectrumWord(double tol = kDefaultTol) : tol_(tol) {}

  static SpectrumWord of_values(std::span<const double> values,
                                double tol = kDefaultTol);
  static SpectrumWord single(double value, std::size_t mult = 1,
                             double tol = kDefaultTol);

  double tol() const { return tol_; }
  bool empty() const { return entries_.empty(); }
  std::size_t total_multiplicity() const;
  const std::vector<std::pair<double, std::size_t>>& entries() const {
    return entries_;
  }
  // Sum of all values with multiplicity (the trace of the source matrix).
  double sum() const;
  std::size_t zero_multiplicity() const;

  // Word concatenation: multiset union, re-grouped under the tolerance.
  SpectrumWord times(const SpectrumWord& o) const;

  // Removes one occurrence of the stored value nearest to `value`; throws
  // MissingFactorError when none lies within the tolerance.
  SpectrumWord divided_by(double value) const;

  // Downgrades the multiplicity of 0 by one when present, then adds s to
  // every remaining value.
  SpectrumWord phi_shift(double s) const;

  // Removes one occurrence of q (error when absent), then adds s to every
  // remaining value.
  SpectrumWord mu_shift(double q, double s) const;

  // Maps every value to scale * value + offset.
  SpectrumWord affine(double scale, double offset) const;

  // Space-separated `value^mult` tokens, ascending, 12 significant digits.
  std::string str() const;

 private:
  std::vector<std::pair<double, std::size_t>> entries_;  // sorted ascending
  double tol_;
};

// True iff the words have identical multiplicity profiles and each pair of
// matched values differs by at most max_dev.
bool words_match(const SpectrumWord& a, const SpectrumWord& b, double max_dev);

// Largest matched-value deviation; +infinity when the profiles differ.
double words_deviation(const SpectrumWord& a, const SpectrumWord& b);

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
// Throws std::invalid_argument when the matrix is not symmetric within 1e-12.
std::vector<double> symmetric_eigenvalues(RealMatrix m);

SpectrumWord eig_sym(const RealMatrix& m, double tol = kDefaultTol);
SpectrumWord eig_sym(const IntMatrix& m, double tol = kDefaultTol);

// Count of eigenvalues with |lambda| <= tol.
std::size_t nullity(const RealMatrix& m, double tol = kDefaultTol);

}  // namespace specop
