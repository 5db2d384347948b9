#pragma once

#include <cstdint>
#include <vector>

#include "boolfun/hypercube.hpp"
#include "boolfun/value_set.hpp"

namespace boolfun {

/// A real-valued function on Z_2^n held as a table of 2^n values
/// indexed by mask. Entries are validated finite at construction.
class DenseFunction {
 public:
  DenseFunction() = default;
  DenseFunction(int n, std::vector<double> values, int n_cap = kDefaultDenseCap);

  static DenseFunction zeros(int n, int n_cap = kDefaultDenseCap);
  static DenseFunction constant(int n, double value, int n_cap = kDefaultDenseCap);
  /// The unit impulse at the group identity.
  static DenseFunction delta(int n, int n_cap = kDefaultDenseCap);
  /// Adopts values without the finite scan; for results of internal
  /// arithmetic that cannot produce non-finite entries.
  static DenseFunction unchecked(int n, std::vector<double> values);

  int dimension() const { return n_; }
  std::uint64_t size() const { return values_.size(); }
  double operator[](GroupPoint x) const { return values_[x]; }
  double& operator[](GroupPoint x) { return values_[x]; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

/// sqrt(sum_x f(x)^2). Summation, not expectation.
double l2_norm(const DenseFunction& f);

/// {x : |f(x)| > tol} in ascending mask order.
std::vector<GroupPoint> support(const DenseFunction& f, double tol);

/// -sum_x f(x)^2 log2 f(x)^2, with 0 log 0 = 0.
double entropy(const DenseFunction& f);

/// f / ||f||. Throws std::invalid_argument on the zero function.
DenseFunction normalized(const DenseFunction& f);

/// L2 distance of f^2 from the constant 1:
/// sqrt( (1/2^n) sum_x (f(x)^2 - 1)^2 ). Zero exactly on Boolean f.
double boolean_distance(const DenseFunction& f);

/// Fraction of the domain (uniform measure) whose value falls outside
/// the target set's membership radius around every element.
double non_boolean_fraction(const DenseFunction& f, const ValueSet& target);

/// values[x] = f(x) g(x). Dimensions must match.
DenseFunction pointwise_product(const DenseFunction& f, const DenseFunction& g);

}  // namespace boolfun
