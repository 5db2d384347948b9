#pragma once

#include <cstddef>
#include <map>

#include "boolfun/dense_function.hpp"
#include "boolfun/hypercube.hpp"

namespace boolfun {

/// Coefficients smaller than this in magnitude are dropped when a
/// spectrum is built, so float noise cannot inflate the sparsity.
inline constexpr double kCoefficientEpsilon = 1e-12;

/// A Fourier spectrum stored as a finite map mask -> coefficient; a
/// k-sparse multilinear polynomial with k = sparsity().
class SparseFunction {
 public:
  SparseFunction() = default;  // empty spectrum on n = 1
  SparseFunction(int n, std::map<GroupPoint, double> terms);

  int dimension() const { return n_; }
  std::size_t sparsity() const { return terms_.size(); }
  const std::map<GroupPoint, double>& terms() const { return terms_; }
  double coefficient(GroupPoint y) const;

 private:
  int n_ = 1;
  std::map<GroupPoint, double> terms_;
};

/// sum_y fhat(y) chi_y(x) over the stored terms.
double sparse_eval(const SparseFunction& f, GroupPoint x);

/// Tabulates f at every point of Z_2^n; O(k 2^n).
DenseFunction to_dense(const SparseFunction& f, int n_cap = kDefaultDenseCap);

/// Collects the entries of a dense spectrum with |c| >= threshold into
/// sparse form.
SparseFunction sparsify(const DenseFunction& spectrum,
                        double threshold = kCoefficientEpsilon);

}  // namespace boolfun
