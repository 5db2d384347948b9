#include "boolfun/sparse_function.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boolfun {

SparseFunction::SparseFunction(int n, std::map<GroupPoint, double> terms)
    : n_(n), terms_(std::move(terms)) {
  if (!valid_dimension(n)) {
    throw std::invalid_argument("SparseFunction: dimension must be in [1, " +
                                std::to_string(kMaxDimension) + "]");
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!valid_point(it->first, n)) {
      throw std::invalid_argument(
          "SparseFunction: mask out of range for dimension " +
          std::to_string(n));
    }
    if (!std::isfinite(it->second)) {
      throw std::invalid_argument("SparseFunction: coefficients must be finite");
    }
    if (std::abs(it->second) < kCoefficientEpsilon) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

double SparseFunction::coefficient(GroupPoint y) const {
  auto it = terms_.find(y);
  return it == terms_.end() ? 0.0 : it->second;
}

double sparse_eval(const SparseFunction& f, GroupPoint x) {
  if (!valid_point(x, f.dimension())) {
    throw std::invalid_argument(
        "sparse_eval: point out of range for dimension " +
        std::to_string(f.dimension()));
  }
  double sum = 0.0;
  for (const auto& [mask, coefficient] : f.terms()) {
    sum += char_sign(mask, x) < 0 ? -coefficient : coefficient;
  }
  return sum;
}

DenseFunction to_dense(const SparseFunction& f, int n_cap) {
  DenseFunction dense = DenseFunction::zeros(f.dimension(), n_cap);
  // Term-by-term passes accumulate in the same order as sparse_eval,
  // so the tabulated values match pointwise evaluation bit for bit.
  for (const auto& [mask, coefficient] : f.terms()) {
    for (GroupPoint x = 0; x < dense.size(); ++x) {
      dense[x] += char_sign(mask, x) < 0 ? -coefficient : coefficient;
    }
  }
  return dense;
}

SparseFunction sparsify(const DenseFunction& spectrum, double threshold) {
  std::map<GroupPoint, double> terms;
  for (GroupPoint y = 0; y < spectrum.size(); ++y) {
    if (std::abs(spectrum[y]) >= threshold) terms.emplace(y, spectrum[y]);
  }
  return SparseFunction(spectrum.dimension(), std::move(terms));
}

}  // namespace boolfun
