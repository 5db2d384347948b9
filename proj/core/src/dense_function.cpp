#include "boolfun/dense_function.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "boolfun/errors.hpp"

namespace boolfun {

namespace {

void require_dense_dimension(int n, int n_cap) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("DenseFunction: dimension must be in [1, " +
                                std::to_string(kMaxDimension) + "], got " +
                                std::to_string(n));
  }
  if (n > n_cap) {
    throw ResourceLimitError("DenseFunction: dimension " + std::to_string(n) +
                             " exceeds the cap of " + std::to_string(n_cap));
  }
}

}  // namespace

DenseFunction::DenseFunction(int n, std::vector<double> values, int n_cap)
    : n_(n), values_(std::move(values)) {
  require_dense_dimension(n, n_cap);
  if (values_.size() != domain_size(n)) {
    throw std::invalid_argument(
        "DenseFunction: expected " + std::to_string(domain_size(n)) +
        " values for dimension " + std::to_string(n) + ", got " +
        std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("DenseFunction: entries must be finite");
    }
  }
}

DenseFunction DenseFunction::zeros(int n, int n_cap) {
  require_dense_dimension(n, n_cap);
  return unchecked(n, std::vector<double>(domain_size(n), 0.0));
}

DenseFunction DenseFunction::constant(int n, double value, int n_cap) {
  require_dense_dimension(n, n_cap);
  if (!std::isfinite(value)) {
    throw std::invalid_argument("DenseFunction: entries must be finite");
  }
  return unchecked(n, std::vector<double>(domain_size(n), value));
}

DenseFunction DenseFunction::delta(int n, int n_cap) {
  DenseFunction f = zeros(n, n_cap);
  f[0] = 1.0;
  return f;
}

DenseFunction DenseFunction::unchecked(int n, std::vector<double> values) {
  DenseFunction f;
  f.n_ = n;
  f.values_ = std::move(values);
  return f;
}

double l2_norm(const DenseFunction& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v * v;
  return std::sqrt(sum);
}

std::vector<GroupPoint> support(const DenseFunction& f, double tol) {
  if (!(tol >= 0)) {
    throw std::invalid_argument("support: tolerance must be >= 0");
  }
  std::vector<GroupPoint> points;
  for (GroupPoint x = 0; x < f.size(); ++x) {
    if (std::abs(f[x]) > tol) points.push_back(x);
  }
  return points;
}

double entropy(const DenseFunction& f) {
  double h = 0.0;
  for (double v : f.values()) {
    const double s = v * v;
    if (s > 0.0) h -= s * std::log2(s);
  }
  return h;
}

DenseFunction normalized(const DenseFunction& f) {
  const double norm = l2_norm(f);
  if (norm == 0.0) {
    throw std::invalid_argument("normalized: the zero function has no direction");
  }
  std::vector<double> values = f.values();
  for (double& v : values) v /= norm;
  return DenseFunction::unchecked(f.dimension(), std::move(values));
}

double boolean_distance(const DenseFunction& f) {
  double sum = 0.0;
  for (double v : f.values()) {
    const double d = v * v - 1.0;
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(f.size()));
}

double non_boolean_fraction(const DenseFunction& f, const ValueSet& target) {
  std::uint64_t outside = 0;
  for (double v : f.values()) {
    if (!target.contains(v)) ++outside;
  }
  return static_cast<double>(outside) / static_cast<double>(f.size());
}

DenseFunction pointwise_product(const DenseFunction& f, const DenseFunction& g) {
  if (f.dimension() != g.dimension()) {
    throw std::invalid_argument("pointwise_product: dimension mismatch");
  }
  std::vector<double> values(f.size());
  for (GroupPoint x = 0; x < f.size(); ++x) values[x] = f[x] * g[x];
  return DenseFunction(f.dimension(), std::move(values), kMaxDimension);
}

}  // namespace boolfun
