#include "boolfun/wht.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boolfun/errors.hpp"

namespace boolfun {

void wht_inplace(std::span<double> a) {
  const std::size_t size = a.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += half << 1) {
      for (std::size_t i = block; i < block + half; ++i) {
        const double u = a[i];
        const double v = a[i + half];
        a[i] = u + v;
        a[i + half] = u - v;
      }
    }
  }
}

DenseFunction wht_forward(const DenseFunction& f) {
  std::vector<double> a = f.values();
  wht_inplace(a);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (double& v : a) v *= scale;
  return DenseFunction::unchecked(f.dimension(), std::move(a));
}

DenseFunction wht_inverse(const DenseFunction& fhat) {
  std::vector<double> a = fhat.values();
  wht_inplace(a);
  return DenseFunction::unchecked(fhat.dimension(), std::move(a));
}

DenseFunction convolve_naive(const DenseFunction& f, const DenseFunction& g,
                             int n_cap) {
  if (f.dimension() != g.dimension()) {
    throw std::invalid_argument("convolve_naive: dimension mismatch");
  }
  if (f.dimension() > n_cap) {
    throw ResourceLimitError("convolve_naive: dimension " +
                             std::to_string(f.dimension()) +
                             " exceeds the cap of " + std::to_string(n_cap));
  }
  std::vector<double> out(f.size());
  for (GroupPoint x = 0; x < f.size(); ++x) {
    double sum = 0.0;
    for (GroupPoint y = 0; y < f.size(); ++y) {
      sum += f[y] * g[x ^ y];
    }
    out[x] = sum;
  }
  return DenseFunction::unchecked(f.dimension(), std::move(out));
}

DenseFunction convolve_fast(const DenseFunction& f, const DenseFunction& g) {
  if (f.dimension() != g.dimension()) {
    throw std::invalid_argument("convolve_fast: dimension mismatch");
  }
  std::vector<double> a = f.values();
  std::vector<double> b = g.values();
  wht_inplace(a);
  wht_inplace(b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  wht_inplace(a);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (double& v : a) v *= scale;
  return DenseFunction::unchecked(f.dimension(), std::move(a));
}

DenseFunction self_convolution_power(const DenseFunction& f, int power) {
  if (power < 0) {
    throw std::invalid_argument("self_convolution_power: power must be >= 0");
  }
  if (power == 0) return DenseFunction::delta(f.dimension(), kMaxDimension);
  if (power == 1) return f;
  // The spectrum of the p-fold self convolution is 2^{n(p-1)} fhat^p,
  // so the whole chain collapses to H((Hf)^p) / 2^n.
  std::vector<double> a = f.values();
  wht_inplace(a);
  for (double& v : a) {
    double acc = v;
    for (int i = 1; i < power; ++i) acc *= v;
    v = acc;
  }
  wht_inplace(a);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (double& v : a) v *= scale;
  return DenseFunction::unchecked(f.dimension(), std::move(a));
}

}  // namespace boolfun
