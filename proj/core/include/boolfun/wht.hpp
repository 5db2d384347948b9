#pragma once

#include <span>

#include "boolfun/dense_function.hpp"

namespace boolfun {

/// Naive XOR convolution costs 4^n multiply-adds; dimensions above
/// this cap are refused.
inline constexpr int kNaiveConvolutionCap = 14;

/// In-place unnormalized butterfly: replaces a (length 2^n) with Ha,
/// where [Ha](x) = sum_y a[y] (-1)^{popcount(x AND y)}. Stages run in
/// ascending bit order; n 2^n additions total. Applying H twice
/// multiplies by 2^n. The caller owns the buffer exclusively for the
/// duration of the call.
void wht_inplace(std::span<double> a);

/// Spectrum of f: fhat(x) = (1/2^n) sum_y f(y) chi_y(x).
DenseFunction wht_forward(const DenseFunction& f);

/// Fourier expansion f(x) = sum_y fhat(y) chi_y(x); the inverse of
/// wht_forward, carrying no normalization of its own.
DenseFunction wht_inverse(const DenseFunction& fhat);

/// [f*g](x) = sum_y f(y) g(x XOR y), summed literally.
DenseFunction convolve_naive(const DenseFunction& f, const DenseFunction& g,
                             int n_cap = kNaiveConvolutionCap);

/// The same convolution through the transform, H(Hf . Hg) / 2^n;
/// O(n 2^n) arithmetic.
DenseFunction convolve_fast(const DenseFunction& f, const DenseFunction& g);

/// power-fold self convolution; power 0 yields delta, the convolution
/// identity.
DenseFunction self_convolution_power(const DenseFunction& f, int power);

}  // namespace boolfun
