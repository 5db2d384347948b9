#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace boolfun {

/// A point of Z_2^n packed into a bit mask: bit j holds coordinate
/// x_{j+1}, and the group operation is bitwise XOR. The same encoding
/// doubles as a character index for the Walsh-Hadamard basis. A mask
/// bit of 1 corresponds to hypercube value -1, i.e. value = (-1)^bit.
using GroupPoint = std::uint64_t;

/// Largest dimension a dense table takes by default (2^26 doubles,
/// 512 MiB). Callers that know their memory budget can pass a
/// different cap where one is accepted.
inline constexpr int kDefaultDenseCap = 26;

/// Masks must fit one 64-bit word.
inline constexpr int kMaxDimension = 63;

/// Number of points of Z_2^n.
constexpr std::uint64_t domain_size(int n) {
  return std::uint64_t{1} << n;
}

constexpr bool valid_dimension(int n) {
  return n >= 1 && n <= kMaxDimension;
}

constexpr bool valid_point(GroupPoint x, int n) {
  return valid_dimension(n) && x < domain_size(n);
}

/// Character sign without validation: (-1)^{popcount(x AND y)}.
constexpr double char_sign(GroupPoint y, GroupPoint x) {
  return (std::popcount(x & y) & 1) ? -1.0 : 1.0;
}

/// chi_y(x): -1 when sum_{i : y_i = 1} x_i is odd over Z_2, +1
/// otherwise. Throws std::invalid_argument unless both masks are
/// points of Z_2^n.
inline double char_eval(GroupPoint y, GroupPoint x, int n) {
  if (!valid_point(x, n) || !valid_point(y, n)) {
    throw std::invalid_argument("char_eval: mask out of range for dimension " +
                                std::to_string(n));
  }
  return char_sign(y, x);
}

}  // namespace boolfun
