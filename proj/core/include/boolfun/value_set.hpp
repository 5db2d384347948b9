#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace boolfun {

/// Absolute radius within which a computed value counts as a member of
/// a target set.
inline constexpr double kValueSetTolerance = 1e-9;

/// A finite set of target reals with a membership radius. Elements
/// must be pairwise farther apart than twice the radius so membership
/// is unambiguous.
class ValueSet {
 public:
  explicit ValueSet(std::vector<double> elements,
                    double tolerance = kValueSetTolerance)
      : elements_(std::move(elements)), tolerance_(tolerance) {
    if (elements_.empty()) {
      throw std::invalid_argument("ValueSet: at least one element required");
    }
    if (!(tolerance_ >= 0) || !std::isfinite(tolerance_)) {
      throw std::invalid_argument("ValueSet: tolerance must be finite and >= 0");
    }
    for (double e : elements_) {
      if (!std::isfinite(e)) {
        throw std::invalid_argument("ValueSet: elements must be finite");
      }
    }
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 1; i < elements_.size(); ++i) {
      if (!(elements_[i] - elements_[i - 1] > 2 * tolerance_)) {
        throw std::invalid_argument(
            "ValueSet: elements must be separated by more than twice the "
            "tolerance");
      }
    }
  }

  bool contains(double v) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
    if (it != elements_.end() && std::abs(*it - v) <= tolerance_) return true;
    if (it != elements_.begin() && std::abs(*(it - 1) - v) <= tolerance_) {
      return true;
    }
    return false;
  }

  const std::vector<double>& elements() const { return elements_; }
  double tolerance() const { return tolerance_; }
  std::size_t size() const { return elements_.size(); }

  /// {-1, 1}, the Boolean target set.
  static ValueSet boolean_pair(double tolerance = kValueSetTolerance) {
    return ValueSet({-1.0, 1.0}, tolerance);
  }

 private:
  std::vector<double> elements_;  // sorted ascending
  double tolerance_;
};

}  // namespace boolfun
