#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "boolfun/oracle.hpp"
#include "boolfun/serialize.hpp"
#include "boolfun/value_set.hpp"

namespace boolfun {

struct Verdict {
  bool accepted = false;
  /// Present exactly when rejected: a queried point whose value fell
  /// outside the target set by more than the membership tolerance.
  std::optional<std::pair<GroupPoint, double>> witness;
  std::uint64_t queries_used = 0;
  std::uint64_t seed = 0;

  FieldList fields() const;
};

/// ceil(((k+d)^d / d!) ln(1/eps)): enough uniform samples to hit the
/// guaranteed off-set mass of a non-conforming k-sparse function with
/// probability at least 1 - eps. For d = 2 this is
/// ceil((k+2)^2/2 ln(1/eps)).
std::uint64_t sample_count(std::int64_t k, std::int64_t d, double eps);

/// Samples uniform points with replacement and accepts iff every value
/// lies within tolerance of {-1, 1}; stops at the first witness.
/// Always accepts a Boolean oracle; rejects a non-Boolean k-sparse
/// oracle with probability at least 1 - eps. The sparsity promise is
/// not verified; breaking it voids only the rejection guarantee.
Verdict test_booleanity(Oracle& oracle, std::int64_t k, double eps,
                        std::uint64_t seed);

/// The same test against an arbitrary finite target set, with d = |target|.
Verdict test_image_in_set(Oracle& oracle, std::int64_t k,
                          const ValueSet& target, double eps,
                          std::uint64_t seed);

}  // namespace boolfun
