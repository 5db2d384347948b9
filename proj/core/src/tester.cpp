#include "boolfun/tester.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "boolfun/errors.hpp"
#include "boolfun/rng.hpp"
#include "boolfun/spectral.hpp"

namespace boolfun {

Oracle::Oracle(int n, std::function<double(GroupPoint)> eval)
    : n_(n), eval_(std::move(eval)) {
  if (!valid_dimension(n)) {
    throw std::invalid_argument("Oracle: dimension must be in [1, " +
                                std::to_string(kMaxDimension) + "]");
  }
  if (!eval_) {
    throw std::invalid_argument("Oracle: evaluator must be callable");
  }
}

double Oracle::operator()(GroupPoint x) {
  if (x >= domain_size(n_)) {
    throw std::invalid_argument("Oracle: point out of range for dimension " +
                                std::to_string(n_));
  }
  ++queries_;
  return eval_(x);
}

Oracle make_oracle(SparseFunction f) {
  const int n = f.dimension();
  return Oracle(n, [f = std::move(f)](GroupPoint x) { return sparse_eval(f, x); });
}

Oracle make_oracle(DenseFunction f) {
  const int n = f.dimension();
  return Oracle(n, [f = std::move(f)](GroupPoint x) { return f[x]; });
}

FieldList Verdict::fields() const {
  FieldList out = {{"accepted", accepted}};
  if (witness) {
    out.push_back({"witness_point", witness->first});
    out.push_back({"witness_value", witness->second});
  }
  out.push_back({"queries_used", queries_used});
  out.push_back({"seed", seed});
  return out;
}

std::uint64_t sample_count(std::int64_t k, std::int64_t d, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("sample_count: eps must lie in (0, 1)");
  }
  const double raw = spectral_sparsity_bound(k, d) * std::log(1.0 / eps);
  if (!(raw < 1e18)) {
    throw ResourceLimitError("sample_count: requested sample count overflows");
  }
  // Back off by a hair before the ceiling so products that are exact
  // integers in real arithmetic do not round one query high.
  const double guarded = raw - 1e-9;
  if (!(guarded > 0.0)) return 1;
  return static_cast<std::uint64_t>(std::ceil(guarded));
}

Verdict test_image_in_set(Oracle& oracle, std::int64_t k,
                          const ValueSet& target, double eps,
                          std::uint64_t seed) {
  const std::uint64_t samples =
      sample_count(k, static_cast<std::int64_t>(target.size()), eps);
  const std::uint64_t points = domain_size(oracle.dimension());
  Rng rng(seed);
  Verdict verdict;
  verdict.seed = seed;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const GroupPoint x = rng.next_below(points);
    const double value = oracle(x);
    if (!target.contains(value)) {
      verdict.accepted = false;
      verdict.witness = std::pair{x, value};
      verdict.queries_used = i + 1;
      return verdict;
    }
  }
  verdict.accepted = true;
  verdict.queries_used = samples;
  return verdict;
}

Verdict test_booleanity(Oracle& oracle, std::int64_t k, double eps,
                        std::uint64_t seed) {
  return test_image_in_set(oracle, k, ValueSet::boolean_pair(), eps, seed);
}

}  // namespace boolfun
