#pragma once

#include <cstdint>
#include <functional>

#include "boolfun/dense_function.hpp"
#include "boolfun/sparse_function.hpp"

namespace boolfun {

/// Black-box point evaluator with a query meter. Each operator() call
/// costs exactly one query; the wrapped function must be deterministic
/// in its argument. One test run queries its oracle sequentially;
/// concurrent runs need one Oracle instance each.
class Oracle {
 public:
  Oracle(int n, std::function<double(GroupPoint)> eval);

  int dimension() const { return n_; }
  double operator()(GroupPoint x);
  std::uint64_t query_count() const { return queries_; }

 private:
  int n_;
  std::function<double(GroupPoint)> eval_;
  std::uint64_t queries_ = 0;
};

/// Evaluates the stored spectrum term by term; O(k) per query.
Oracle make_oracle(SparseFunction f);

/// Table lookup per query.
Oracle make_oracle(DenseFunction f);

}  // namespace boolfun
