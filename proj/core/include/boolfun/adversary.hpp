#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolfun/dense_function.hpp"
#include "boolfun/oracle.hpp"
#include "boolfun/rng.hpp"
#include "boolfun/serialize.hpp"
#include "boolfun/sparse_function.hpp"
#include "boolfun/value_set.hpp"

namespace boolfun {

/// A function of the low block_bits mask bits, tabulated per block.
/// Its spectrum lives on masks inside those bits, so the sparsity is
/// at most 2^block_bits.
struct BlockFunction {
  int n = 0;
  int block_bits = 0;
  std::vector<double> block_values;  // size 2^block_bits

  std::int64_t block_count() const {
    return std::int64_t{1} << block_bits;
  }
  double eval(GroupPoint x) const {
    return block_values[x & (block_values.size() - 1)];
  }
  Oracle oracle() const;
  DenseFunction to_dense(int n_cap = kDefaultDenseCap) const;
};

/// Uniform draw from the Boolean block family: each of the k blocks
/// independently +1 or -1. k must be a power of two with log2 k <= n.
BlockFunction sample_bk(std::int64_t k, int n, std::uint64_t seed);

/// One uniformly chosen block pinned to the sentinel value 2, the
/// remaining k-1 blocks independently +-1; the off-Boolean mass is
/// exactly 1/k.
BlockFunction sample_ck(std::int64_t k, int n, std::uint64_t seed);

enum class CoefficientLaw {
  kUniform,   // uniform on [-2, 2], resampled out of (-1e-6, 1e-6)
  kGaussian,  // standard normal, resampled out of (-1e-6, 1e-6)
  kDiscrete,  // uniform over {-2, -1, 1, 2}
};

const char* to_string(CoefficientLaw law);
std::optional<CoefficientLaw> parse_coefficient_law(const std::string& name);

/// A spectrum on k distinct uniformly chosen masks with coefficients
/// drawn per the law; no coefficient is within 1e-6 of zero, so the
/// sparsity is exactly k.
SparseFunction sample_sparse_function(int n, std::int64_t k,
                                      CoefficientLaw law, Rng& rng);

struct DistinguishReport {
  std::int64_t k = 0;
  int n = 0;
  std::uint64_t queries = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double detection_rate = 0.0;        // rejections against the sentinel family
  double false_rejection_rate = 0.0;  // rejections against the Boolean family
  double advantage = 0.0;
  double confidence_radius = 0.0;     // 3 sqrt(rate (1-rate) / trials)
  double analytic_prediction = 0.0;   // 1 - (1 - 1/k)^queries
  bool ok = false;

  FieldList fields() const;
};

/// Runs `trials` rounds of the uniform-query detector (reject iff any
/// queried value leaves {-1, 1}) against fresh sentinel and Boolean
/// block samples, and compares the measured detection rate with the
/// analytic curve for independent uniform queries.
DistinguishReport distinguishing_experiment(std::int64_t k, int n,
                                            std::uint64_t queries,
                                            std::uint64_t trials,
                                            std::uint64_t seed);

struct MinFractionOptions {
  CoefficientLaw law = CoefficientLaw::kUniform;
  /// Target set; {-1, 1} when absent.
  std::optional<ValueSet> target;
  /// When set, a fresh target of this size is drawn per sample with
  /// elements uniform on [-2, 2].
  std::optional<int> random_target_size;
  /// Also bound the spectrum support of the vanishing product
  /// Pi_{y in target}(f - y) per sample.
  bool check_spectral_support = true;
  /// Mix in Boolean-plus-tiny-perturbation samples, whose values hug
  /// the target without touching it.
  bool near_boolean_stress = true;
};

struct MinFractionReport {
  int n = 0;
  std::int64_t k = 0;
  std::uint64_t samples = 0;
  std::uint64_t non_boolean = 0;  // samples whose image left the target set
  std::uint64_t seed = 0;
  std::string law;
  std::string target;
  double min_fraction = 0.0;  // NaN when no sample left the target set
  double fraction_bound = 0.0;
  std::uint64_t fraction_violations = 0;
  bool spectral_checked = false;
  std::uint64_t max_spectrum_support = 0;
  double spectrum_bound = 0.0;
  std::uint64_t spectrum_violations = 0;
  bool ok = false;

  FieldList fields() const;
};

/// Samples k-sparse functions, keeps those whose image leaves the
/// target set, and compares the smallest observed off-set fraction
/// with d!/(k+d)^d (and, optionally, the vanishing product's spectrum
/// support with (k+d)^d/d! and the d-fold sumset).
MinFractionReport empirical_min_fraction(int n, std::int64_t k,
                                         std::uint64_t num_samples,
                                         std::uint64_t seed,
                                         const MinFractionOptions& options = {});

struct AuditReport {
  int n = 0;
  std::uint64_t functions = 0;
  double max_deviation = 0.0;  // of fhat*fhat from delta, over all functions
  std::uint64_t tester_rejections = 0;
  std::uint64_t seed = 0;
  bool ok = false;

  FieldList fields() const;
};

/// Enumerates every Boolean function on n <= 4 bits, checks the
/// spectral characterization on each, and runs the sampling tester on
/// each with a derived seed.
AuditReport exhaustive_boolean_audit(int n, std::uint64_t seed = 1);

}  // namespace boolfun
