#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "boolfun/dense_function.hpp"
#include "boolfun/serialize.hpp"
#include "boolfun/value_set.hpp"

namespace boolfun {

/// Slack below which an inequality is considered violated rather than
/// rounded.
inline constexpr double kSlackTolerance = 1e-9;

/// Magnitude below which a spectrum entry does not count as support.
inline constexpr double kSupportTolerance = 1e-9;

/// One inequality of the form lhs >= rhs, with slack = lhs - rhs.
struct UncertaintyReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;  // slack >= -tolerance

  FieldList fields() const;
};

struct SupportUncertaintyReport {
  std::uint64_t support_size = 0;           // |supp f|
  std::uint64_t spectrum_support_size = 0;  // |supp fhat|
  double spectrum_entropy = 0.0;            // H[fhat / ||fhat||]
  UncertaintyReport support_product;  // log2|supp f| + log2|supp fhat| >= n
  UncertaintyReport support_entropy;  // log2|supp f| + H[fhat/||fhat||] >= n

  FieldList fields() const;
};

/// Largest deviation of fhat * fhat from delta; zero exactly when the
/// spectrum belongs to a Boolean function.
double booleanity_deviation(const DenseFunction& fhat);

/// True iff max|fhat * fhat - delta| <= tol.
bool is_boolean_by_spectrum(const DenseFunction& fhat, double tol);

/// H[f/||f||] + H[fhat/||fhat||] >= n. Throws std::invalid_argument on
/// the zero function.
UncertaintyReport check_entropy_uncertainty(const DenseFunction& f,
                                            double slack_tol = kSlackTolerance);

/// |supp f| |supp fhat| >= 2^n, and its entropy-sharpened form
/// |supp f| 2^{H[fhat/||fhat||]} >= 2^n, both reported in log2 scale.
SupportUncertaintyReport check_support_uncertainty(
    const DenseFunction& f, double support_tol = kSupportTolerance,
    double slack_tol = kSlackTolerance);

/// True iff every support point of f*g lies in the XOR sumset
/// {a ^ b : a in supp f, b in supp g}.
bool check_conv_support(const DenseFunction& f, const DenseFunction& g,
                        double tol);

/// Elements expressible as an XOR sum of exactly d elements of a, with
/// repetition. When 0 is in a this contains every i-fold sumset, i <= d.
std::set<GroupPoint> sumset_power(const std::set<GroupPoint>& a, int d);

/// (k+d)^d / d!. Uses the direct product while it fits in a double and
/// falls back to log-space only past that, so desk-scale values are
/// exact.
double spectral_sparsity_bound(std::int64_t k, std::int64_t d);

/// The sharper binomial form C(k+d, d) of the same bound.
double spectral_sparsity_bound_binomial(std::int64_t k, std::int64_t d);

/// d! / (k+d)^d: the guaranteed off-set mass of a k-sparse function
/// whose image is not contained in a d-element set. d = 2 gives
/// 2/(k+2)^2.
double far_from_set_bound(std::int64_t k, std::int64_t d);

/// Pi_{y in target} (f - y); zero exactly where f lands in the set.
DenseFunction vanishing_product(const DenseFunction& f, const ValueSet& target);

/// A probability mass function over integer-labelled outcomes.
class FiniteDistribution {
 public:
  explicit FiniteDistribution(std::map<std::uint64_t, double> masses);

  const std::map<std::uint64_t, double>& masses() const { return masses_; }
  double mass(std::uint64_t outcome) const;
  /// -sum p log2 p over positive masses.
  double shannon_entropy() const;

 private:
  std::map<std::uint64_t, double> masses_;
};

struct ConditionalEntropyReport {
  double entropy = 0.0;              // H(X)
  double conditional_entropy = 0.0;  // H(X | X != x0)
  double prob_not_x0 = 0.0;
  double bound = 0.0;  // H(X) / P[X != x0]
  bool holds = false;

  FieldList fields() const;
};

/// H(X | X != x0) <= H(X) / P[X != x0]. Throws std::invalid_argument
/// when X is concentrated on x0 (the conditional is undefined).
ConditionalEntropyReport conditional_entropy_bound_check(
    const FiniteDistribution& x, std::uint64_t x0);

struct ClosenessReport {
  double eps = 0.0;
  double k = 0.0;
  double distance = 0.0;  // L2 distance of f^2 from 1
  bool close = false;     // distance <= eps
  double conv_norm_sq = 0.0;       // ||fhat * fhat||^2
  double conv_entropy = 0.0;       // H[(fhat*fhat) / ||fhat*fhat||]
  double prob_nonzero = 0.0;       // P[X != 0], P[X=x] ~ (fhat*fhat)(x)^2
  double non_boolean_fraction = 0.0;
  double bound = 0.0;              // k^{-2(eps^2+1)/eps^2}
  bool conv_norm_ok = false;       // conv_norm_sq >= 1 + eps^2
  bool prob_ok = false;            // prob_nonzero >= eps^2/(eps^2+1)
  bool fraction_ok = false;        // non_boolean_fraction >= bound
  bool holds = false;              // close, or all three far-branch bounds

  FieldList fields() const;
};

/// Closeness-vs-structure check for spectra whose self convolution has
/// entropy at most 2 log2 k. Requires ||f||^2 = 2^n within relative
/// 1e-6 and the entropy condition within 1e-9; throws
/// std::invalid_argument naming the violated precondition. k is real
/// valued (defined through the entropy bound) and must exceed 1.
ClosenessReport check_closeness_theorem(const DenseFunction& f, double k,
                                        double eps);

}  // namespace boolfun
