#include "boolfun/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "boolfun/wht.hpp"

namespace boolfun {

namespace {

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) {
    throw std::invalid_argument(std::string(name) + " must be >= 1");
  }
}

double log2_factorial(std::int64_t d) {
  return std::lgamma(static_cast<double>(d) + 1.0) / std::numbers::ln2;
}

}  // namespace

FieldList UncertaintyReport::fields() const {
  return {{"lhs", lhs}, {"rhs", rhs}, {"slack", slack}, {"holds", holds}};
}

FieldList SupportUncertaintyReport::fields() const {
  FieldList out = {{"support_size", support_size},
                   {"spectrum_support_size", spectrum_support_size},
                   {"spectrum_entropy", spectrum_entropy}};
  for (const Field& f : support_product.fields()) {
    out.push_back({"support_product." + f.key, f.value});
  }
  for (const Field& f : support_entropy.fields()) {
    out.push_back({"support_entropy." + f.key, f.value});
  }
  return out;
}

double booleanity_deviation(const DenseFunction& fhat) {
  const DenseFunction conv = convolve_fast(fhat, fhat);
  double max_dev = 0.0;
  for (GroupPoint x = 0; x < conv.size(); ++x) {
    const double target = x == 0 ? 1.0 : 0.0;
    max_dev = std::max(max_dev, std::abs(conv[x] - target));
  }
  return max_dev;
}

bool is_boolean_by_spectrum(const DenseFunction& fhat, double tol) {
  return booleanity_deviation(fhat) <= tol;
}

UncertaintyReport check_entropy_uncertainty(const DenseFunction& f,
                                            double slack_tol) {
  if (l2_norm(f) == 0.0) {
    throw std::invalid_argument(
        "check_entropy_uncertainty: requires a non-zero function");
  }
  const DenseFunction fhat = wht_forward(f);
  UncertaintyReport report;
  report.lhs = entropy(normalized(f)) + entropy(normalized(fhat));
  report.rhs = static_cast<double>(f.dimension());
  report.slack = report.lhs - report.rhs;
  report.holds = report.slack >= -slack_tol;
  return report;
}

SupportUncertaintyReport check_support_uncertainty(const DenseFunction& f,
                                                   double support_tol,
                                                   double slack_tol) {
  if (l2_norm(f) == 0.0) {
    throw std::invalid_argument(
        "check_support_uncertainty: requires a non-zero function");
  }
  const DenseFunction fhat = wht_forward(f);
  SupportUncertaintyReport report;
  report.support_size = support(f, support_tol).size();
  report.spectrum_support_size = support(fhat, support_tol).size();
  report.spectrum_entropy = entropy(normalized(fhat));

  const double n = static_cast<double>(f.dimension());
  const double log_supp = std::log2(static_cast<double>(report.support_size));
  const double log_spec =
      std::log2(static_cast<double>(report.spectrum_support_size));

  report.support_product.lhs = log_supp + log_spec;
  report.support_product.rhs = n;
  report.support_product.slack = report.support_product.lhs - n;
  report.support_product.holds = report.support_product.slack >= -slack_tol;

  report.support_entropy.lhs = log_supp + report.spectrum_entropy;
  report.support_entropy.rhs = n;
  report.support_entropy.slack = report.support_entropy.lhs - n;
  report.support_entropy.holds = report.support_entropy.slack >= -slack_tol;
  return report;
}

bool check_conv_support(const DenseFunction& f, const DenseFunction& g,
                        double tol) {
  if (f.dimension() != g.dimension()) {
    throw std::invalid_argument("check_conv_support: dimension mismatch");
  }
  const DenseFunction conv = convolve_fast(f, g);
  const std::vector<GroupPoint> supp_f = support(f, tol);
  const std::vector<GroupPoint> supp_g = support(g, tol);
  std::unordered_set<GroupPoint> sumset;
  sumset.reserve(supp_f.size() * supp_g.size());
  for (GroupPoint a : supp_f) {
    for (GroupPoint b : supp_g) sumset.insert(a ^ b);
  }
  for (GroupPoint x : support(conv, tol)) {
    if (!sumset.contains(x)) return false;
  }
  return true;
}

std::set<GroupPoint> sumset_power(const std::set<GroupPoint>& a, int d) {
  if (d < 1) throw std::invalid_argument("sumset_power: d must be >= 1");
  std::set<GroupPoint> current = a;
  for (int i = 1; i < d; ++i) {
    std::set<GroupPoint> next;
    for (GroupPoint x : current) {
      for (GroupPoint y : a) next.insert(x ^ y);
    }
    current = std::move(next);
  }
  return current;
}

namespace {

// The direct quotient is used whenever both the power and the
// factorial fit a double; it is then exact for desk-scale arguments.
// Past that the log-space form takes over.
bool direct_quotient_fits(std::int64_t k, std::int64_t d) {
  const double power_log2 =
      static_cast<double>(d) * std::log2(static_cast<double>(k + d));
  return d <= 170 && power_log2 < 1000.0;
}

}  // namespace

double spectral_sparsity_bound(std::int64_t k, std::int64_t d) {
  require_positive(k, "k");
  require_positive(d, "d");
  const double base = static_cast<double>(k + d);
  if (direct_quotient_fits(k, d)) {
    double power = 1.0;
    for (std::int64_t i = 0; i < d; ++i) power *= base;
    double factorial = 1.0;
    for (std::int64_t i = 2; i <= d; ++i) {
      factorial *= static_cast<double>(i);
    }
    return power / factorial;
  }
  return std::exp2(static_cast<double>(d) * std::log2(base) -
                   log2_factorial(d));
}

double spectral_sparsity_bound_binomial(std::int64_t k, std::int64_t d) {
  require_positive(k, "k");
  require_positive(d, "d");
  // C(k+d, d) by the rising product; exact while the intermediate
  // integers fit a double.
  double result = 1.0;
  bool exact = true;
  for (std::int64_t i = 1; i <= d; ++i) {
    result = result * static_cast<double>(k + i) / static_cast<double>(i);
    if (result >= 0x1p53) exact = false;
  }
  if (exact) return std::round(result);
  const double log2_value = (std::lgamma(static_cast<double>(k + d) + 1.0) -
                             std::lgamma(static_cast<double>(d) + 1.0) -
                             std::lgamma(static_cast<double>(k) + 1.0)) /
                            std::numbers::ln2;
  return std::exp2(log2_value);
}

double far_from_set_bound(std::int64_t k, std::int64_t d) {
  require_positive(k, "k");
  require_positive(d, "d");
  const double base = static_cast<double>(k + d);
  if (direct_quotient_fits(k, d)) {
    double power = 1.0;
    for (std::int64_t i = 0; i < d; ++i) power *= base;
    double factorial = 1.0;
    for (std::int64_t i = 2; i <= d; ++i) {
      factorial *= static_cast<double>(i);
    }
    return factorial / power;
  }
  return std::exp2(log2_factorial(d) -
                   static_cast<double>(d) * std::log2(base));
}

DenseFunction vanishing_product(const DenseFunction& f, const ValueSet& target) {
  std::vector<double> values(f.size(), 1.0);
  for (double y : target.elements()) {
    for (GroupPoint x = 0; x < f.size(); ++x) {
      values[x] *= f[x] - y;
    }
  }
  return DenseFunction(f.dimension(), std::move(values), kMaxDimension);
}

FiniteDistribution::FiniteDistribution(std::map<std::uint64_t, double> masses)
    : masses_(std::move(masses)) {
  double total = 0.0;
  for (const auto& [outcome, p] : masses_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument(
          "FiniteDistribution: masses must be finite and >= 0");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("FiniteDistribution: masses must sum to 1");
  }
}

double FiniteDistribution::mass(std::uint64_t outcome) const {
  auto it = masses_.find(outcome);
  return it == masses_.end() ? 0.0 : it->second;
}

double FiniteDistribution::shannon_entropy() const {
  double h = 0.0;
  for (const auto& [outcome, p] : masses_) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

FieldList ConditionalEntropyReport::fields() const {
  return {{"entropy", entropy},
          {"conditional_entropy", conditional_entropy},
          {"prob_not_x0", prob_not_x0},
          {"bound", bound},
          {"holds", holds}};
}

ConditionalEntropyReport conditional_entropy_bound_check(
    const FiniteDistribution& x, std::uint64_t x0) {
  double prob_rest = 0.0;
  for (const auto& [outcome, p] : x.masses()) {
    if (outcome != x0) prob_rest += p;
  }
  if (prob_rest <= 0.0) {
    throw std::invalid_argument(
        "conditional_entropy_bound_check: P[X = x0] = 1, conditional "
        "undefined");
  }
  ConditionalEntropyReport report;
  report.entropy = x.shannon_entropy();
  report.prob_not_x0 = prob_rest;
  for (const auto& [outcome, p] : x.masses()) {
    if (outcome == x0 || p <= 0.0) continue;
    const double q = p / prob_rest;
    report.conditional_entropy -= q * std::log2(q);
  }
  report.bound = report.entropy / prob_rest;
  report.holds = report.conditional_entropy <= report.bound + kSlackTolerance;
  return report;
}

FieldList ClosenessReport::fields() const {
  return {{"eps", eps},
          {"k", k},
          {"distance", distance},
          {"close", close},
          {"conv_norm_sq", conv_norm_sq},
          {"conv_entropy", conv_entropy},
          {"prob_nonzero", prob_nonzero},
          {"non_boolean_fraction", non_boolean_fraction},
          {"bound", bound},
          {"conv_norm_ok", conv_norm_ok},
          {"prob_ok", prob_ok},
          {"fraction_ok", fraction_ok},
          {"holds", holds}};
}

ClosenessReport check_closeness_theorem(const DenseFunction& f, double k,
                                        double eps) {
  if (!(k > 1.0)) {
    throw std::invalid_argument("check_closeness_theorem: requires k > 1");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("check_closeness_theorem: requires eps > 0");
  }
  const double norm_sq = [&] {
    double sum = 0.0;
    for (double v : f.values()) sum += v * v;
    return sum;
  }();
  const double n_points = static_cast<double>(f.size());
  if (std::abs(norm_sq / n_points - 1.0) > 1e-6) {
    throw std::invalid_argument(
        "check_closeness_theorem: requires ||f||^2 = 2^n (relative 1e-6), got "
        "||f||^2 / 2^n = " +
        format_double(norm_sq / n_points));
  }

  const DenseFunction fhat = wht_forward(f);
  const DenseFunction conv = convolve_fast(fhat, fhat);

  ClosenessReport report;
  report.eps = eps;
  report.k = k;
  for (double v : conv.values()) report.conv_norm_sq += v * v;
  report.conv_entropy = entropy(normalized(conv));
  if (report.conv_entropy > 2.0 * std::log2(k) + kSlackTolerance) {
    throw std::invalid_argument(
        "check_closeness_theorem: requires H[(fhat*fhat)/||.||] <= 2 log2 k, "
        "got entropy " +
        format_double(report.conv_entropy) + " against 2 log2 k = " +
        format_double(2.0 * std::log2(k)));
  }

  report.distance = boolean_distance(f);
  report.close = report.distance <= eps;
  report.prob_nonzero = 1.0 - conv[0] * conv[0] / report.conv_norm_sq;
  report.non_boolean_fraction =
      boolfun::non_boolean_fraction(f, ValueSet::boolean_pair());

  const double eps_sq = eps * eps;
  const double exponent = 2.0 * (eps_sq + 1.0) / eps_sq;
  report.bound = std::exp2(-exponent * std::log2(k));

  report.conv_norm_ok = report.conv_norm_sq >= 1.0 + eps_sq - kSlackTolerance;
  report.prob_ok =
      report.prob_nonzero >= eps_sq / (eps_sq + 1.0) - kSlackTolerance;
  report.fraction_ok =
      report.non_boolean_fraction >= report.bound - kSlackTolerance;
  report.holds =
      report.close || (report.conv_norm_ok && report.prob_ok && report.fraction_ok);
  return report;
}

}  // namespace boolfun
