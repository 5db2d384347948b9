#include "boolfun/adversary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "boolfun/errors.hpp"
#include "boolfun/spectral.hpp"
#include "boolfun/tester.hpp"
#include "boolfun/wht.hpp"

namespace boolfun {

namespace {

int block_bits_for(std::int64_t k, int n) {
  if (k < 1 || (k & (k - 1)) != 0) {
    throw std::invalid_argument("block sampling: k must be a power of two");
  }
  const int bits = std::bit_width(static_cast<std::uint64_t>(k)) - 1;
  if (!valid_dimension(n) || bits > n) {
    throw std::invalid_argument("block sampling: requires log2(k) <= n");
  }
  return bits;
}

ValueSet random_value_set(int size, Rng& rng) {
  std::vector<double> elements;
  elements.reserve(size);
  while (static_cast<int>(elements.size()) < size) {
    const double candidate = rng.next_uniform(-2.0, 2.0);
    bool separated = true;
    for (double e : elements) {
      if (std::abs(e - candidate) <= 2 * kValueSetTolerance) {
        separated = false;
        break;
      }
    }
    if (separated) elements.push_back(candidate);
  }
  return ValueSet(std::move(elements));
}

/// A Boolean character plus a coefficient in [1e-6, 1e-2]: every value
/// sits just off +-1, outside the membership radius but close enough
/// to stress it.
SparseFunction near_boolean_sample(int n, Rng& rng) {
  const std::uint64_t points = domain_size(n);
  const GroupPoint main_mask = rng.next_below(points);
  GroupPoint side_mask = rng.next_below(points);
  while (side_mask == main_mask) side_mask = rng.next_below(points);
  const double main_sign = rng.next_sign();
  const double perturbation = rng.next_uniform(1e-6, 1e-2);
  return SparseFunction(
      n, {{main_mask, main_sign}, {side_mask, perturbation}});
}

}  // namespace

Oracle BlockFunction::oracle() const {
  return Oracle(n, [values = block_values](GroupPoint x) {
    return values[x & (values.size() - 1)];
  });
}

DenseFunction BlockFunction::to_dense(int n_cap) const {
  DenseFunction dense = DenseFunction::zeros(n, n_cap);
  for (GroupPoint x = 0; x < dense.size(); ++x) dense[x] = eval(x);
  return dense;
}

BlockFunction sample_bk(std::int64_t k, int n, std::uint64_t seed) {
  const int bits = block_bits_for(k, n);
  BlockFunction f{n, bits, std::vector<double>(static_cast<std::size_t>(k))};
  Rng rng(seed);
  for (double& v : f.block_values) {
    v = static_cast<double>(rng.next_sign());
  }
  return f;
}

BlockFunction sample_ck(std::int64_t k, int n, std::uint64_t seed) {
  const int bits = block_bits_for(k, n);
  BlockFunction f{n, bits, std::vector<double>(static_cast<std::size_t>(k))};
  Rng rng(seed);
  const std::uint64_t sentinel = rng.next_below(static_cast<std::uint64_t>(k));
  for (std::size_t i = 0; i < f.block_values.size(); ++i) {
    f.block_values[i] =
        i == sentinel ? 2.0 : static_cast<double>(rng.next_sign());
  }
  return f;
}

const char* to_string(CoefficientLaw law) {
  switch (law) {
    case CoefficientLaw::kUniform: return "uniform";
    case CoefficientLaw::kGaussian: return "gaussian";
    case CoefficientLaw::kDiscrete: return "discrete";
  }
  return "unknown";
}

std::optional<CoefficientLaw> parse_coefficient_law(const std::string& name) {
  if (name == "uniform") return CoefficientLaw::kUniform;
  if (name == "gaussian") return CoefficientLaw::kGaussian;
  if (name == "discrete") return CoefficientLaw::kDiscrete;
  return std::nullopt;
}

SparseFunction sample_sparse_function(int n, std::int64_t k,
                                      CoefficientLaw law, Rng& rng) {
  if (!valid_dimension(n)) {
    throw std::invalid_argument("sample_sparse_function: bad dimension");
  }
  const std::uint64_t points = domain_size(n);
  if (k < 1 || static_cast<std::uint64_t>(k) > points) {
    throw std::invalid_argument(
        "sample_sparse_function: requires 1 <= k <= 2^n");
  }
  std::set<GroupPoint> masks;
  while (masks.size() < static_cast<std::size_t>(k)) {
    masks.insert(rng.next_below(points));
  }
  std::map<GroupPoint, double> terms;
  for (GroupPoint mask : masks) {
    double c = 0.0;
    switch (law) {
      case CoefficientLaw::kUniform:
        do {
          c = rng.next_uniform(-2.0, 2.0);
        } while (std::abs(c) < 1e-6);
        break;
      case CoefficientLaw::kGaussian:
        do {
          c = rng.next_gaussian();
        } while (std::abs(c) < 1e-6);
        break;
      case CoefficientLaw::kDiscrete: {
        static constexpr double kChoices[] = {-2.0, -1.0, 1.0, 2.0};
        c = kChoices[rng.next_below(4)];
        break;
      }
    }
    terms.emplace(mask, c);
  }
  return SparseFunction(n, std::move(terms));
}

FieldList DistinguishReport::fields() const {
  return {{"k", k},
          {"n", static_cast<std::int64_t>(n)},
          {"queries", queries},
          {"trials", trials},
          {"seed", seed},
          {"detection_rate", detection_rate},
          {"false_rejection_rate", false_rejection_rate},
          {"advantage", advantage},
          {"confidence_radius", confidence_radius},
          {"analytic_prediction", analytic_prediction},
          {"ok", ok}};
}

DistinguishReport distinguishing_experiment(std::int64_t k, int n,
                                            std::uint64_t queries,
                                            std::uint64_t trials,
                                            std::uint64_t seed) {
  block_bits_for(k, n);  // validate the grid point
  if (trials == 0) {
    throw std::invalid_argument("distinguishing_experiment: trials must be >= 1");
  }
  const ValueSet boolean = ValueSet::boolean_pair();
  const std::uint64_t points = domain_size(n);
  std::uint64_t detections = 0;
  std::uint64_t false_rejections = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const BlockFunction sentinel = sample_ck(k, n, derive_seed(seed, 3 * t));
    const BlockFunction boolean_fn = sample_bk(k, n, derive_seed(seed, 3 * t + 1));
    Rng query_rng(derive_seed(seed, 3 * t + 2));
    bool hit_sentinel = false;
    bool hit_boolean = false;
    for (std::uint64_t q = 0; q < queries; ++q) {
      const GroupPoint x = query_rng.next_below(points);
      if (!boolean.contains(sentinel.eval(x))) hit_sentinel = true;
      if (!boolean.contains(boolean_fn.eval(x))) hit_boolean = true;
    }
    detections += hit_sentinel;
    false_rejections += hit_boolean;
  }

  DistinguishReport report;
  report.k = k;
  report.n = n;
  report.queries = queries;
  report.trials = trials;
  report.seed = seed;
  report.detection_rate =
      static_cast<double>(detections) / static_cast<double>(trials);
  report.false_rejection_rate =
      static_cast<double>(false_rejections) / static_cast<double>(trials);
  report.advantage = report.detection_rate - report.false_rejection_rate;
  report.confidence_radius =
      3.0 * std::sqrt(report.detection_rate * (1.0 - report.detection_rate) /
                      static_cast<double>(trials));
  report.analytic_prediction =
      1.0 - std::pow(1.0 - 1.0 / static_cast<double>(k),
                     static_cast<double>(queries));
  report.ok = false_rejections == 0 &&
              std::abs(report.detection_rate - report.analytic_prediction) <=
                  report.confidence_radius + 1e-12;
  return report;
}

FieldList MinFractionReport::fields() const {
  FieldList out = {{"n", static_cast<std::int64_t>(n)},
                   {"k", k},
                   {"samples", samples},
                   {"non_boolean", non_boolean},
                   {"seed", seed},
                   {"law", law},
                   {"target", target},
                   {"min_fraction", min_fraction},
                   {"fraction_bound", fraction_bound},
                   {"fraction_violations", fraction_violations}};
  if (spectral_checked) {
    out.push_back({"max_spectrum_support", max_spectrum_support});
    out.push_back({"spectrum_bound", spectrum_bound});
    out.push_back({"spectrum_violations", spectrum_violations});
  }
  out.push_back({"ok", ok});
  return out;
}

MinFractionReport empirical_min_fraction(int n, std::int64_t k,
                                         std::uint64_t num_samples,
                                         std::uint64_t seed,
                                         const MinFractionOptions& options) {
  if (options.target && options.random_target_size) {
    throw std::invalid_argument(
        "empirical_min_fraction: fixed and random targets are exclusive");
  }
  const ValueSet fixed_target =
      options.target ? *options.target : ValueSet::boolean_pair();
  const std::int64_t d =
      options.random_target_size
          ? static_cast<std::int64_t>(*options.random_target_size)
          : static_cast<std::int64_t>(fixed_target.size());

  MinFractionReport report;
  report.n = n;
  report.k = k;
  report.samples = num_samples;
  report.seed = seed;
  report.law = to_string(options.law);
  report.target = options.random_target_size
                      ? "random-" + std::to_string(d)
                      : [&] {
                          std::string s;
                          for (double e : fixed_target.elements()) {
                            if (!s.empty()) s += ",";
                            s += format_double(e);
                          }
                          return s;
                        }();
  report.fraction_bound = far_from_set_bound(k, d);
  report.spectral_checked = options.check_spectral_support;
  report.spectrum_bound = spectral_sparsity_bound(k, d);
  report.min_fraction = std::numeric_limits<double>::quiet_NaN();

  for (std::uint64_t s = 0; s < num_samples; ++s) {
    Rng rng = Rng(seed).split(s);
    const ValueSet target = options.random_target_size
                                ? random_value_set(*options.random_target_size, rng)
                                : fixed_target;
    const bool stress = options.near_boolean_stress && k >= 2 &&
                        !options.random_target_size && s % 8 == 7;
    const SparseFunction f =
        stress ? near_boolean_sample(n, rng)
               : sample_sparse_function(n, k, options.law, rng);
    const DenseFunction dense = to_dense(f);
    const double fraction = non_boolean_fraction(dense, target);
    if (fraction == 0.0) continue;  // image inside the target set
    ++report.non_boolean;
    if (!(fraction >= report.min_fraction)) report.min_fraction = fraction;
    if (fraction < report.fraction_bound) ++report.fraction_violations;

    if (options.check_spectral_support) {
      const DenseFunction vanishing = vanishing_product(dense, target);
      const DenseFunction vhat = wht_forward(vanishing);
      const std::vector<GroupPoint> supp = support(vhat, kSupportTolerance);
      report.max_spectrum_support =
          std::max<std::uint64_t>(report.max_spectrum_support, supp.size());
      std::set<GroupPoint> base{GroupPoint{0}};
      for (const auto& [mask, coefficient] : f.terms()) base.insert(mask);
      const std::set<GroupPoint> reachable =
          sumset_power(base, static_cast<int>(d));
      bool inside = supp.size() <= report.spectrum_bound;
      for (GroupPoint x : supp) {
        if (!reachable.contains(x)) {
          inside = false;
          break;
        }
      }
      if (!inside) ++report.spectrum_violations;
    }
  }

  report.ok =
      report.fraction_violations == 0 && report.spectrum_violations == 0;
  return report;
}

FieldList AuditReport::fields() const {
  return {{"n", static_cast<std::int64_t>(n)},
          {"functions", functions},
          {"max_deviation", max_deviation},
          {"tester_rejections", tester_rejections},
          {"seed", seed},
          {"ok", ok}};
}

AuditReport exhaustive_boolean_audit(int n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("exhaustive_boolean_audit: n must be >= 1");
  }
  if (n > 4) {
    throw ResourceLimitError(
        "exhaustive_boolean_audit: enumeration is capped at n = 4");
  }
  const std::uint64_t points = domain_size(n);
  const std::uint64_t functions = std::uint64_t{1} << points;
  AuditReport report;
  report.n = n;
  report.functions = functions;
  report.seed = seed;

  std::vector<double> values(points);
  for (std::uint64_t code = 0; code < functions; ++code) {
    for (std::uint64_t x = 0; x < points; ++x) {
      values[x] = (code >> x) & 1 ? -1.0 : 1.0;
    }
    const DenseFunction f = DenseFunction::unchecked(n, values);
    report.max_deviation =
        std::max(report.max_deviation, booleanity_deviation(wht_forward(f)));
    Oracle oracle = make_oracle(f);
    const Verdict verdict = test_booleanity(
        oracle, static_cast<std::int64_t>(points), 0.5, derive_seed(seed, code));
    if (!verdict.accepted) ++report.tester_rejections;
  }
  report.ok = report.max_deviation <= kSlackTolerance &&
              report.tester_rejections == 0;
  return report;
}

}  // namespace boolfun
