// boolfun: Walsh-Hadamard transforms, spectral analysis, Booleanity
// testing, and Monte-Carlo experiments over functions on Z_2^n.
//
// Exit codes: 0 success/accept, 1 reject or invariant violation,
// 2 usage or parse error, 3 resource limit.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "boolfun/adversary.hpp"
#include "boolfun/dense_function.hpp"
#include "boolfun/errors.hpp"
#include "boolfun/io.hpp"
#include "boolfun/oracle.hpp"
#include "boolfun/rng.hpp"
#include "boolfun/serialize.hpp"
#include "boolfun/sparse_function.hpp"
#include "boolfun/spectral.hpp"
#include "boolfun/tester.hpp"
#include "boolfun/value_set.hpp"
#include "boolfun/wht.hpp"

namespace {

using namespace boolfun;

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct TransformOptions {
  std::string input;
  std::string output;
  std::string direction = "forward";
  std::string out_format = "dense";
  int n_cap = kDefaultDenseCap;
};

struct AnalyzeOptions {
  std::string input;
  std::string format = "table";
  double eps = 0.5;
  std::optional<double> k;
  int n_cap = kDefaultDenseCap;
};

struct TestOptions {
  std::string input;
  std::string oracle;
  std::optional<std::int64_t> k;
  double eps = 0.01;
  std::uint64_t seed = 1;
  int n = 10;
  std::vector<double> target;
  std::string format = "table";
  int n_cap = kDefaultDenseCap;
};

struct ExperimentOptions {
  std::string kind;
  std::vector<std::int64_t> k = {16};
  std::vector<int> n = {10};
  std::vector<std::uint64_t> queries = {16};
  std::uint64_t trials = 1000;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  std::string law = "uniform";
  std::vector<double> target;
  std::optional<int> random_target_size;
  std::string format = "table";
  std::string output;
  std::string config;
};

template <typename T>
std::vector<T> parse_number_list(const std::string& text) {
  std::vector<T> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    values.push_back(static_cast<T>(std::stod(item, &used)));
    if (used != item.size()) {
      throw std::invalid_argument("bad number '" + item + "' in config");
    }
  }
  if (values.empty()) throw std::invalid_argument("empty list in config");
  return values;
}

// The config file is one key=value pair per line, keys matching the
// long flag names; values already given on the command line win.
void apply_config_file(const CLI::App& command, ExperimentOptions& opt) {
  std::ifstream in(opt.config);
  if (!in) {
    throw std::invalid_argument("cannot open config '" + opt.config + "'");
  }
  std::string line;
  int line_no = 0;
  const auto given = [&](const std::string& flag) {
    return command.count(flag) > 0;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected key=value in config", line_no);
    }
    const std::string key = line.substr(first, eq - first);
    const std::string value = line.substr(eq + 1);
    if (key == "kind") {
      if (!given("--kind")) opt.kind = value;
    } else if (key == "k") {
      if (!given("--k")) opt.k = parse_number_list<std::int64_t>(value);
    } else if (key == "n") {
      if (!given("--n")) opt.n = parse_number_list<int>(value);
    } else if (key == "queries") {
      if (!given("--queries")) {
        opt.queries = parse_number_list<std::uint64_t>(value);
      }
    } else if (key == "trials") {
      if (!given("--trials")) opt.trials = std::stoull(value);
    } else if (key == "samples") {
      if (!given("--samples")) opt.samples = std::stoull(value);
    } else if (key == "seed") {
      if (!given("--seed")) opt.seed = std::stoull(value);
    } else if (key == "law") {
      if (!given("--law")) opt.law = value;
    } else if (key == "set") {
      if (!given("--set")) opt.target = parse_number_list<double>(value);
    } else if (key == "random-set-size") {
      if (!given("--random-set-size")) opt.random_target_size = std::stoi(value);
    } else if (key == "format") {
      if (!given("--format")) opt.format = value;
    } else if (key == "output") {
      if (!given("--output")) opt.output = value;
    } else {
      throw ParseError("unknown config key '" + key + "'", line_no);
    }
  }
  if (opt.format != "table" && opt.format != "json") {
    throw std::invalid_argument("format must be table or json");
  }
}

DenseFunction densify(const AnyFunction& fn, int n_cap) {
  if (const auto* dense = std::get_if<DenseFunction>(&fn)) return *dense;
  return to_dense(std::get<SparseFunction>(fn), n_cap);
}

void emit(const FieldList& fields, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(fields) << "\n";
  } else {
    std::cout << to_key_value(fields);
  }
}

int run_transform(const TransformOptions& opt) {
  const AnyFunction input = load_function_file(opt.input, opt.n_cap);
  const DenseFunction dense = densify(input, opt.n_cap);
  const DenseFunction result =
      opt.direction == "inverse" ? wht_inverse(dense) : wht_forward(dense);

  std::ofstream out(opt.output);
  if (!out) {
    std::cerr << "error: cannot open '" << opt.output << "' for writing\n";
    return kExitUsage;
  }
  if (opt.out_format == "sparse") {
    write_sparse(out, sparsify(result));
  } else {
    write_dense(out, result);
  }
  return kExitAccept;
}

int run_analyze(const AnalyzeOptions& opt) {
  const AnyFunction input = load_function_file(opt.input, opt.n_cap);
  const DenseFunction f = densify(input, opt.n_cap);
  const DenseFunction fhat = wht_forward(f);
  const auto sparsity =
      static_cast<std::int64_t>(support(fhat, kSupportTolerance).size());

  FieldList fields;
  fields.push_back({"n", static_cast<std::int64_t>(f.dimension())});
  fields.push_back({"k", sparsity});
  fields.push_back({"l2_norm", l2_norm(f)});
  fields.push_back({"boolean_distance", boolean_distance(f)});
  fields.push_back(
      {"non_boolean_fraction", non_boolean_fraction(f, ValueSet::boolean_pair())});
  fields.push_back(
      {"boolean_by_spectrum", is_boolean_by_spectrum(fhat, kSlackTolerance)});
  if (sparsity >= 1) {
    fields.push_back({"far_bound", far_from_set_bound(sparsity, 2)});
  }

  if (l2_norm(f) > 0.0) {
    for (const Field& field : check_entropy_uncertainty(f).fields()) {
      fields.push_back({"entropy_uncertainty." + field.key, field.value});
    }
    for (const Field& field : check_support_uncertainty(f).fields()) {
      fields.push_back({"support_uncertainty." + field.key, field.value});
    }
  }

  // The closeness report applies only to functions normalized to
  // ||f||^2 = 2^n; k defaults to the smallest value admitted by the
  // spectral entropy condition.
  bool closeness_applicable = false;
  const double norm = l2_norm(f);
  const double norm_ratio =
      norm * norm / static_cast<double>(f.size());
  if (std::abs(norm_ratio - 1.0) <= 1e-6) {
    const DenseFunction conv = convolve_fast(fhat, fhat);
    const double conv_entropy = entropy(normalized(conv));
    const double k =
        opt.k ? *opt.k
              : std::max(std::exp2(conv_entropy / 2.0) * (1.0 + 1e-12),
                         1.0 + 1e-9);
    try {
      const ClosenessReport report = check_closeness_theorem(f, k, opt.eps);
      closeness_applicable = true;
      fields.push_back({"closeness_applicable", true});
      for (const Field& field : report.fields()) {
        fields.push_back({"closeness." + field.key, field.value});
      }
    } catch (const std::invalid_argument&) {
      // preconditions not met for the supplied k
    }
  }
  if (!closeness_applicable) {
    fields.push_back({"closeness_applicable", false});
  }

  emit(fields, opt.format);
  return kExitAccept;
}

struct ResolvedOracle {
  Oracle oracle;
  std::int64_t default_k;
  std::string name;
};

ResolvedOracle resolve_oracle(const TestOptions& opt) {
  if (!opt.input.empty()) {
    AnyFunction fn = load_function_file(opt.input, opt.n_cap);
    if (auto* sparse = std::get_if<SparseFunction>(&fn)) {
      const auto k = static_cast<std::int64_t>(sparse->sparsity());
      return {make_oracle(std::move(*sparse)), std::max<std::int64_t>(k, 1),
              opt.input};
    }
    auto& dense = std::get<DenseFunction>(fn);
    const auto k = static_cast<std::int64_t>(
        support(wht_forward(dense), kSupportTolerance).size());
    return {make_oracle(std::move(dense)), std::max<std::int64_t>(k, 1),
            opt.input};
  }

  const std::string& name = opt.oracle;
  if (name == "parity") {
    const int n = opt.n;
    return {make_oracle(SparseFunction(n, {{domain_size(n) - 1, 1.0}})), 1,
            name};
  }
  if (name == "majority3") {
    return {make_oracle(SparseFunction(
                3, {{1, 0.5}, {2, 0.5}, {4, 0.5}, {7, -0.5}})),
            4, name};
  }
  if (name == "intro-poly") {
    return {make_oracle(SparseFunction(3, {{1, 1.0}, {6, -2.0}, {3, 3.5}})), 3,
            name};
  }
  if (name.rfind("bk:", 0) == 0 || name.rfind("ck:", 0) == 0) {
    const std::int64_t k = std::strtoll(name.c_str() + 3, nullptr, 10);
    const std::uint64_t oracle_seed = derive_seed(opt.seed, 0);
    const BlockFunction block = name[0] == 'b'
                                    ? sample_bk(k, opt.n, oracle_seed)
                                    : sample_ck(k, opt.n, oracle_seed);
    return {block.oracle(), k, name};
  }
  throw std::invalid_argument(
      "unknown oracle '" + name +
      "' (expected parity, majority3, intro-poly, bk:<k>, or ck:<k>)");
}

int run_test(const TestOptions& opt) {
  if (opt.input.empty() == opt.oracle.empty()) {
    std::cerr << "error: exactly one of --input and --oracle is required\n";
    return kExitUsage;
  }
  ResolvedOracle resolved = resolve_oracle(opt);
  const std::int64_t k = opt.k.value_or(resolved.default_k);

  Verdict verdict;
  if (!opt.target.empty()) {
    verdict = test_image_in_set(resolved.oracle, k, ValueSet(opt.target),
                                opt.eps, opt.seed);
  } else {
    verdict = test_booleanity(resolved.oracle, k, opt.eps, opt.seed);
  }

  FieldList fields = {{"oracle", resolved.name},
                      {"n", static_cast<std::int64_t>(resolved.oracle.dimension())},
                      {"k", k},
                      {"eps", opt.eps}};
  for (const Field& field : verdict.fields()) fields.push_back(field);
  emit(fields, opt.format);
  return verdict.accepted ? kExitAccept : kExitReject;
}

std::string table_cell(const FieldValue& value) {
  if (const double* d = std::get_if<double>(&value)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", *d);
    return buf;
  }
  if (const bool* b = std::get_if<bool>(&value)) return *b ? "yes" : "no";
  if (const std::int64_t* i = std::get_if<std::int64_t>(&value)) {
    return std::to_string(*i);
  }
  if (const std::uint64_t* u = std::get_if<std::uint64_t>(&value)) {
    return std::to_string(*u);
  }
  return std::get<std::string>(value);
}

void print_table(const std::vector<FieldList>& rows) {
  if (rows.empty()) return;
  std::vector<std::string> headers;
  for (const Field& field : rows.front()) headers.push_back(field.key);
  std::vector<std::size_t> widths;
  for (const auto& h : headers) widths.push_back(h.size());
  std::vector<std::vector<std::string>> cells;
  for (const FieldList& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(table_cell(row[i].value));
      if (i < widths.size()) widths[i] = std::max(widths[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto print_row = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      std::cout << (i ? "  " : "");
      std::cout << line[i] << std::string(widths[i] - line[i].size(), ' ');
    }
    std::cout << "\n";
  };
  print_row(headers);
  for (const auto& line : cells) print_row(line);
}

void emit_reports(const std::vector<FieldList>& rows,
                  const ExperimentOptions& opt) {
  if (opt.format == "json") {
    std::cout << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::cout << (i ? "," : "") << "\n  " << to_json(rows[i]);
    }
    std::cout << "\n]\n";
  } else {
    print_table(rows);
  }
  if (!opt.output.empty()) {
    std::ofstream out(opt.output);
    if (!out) {
      throw std::invalid_argument("cannot open '" + opt.output +
                                  "' for writing");
    }
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << (i ? "," : "") << "\n  " << to_json(rows[i]);
    }
    out << "\n]\n";
  }
}

int run_experiment(const CLI::App& command, ExperimentOptions opt) {
  if (!opt.config.empty()) apply_config_file(command, opt);
  if (opt.kind.empty()) {
    throw std::invalid_argument("--kind is required (on the command line or "
                                "in the config file)");
  }
  std::vector<FieldList> rows;
  bool all_ok = true;

  if (opt.kind == "distinguish") {
    for (int n : opt.n) {
      for (std::int64_t k : opt.k) {
        for (std::uint64_t q : opt.queries) {
          const DistinguishReport report =
              distinguishing_experiment(k, n, q, opt.trials, opt.seed);
          all_ok = all_ok && report.ok;
          rows.push_back(report.fields());
        }
      }
    }
  } else if (opt.kind == "minfraction") {
    MinFractionOptions options;
    const auto law = parse_coefficient_law(opt.law);
    if (!law) {
      throw std::invalid_argument("unknown coefficient law '" + opt.law + "'");
    }
    options.law = *law;
    if (!opt.target.empty()) options.target = ValueSet(opt.target);
    options.random_target_size = opt.random_target_size;
    for (int n : opt.n) {
      for (std::int64_t k : opt.k) {
        const MinFractionReport report =
            empirical_min_fraction(n, k, opt.samples, opt.seed, options);
        all_ok = all_ok && report.ok;
        rows.push_back(report.fields());
      }
    }
  } else if (opt.kind == "audit") {
    for (int n : opt.n) {
      const AuditReport report = exhaustive_boolean_audit(n, opt.seed);
      all_ok = all_ok && report.ok;
      rows.push_back(report.fields());
    }
  } else {
    throw std::invalid_argument(
        "unknown experiment kind '" + opt.kind +
        "' (expected distinguish, minfraction, or audit)");
  }

  emit_reports(rows, opt);
  return all_ok ? kExitAccept : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Walsh-Hadamard transforms, spectral analysis, and Booleanity testing "
      "on Z_2^n"};
  app.require_subcommand(1);

  TransformOptions transform_opt;
  CLI::App* transform =
      app.add_subcommand("transform", "Transform a function file");
  transform->add_option("--input", transform_opt.input, "Input function file")
      ->required();
  transform->add_option("--output", transform_opt.output, "Output file")
      ->required();
  transform
      ->add_option("--direction", transform_opt.direction,
                   "forward (f -> fhat) or inverse (fhat -> f)")
      ->check(CLI::IsMember({"forward", "inverse"}));
  transform
      ->add_option("--out-format", transform_opt.out_format,
                   "Output encoding: dense or sparse")
      ->check(CLI::IsMember({"dense", "sparse"}));
  transform->add_option("--n-cap", transform_opt.n_cap,
                        "Dense dimension cap (default 26)");

  AnalyzeOptions analyze_opt;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Print spectral statistics of a function");
  analyze->add_option("--input", analyze_opt.input, "Input function file")
      ->required();
  analyze->add_option("--format", analyze_opt.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  analyze->add_option("--eps", analyze_opt.eps,
                      "Closeness radius for the closeness report");
  analyze->add_option("--k", analyze_opt.k,
                      "Entropy parameter for the closeness report");
  analyze->add_option("--n-cap", analyze_opt.n_cap, "Dense dimension cap");

  TestOptions test_opt;
  CLI::App* test = app.add_subcommand(
      "test", "Randomized image test against {-1,1} or a given value set");
  test->add_option("--input", test_opt.input, "Function file backing the oracle");
  test->add_option("--oracle", test_opt.oracle,
                   "Builtin oracle: parity, majority3, intro-poly, bk:<k>, ck:<k>");
  test->add_option("--k", test_opt.k, "Promised sparsity (defaults per oracle)");
  test->add_option("--eps", test_opt.eps, "Failure probability budget in (0,1)");
  test->add_option("--seed", test_opt.seed, "RNG seed")->envname("BOOLFUN_SEED");
  test->add_option("--n", test_opt.n, "Dimension for builtin oracles");
  test->add_option("--set", test_opt.target, "Target values v1,v2,...")
      ->delimiter(',');
  test->add_option("--format", test_opt.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  test->add_option("--n-cap", test_opt.n_cap, "Dense dimension cap");

  ExperimentOptions exp_opt;
  CLI::App* experiment = app.add_subcommand(
      "experiment", "Monte-Carlo experiments: distinguish, minfraction, audit");
  experiment->add_option("--kind", exp_opt.kind,
                         "distinguish, minfraction, or audit");
  experiment->add_option("--k", exp_opt.k, "Sparsity grid k1,k2,...")
      ->delimiter(',');
  experiment->add_option("--n", exp_opt.n, "Dimension grid n1,n2,...")
      ->delimiter(',');
  experiment->add_option("--queries", exp_opt.queries, "Query grid q1,q2,...")
      ->delimiter(',');
  experiment->add_option("--trials", exp_opt.trials, "Trials per grid cell");
  experiment->add_option("--samples", exp_opt.samples, "Samples per grid cell");
  experiment->add_option("--seed", exp_opt.seed, "RNG seed")
      ->envname("BOOLFUN_SEED");
  experiment->add_option("--law", exp_opt.law,
                         "Coefficient law: uniform, gaussian, discrete");
  experiment->add_option("--set", exp_opt.target, "Target values v1,v2,...")
      ->delimiter(',');
  experiment->add_option("--random-set-size", exp_opt.random_target_size,
                         "Draw a fresh target set of this size per sample");
  experiment->add_option("--format", exp_opt.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  experiment->add_option("--output", exp_opt.output, "Write reports as JSON here");
  experiment->add_option("--config", exp_opt.config,
                         "Read options from a key=value file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*transform) return run_transform(transform_opt);
    if (*analyze) return run_analyze(analyze_opt);
    if (*test) return run_test(test_opt);
    if (*experiment) return run_experiment(*experiment, exp_opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
