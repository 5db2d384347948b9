#include "boolfun/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boolfun/serialize.hpp"

namespace boolfun {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

/// Line source that skips comments and blanks, tracks 1-based line
/// numbers, and allows one line of pushback for format detection.
class LineScanner {
 public:
  explicit LineScanner(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    if (pending_) {
      auto line = std::move(*pending_);
      pending_.reset();
      line_ = pending_line_;
      return line;
    }
    std::string raw;
    while (std::getline(in_, raw)) {
      ++read_;
      const std::string line = trimmed(raw);
      if (line.empty() || line[0] == '#') continue;
      line_ = read_;
      return line;
    }
    line_ = read_ + 1;
    return std::nullopt;
  }

  void push_back(std::string line) {
    pending_ = std::move(line);
    pending_line_ = line_;
  }

  /// Line number of the most recent next(); one past the end at EOF.
  int line() const { return line_; }

 private:
  std::istream& in_;
  int read_ = 0;
  int line_ = 0;
  std::optional<std::string> pending_;
  int pending_line_ = 0;
};

int parse_header(LineScanner& scanner) {
  const auto line = scanner.next();
  if (!line) {
    throw ParseError("expected header n=<int>", scanner.line());
  }
  if (line->rfind("n=", 0) != 0) {
    throw ParseError("expected header n=<int>, got '" + *line + "'",
                     scanner.line());
  }
  const std::string digits = trimmed(line->substr(2));
  char* end = nullptr;
  const long n = std::strtol(digits.c_str(), &end, 10);
  if (digits.empty() || end != digits.c_str() + digits.size()) {
    throw ParseError("bad dimension '" + digits + "'", scanner.line());
  }
  if (n < 1 || n > kMaxDimension) {
    throw ParseError("dimension must be in [1, " +
                         std::to_string(kMaxDimension) + "], got " + digits,
                     scanner.line());
  }
  return static_cast<int>(n);
}

double parse_value(const std::string& token, int line) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size()) {
    throw ParseError("bad value '" + token + "'", line);
  }
  if (!std::isfinite(v)) {
    throw ParseError("value must be finite, got '" + token + "'", line);
  }
  return v;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(std::move(token));
  return tokens;
}

DenseFunction read_dense_body(LineScanner& scanner, int n, int n_cap) {
  if (n > n_cap) {
    throw ResourceLimitError("dense input of dimension " + std::to_string(n) +
                             " exceeds the cap of " + std::to_string(n_cap));
  }
  const std::uint64_t count = domain_size(n);
  std::vector<double> values;
  values.reserve(count);
  while (values.size() < count) {
    const auto line = scanner.next();
    if (!line) {
      throw ParseError("expected " + std::to_string(count) + " values, found " +
                           std::to_string(values.size()),
                       scanner.line());
    }
    const auto tokens = split_tokens(*line);
    if (tokens.size() != 1) {
      throw ParseError("expected one value per line", scanner.line());
    }
    values.push_back(parse_value(tokens[0], scanner.line()));
  }
  if (const auto extra = scanner.next()) {
    throw ParseError("unexpected content after " + std::to_string(count) +
                         " values",
                     scanner.line());
  }
  return DenseFunction(n, std::move(values), n_cap);
}

SparseFunction read_sparse_body(LineScanner& scanner, int n) {
  std::map<GroupPoint, double> terms;
  while (const auto line = scanner.next()) {
    const auto tokens = split_tokens(*line);
    if (tokens.size() != 2) {
      throw ParseError("expected '<mask> <coefficient>'", scanner.line());
    }
    GroupPoint mask;
    try {
      mask = parse_mask(tokens[0], n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), scanner.line());
    }
    if (terms.contains(mask)) {
      throw ParseError("duplicate mask '" + tokens[0] + "'", scanner.line());
    }
    terms.emplace(mask, parse_value(tokens[1], scanner.line()));
  }
  return SparseFunction(n, std::move(terms));
}

}  // namespace

DenseFunction read_dense(std::istream& in, int n_cap) {
  LineScanner scanner(in);
  const int n = parse_header(scanner);
  return read_dense_body(scanner, n, n_cap);
}

SparseFunction read_sparse(std::istream& in) {
  LineScanner scanner(in);
  const int n = parse_header(scanner);
  return read_sparse_body(scanner, n);
}

AnyFunction read_function(std::istream& in, int n_cap) {
  LineScanner scanner(in);
  const int n = parse_header(scanner);
  auto first = scanner.next();
  if (!first) {
    return SparseFunction(n, {});
  }
  const std::size_t token_count = split_tokens(*first).size();
  scanner.push_back(std::move(*first));
  if (token_count == 2) {
    return read_sparse_body(scanner, n);
  }
  return read_dense_body(scanner, n, n_cap);
}

AnyFunction load_function_file(const std::string& path, int n_cap) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  return read_function(in, n_cap);
}

void write_dense(std::ostream& out, const DenseFunction& f) {
  out << "n=" << f.dimension() << "\n";
  for (GroupPoint x = 0; x < f.size(); ++x) {
    out << format_double(f[x]) << "\n";
  }
}

void write_sparse(std::ostream& out, const SparseFunction& f) {
  out << "n=" << f.dimension() << "\n";
  for (const auto& [mask, coefficient] : f.terms()) {
    out << format_mask(mask, f.dimension()) << " " << format_double(coefficient)
        << "\n";
  }
}

std::string format_mask(GroupPoint mask, int n) {
  std::string text(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j) {
    if ((mask >> j) & 1) text[static_cast<std::size_t>(j)] = '1';
  }
  return text;
}

GroupPoint parse_mask(const std::string& text, int n) {
  if (static_cast<int>(text.size()) != n) {
    throw std::invalid_argument("mask '" + text + "' must have exactly " +
                                std::to_string(n) + " digits");
  }
  GroupPoint mask = 0;
  for (int j = 0; j < n; ++j) {
    const char c = text[static_cast<std::size_t>(j)];
    if (c == '1') {
      mask |= GroupPoint{1} << j;
    } else if (c != '0') {
      throw std::invalid_argument("mask '" + text + "' must be binary digits");
    }
  }
  return mask;
}

}  // namespace boolfun
