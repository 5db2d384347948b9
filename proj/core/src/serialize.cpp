#include "boolfun/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace boolfun {

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string value_text(const FieldValue& value, bool json) {
  if (const bool* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
  if (const std::int64_t* i = std::get_if<std::int64_t>(&value)) {
    return std::to_string(*i);
  }
  if (const std::uint64_t* u = std::get_if<std::uint64_t>(&value)) {
    return std::to_string(*u);
  }
  if (const double* d = std::get_if<double>(&value)) {
    // JSON has no literal for non-finite numbers.
    if (json && !std::isfinite(*d)) return "null";
    return format_double(*d);
  }
  const std::string& s = std::get<std::string>(value);
  return json ? "\"" + escape_json(s) + "\"" : s;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_key_value(const FieldList& fields) {
  std::string out;
  for (const Field& f : fields) {
    out += f.key;
    out += '=';
    out += value_text(f.value, /*json=*/false);
    out += '\n';
  }
  return out;
}

std::string to_json(const FieldList& fields) {
  std::string out = "{";
  bool first = true;
  for (const Field& f : fields) {
    if (!first) out += ",";
    first = false;
    out += "\"" + escape_json(f.key) + "\":" + value_text(f.value, /*json=*/true);
  }
  out += "}";
  return out;
}

}  // namespace boolfun
