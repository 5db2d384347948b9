#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace boolfun {

using FieldValue =
    std::variant<bool, std::int64_t, std::uint64_t, double, std::string>;

struct Field {
  std::string key;
  FieldValue value;
};

/// Ordered flat record; the common shape of every report this library
/// emits.
using FieldList = std::vector<Field>;

/// %.17g: enough digits to round-trip any double exactly.
std::string format_double(double v);

/// One key=value line per field.
std::string to_key_value(const FieldList& fields);

/// Single-line JSON object; field order preserved, doubles at 17
/// significant digits.
std::string to_json(const FieldList& fields);

}  // namespace boolfun
