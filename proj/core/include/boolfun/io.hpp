#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "boolfun/dense_function.hpp"
#include "boolfun/errors.hpp"
#include "boolfun/sparse_function.hpp"

namespace boolfun {

/// Text formats. Both open with a header line `n=<int>`; lines that are
/// blank or start with `#` are ignored everywhere. Dense: 2^n decimal
/// values, one per line, in mask order 0..2^n-1. Sparse: one
/// `<mask> <coefficient>` line per term, the mask written as n binary
/// digits whose leftmost digit is coordinate 1 (mask bit 0).

DenseFunction read_dense(std::istream& in, int n_cap = kDefaultDenseCap);
SparseFunction read_sparse(std::istream& in);

using AnyFunction = std::variant<DenseFunction, SparseFunction>;

/// Reads either format, telling them apart by the token count of the
/// first data line. A file with no data lines is the empty spectrum.
AnyFunction read_function(std::istream& in, int n_cap = kDefaultDenseCap);

AnyFunction load_function_file(const std::string& path,
                               int n_cap = kDefaultDenseCap);

void write_dense(std::ostream& out, const DenseFunction& f);
/// Terms in ascending mask order.
void write_sparse(std::ostream& out, const SparseFunction& f);

/// n binary digits, mask bit 0 (coordinate 1) first.
std::string format_mask(GroupPoint mask, int n);
/// Inverse of format_mask; throws std::invalid_argument on bad text.
GroupPoint parse_mask(const std::string& text, int n);

}  // namespace boolfun
