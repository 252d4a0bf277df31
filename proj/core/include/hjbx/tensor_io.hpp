#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hjbx/sym_tensor.hpp"

namespace hjbx {

/// Fixed numeric formatting used by every exported file:
/// 10 significant digits, scientific notation.
std::string fmt_sci(double v);

/// Coefficient text format: header line
///   # degree=k dim=n convention=symmetric-sum
/// optionally followed by further `# key=value ...` comment lines, then one
/// line per canonical tuple: comma-separated indices then the value, e.g.
///   0,1,1,9.613797916e-03
void write_sym_tensor(std::ostream& os, const SymTensor& t,
                      const std::vector<std::string>& extra_header_lines = {});

SymTensor read_sym_tensor(std::istream& is);

} // namespace hjbx
