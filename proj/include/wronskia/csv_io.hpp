#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wronskia/geometry.hpp"

namespace wronskia {

/// Malformed curve CSV; the message carries a row/column diagnostic.
struct CsvFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Writes `t,x,y,z` or, with derivatives, the 13-column form
/// `t,x,y,z,x1,y1,z1,x2,y2,z2,x3,y3,z3`. Values use shortest round-trip
/// formatting, '.' decimal separator, LF line endings.
void write_curve_csv(std::ostream& os, const SampledCurve& c, bool with_derivs);

/// Parses either column layout. t must be strictly increasing and uniform;
/// 4-column inputs get derivative columns by finite differences.
SampledCurve read_curve_csv(std::istream& is, std::string provenance = "external");

SampledCurve read_curve_csv_file(const std::string& path);
void write_curve_csv_file(const std::string& path, const SampledCurve& c,
                          bool with_derivs);

}  // namespace wronskia
