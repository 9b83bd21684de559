#pragma once

#include <string>

#include "wronskia/geometry.hpp"

namespace wronskia {

/// Serializes the certification report. Keys: provenance, delta (nullable),
/// W0, W_std, alpha_est, alpha_std, alpha_formula (nullable),
/// relation_residual, surface_residuals (object), verdict (object),
/// tolerances (object), plus certified_fraction and failure_reason.
std::string report_to_json(const TzitzeicaReport& r);

void write_report_file(const std::string& path, const TzitzeicaReport& r);

}  // namespace wronskia
