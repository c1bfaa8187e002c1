#pragma once

#include <string>

#include "crsys/core/field.hpp"
#include "crsys/solver/picard.hpp"
#include "json.hpp"

namespace crsys::cli {

/// node, r, theta, z_re, z_im, then u<c>_re, u<c>_im per component.
/// Values use shortest round-trip formatting, so reading back is bitwise exact.
void write_field_csv(const std::string& path, const core::Field& u);
core::Field read_field_csv(const std::string& path, const core::GridPtr& grid);

/// iter, diff_norm, ratio, residual.
void write_residuals_csv(const std::string& path, const solver::SolveReport& report);

void write_manifest(const std::string& path, const nlohmann::json& manifest);

}  // namespace crsys::cli
