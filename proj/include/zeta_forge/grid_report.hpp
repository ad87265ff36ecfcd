#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace zeta_forge {

/// Pointwise residuals of an identity over a grid of evaluation points.
struct GridReport {
  std::vector<double> points;
  std::vector<double> residuals;
  double max_abs_residual = 0.0;

  /// Throws std::invalid_argument when the lists differ in length.
  static GridReport from(std::vector<double> points, std::vector<double> residuals);

  /// Residuals strictly decrease along the point order.
  bool strictly_decreasing() const;

  /// {"points": [...], "residuals": [...], "max_abs_residual": ...}
  nlohmann::json to_json() const;
};

/// Inclusive "start:stop:step" grid. The stop point is included when
/// (stop - start) / step is integral within 1e-9. Throws std::invalid_argument.
std::vector<double> parse_grid(const std::string& spec);

/// Same grid from numeric bounds.
std::vector<double> make_grid(double start, double stop, double step);

}  // namespace zeta_forge
