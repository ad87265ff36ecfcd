#include "zeta_forge/grid_report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace zeta_forge {

GridReport GridReport::from(std::vector<double> points, std::vector<double> residuals) {
  if (points.size() != residuals.size()) throw std::invalid_argument("GridReport: points/residuals length mismatch");
  GridReport report{std::move(points), std::move(residuals), 0.0};
  for (double r : report.residuals) report.max_abs_residual = std::max(report.max_abs_residual, std::abs(r));
  return report;
}

bool GridReport::strictly_decreasing() const {
  for (std::size_t i = 1; i < residuals.size(); ++i) {
    if (!(residuals[i] < residuals[i - 1])) return false;
  }
  return true;
}

nlohmann::json GridReport::to_json() const {
  return {{"points", points}, {"residuals", residuals}, {"max_abs_residual", max_abs_residual}};
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw std::invalid_argument("grid bounds must be finite");
  }
  if (step <= 0.0) throw std::invalid_argument("grid step must be positive");
  if (stop < start) throw std::invalid_argument("grid stop must not precede start");
  const double span = (stop - start) / step;
  if (span > 1e6) throw std::invalid_argument("grid has too many points");
  const double nearest = std::round(span);
  const bool integral = std::abs(span - nearest) <= 1e-9;
  const auto last = static_cast<long>(integral ? nearest : std::floor(span));
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(last) + 1);
  for (long i = 0; i <= last; ++i) {
    // Snap to 12 decimals so that 0.1 + 3 * 0.05 prints and compares as 0.25.
    const double p = (integral && i == last) ? stop : start + static_cast<double>(i) * step;
    points.push_back(std::round(p * 1e12) / 1e12);
  }
  return points;
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
  if (second == std::string::npos || spec.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("grid must look like start:stop:step, got '" + spec + "'");
  }
  auto number = [&spec](const std::string& part) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + part + "' in grid '" + spec + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad number '" + part + "' in grid '" + spec + "'");
    return value;
  };
  return make_grid(number(spec.substr(0, first)), number(spec.substr(first + 1, second - first - 1)),
                   number(spec.substr(second + 1)));
}

}  // namespace zeta_forge
