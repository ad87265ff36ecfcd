#pragma once

// Double-precision truncations of the lattice series behind the Basel
// problem, each paired with an integral-comparison bracket on the discarded
// tail. For a positive decreasing term f(n), the tail sum over n > N lies in
// [int_{N+1}^inf f, int_N^inf f].

#include <cstdint>
#include <numbers>
#include <span>

#include "json.hpp"

#include "zeta_forge/grid_report.hpp"

namespace zeta_forge {

inline constexpr double kEulerGamma = std::numbers::egamma;  // 0.5772156649015329

struct SeriesEstimate {
  double partial_sum = 0.0;
  std::uint64_t terms_used = 0;
  double tail_low = 0.0;
  double tail_high = 0.0;
  double value_estimate = 0.0;

  double lower() const { return partial_sum + tail_low; }
  double upper() const { return partial_sum + tail_high; }
  bool brackets(double value) const { return lower() <= value && value <= upper(); }
  double bracket_width() const { return tail_high - tail_low; }

  /// {"partial_sum": ..., "terms": N, "tail": [low, high], "estimate": ...}
  nlohmann::json to_json() const;
};

/// Terms per call that keep every bracket narrower than 1e-6.
constexpr std::uint64_t default_terms(std::uint32_t k) { return k <= 1 ? 1'000'000 : 1'000; }

/// sum_{n<=N} 1/n^{2k}, or sum_{n<=N} 1/(n - 1/2)^{2k} when half_shift is set.
SeriesEstimate partial_zeta_sum(std::uint32_t k, std::uint64_t terms, bool half_shift);

/// Regularized lattice potential U_R(x) = -sum_n (1/(n - x) - 1/n), 0 <= x < 1.
SeriesEstimate regularized_potential(double x, std::uint64_t terms);

/// F(x) = sum_n 1/(n - x)^2, the force left unchanged by the regularization.
SeriesEstimate coulomb_force(double x, std::uint64_t terms);

/// psi(1 - x) = -gamma + U_R(x).
SeriesEstimate digamma_series(double x, std::uint64_t terms);

/// psi_{2k-1}(1 - x) = (2k-1)! sum_n 1/(n - x)^{2k}.
SeriesEstimate polygamma_series(std::uint32_t k, double x, std::uint64_t terms);

/// n-th term of the regularized potential sum, 1/(n - x) - 1/n.
double potential_term(std::uint64_t n, double x);
/// n-th term of the force sum, d/dx of potential_term: 1/(n - x)^2.
double force_term(std::uint64_t n, double x);

/// Residual |psi_{2k-1}(1-x) + psi_{2k-1}(x) + pi d^{2k-1}/dx^{2k-1} cot(pi x)| per grid point.
/// Grid points must keep >= 0.05 from 0 and 1. terms = 0 selects default_terms(k).
GridReport reflection_check(std::uint32_t k, std::span<const double> grid, std::uint64_t terms = 0);

}  // namespace zeta_forge
