#pragma once

// Numerical checks of the integral route to the digamma reflection formula
//
//   phi(x) = psi(x) - psi(1 - x) = -pi cot(pi x).
//
// Every integral over (0, inf) is folded onto finite intervals with t -> 1/t
// and evaluated with tanh-sinh quadrature.

#include <complex>
#include <cstdint>
#include <span>

#include "json.hpp"

#include "zeta_forge/grid_report.hpp"

namespace zeta_forge {

struct QuadratureResult {
  double value_real = 0.0;
  double value_imag = 0.0;
  double error_estimate = 0.0;
  std::uint64_t evaluations = 0;

  std::complex<double> value() const { return {value_real, value_imag}; }
  nlohmann::json to_json() const;
};

/// psi(1 - x) = -gamma + int_0^1 (1 - t^{-x}) / (1 - t) dt, 0 < x < 1.
QuadratureResult digamma_integral(double x);

/// phi(x) = int_0^1 (t^{-x} - t^{x-1}) / (1 - t) dt.
QuadratureResult phi_unit_interval(double x);

/// phi(x) = P int_0^inf t^{-x} / (1 - t) dt. The pole is excised symmetrically
/// on (0, 2), where the principal value of 1/(1 - t) vanishes; (2, inf) is
/// folded onto (0, 1/2).
QuadratureResult phi_principal_value(double x);

/// Sign of the i*eps term in the denominator 1 - t -/+ i eps.
/// Minus tends to phi(x) + i pi, Plus to phi(x) - i pi.
enum class EpsSign { Plus, Minus };

/// int_0^inf t^{-x} / (1 - t + s i eps) dt with s = +1 for Plus, -1 for Minus. 0 < eps <= 0.1.
QuadratureResult phi_epsilon(double x, double eps, EpsSign sign);

/// I(x) = int_0^inf t^{-x} ln t / (1 - t) dt = -pi^2 / sin^2(pi x).
QuadratureResult log_kernel_integral(double x);

/// int_0^inf dt / ((1 - t + i eps)(t - y - i eps t)); tends to -ln y / (1 - y). y > 0, y != 1.
QuadratureResult fubini_inner_integral(double y, double eps);

/// Residual |fubini_inner_integral(y, eps) + ln y / (1 - y)| for each eps (points are the eps values).
GridReport fubini_inner_check(double y, std::span<const double> eps_list);

/// Central-difference phi'(x) with one Richardson step (h and h/2).
double phi_derivative(double x, double h);

/// |phi'(x) - pi^2 - phi(x)^2| over a grid inside [0.2, 0.8]; 1e-6 <= h <= 1e-2.
GridReport ode_residual(std::span<const double> grid, double h);

/// |phi(x) + pi cot(pi x)| with phi from the principal-value form. Grid keeps >= 0.05 from 0 and 1.
GridReport reflection_closed_form_check(std::span<const double> grid);

/// |phi_principal_value(x) - phi_unit_interval(x)|.
GridReport representation_check(std::span<const double> grid);

/// |-I(x) - pi^2 - phi(x)^2| with I from log_kernel_integral and phi from phi_unit_interval.
GridReport product_identity_check(std::span<const double> grid);

/// |Im phi_epsilon(x, eps, Minus) - pi| for each eps (points are the eps values).
GridReport plemelj_sweep(double x, std::span<const double> eps_list);

}  // namespace zeta_forge
