#include "zeta_forge/quadrature_lab.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "zeta_forge/errors.hpp"
#include "zeta_forge/parallel.hpp"
#include "zeta_forge/series_lab.hpp"
#include "zeta_forge/tanh_sinh.hpp"

namespace zeta_forge {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void require_unit_open(double x, const char* op) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError(std::string(op) + ": x must lie in (0, 1), got " + std::to_string(x));
}

void require_interior_grid(std::span<const double> grid, double margin, const char* op) {
  for (double x : grid) {
    if (!(x >= margin - 1e-12 && x <= 1.0 - margin + 1e-12)) {
      throw DomainError(std::string(op) + ": grid point " + std::to_string(x) + " is closer than " +
                        std::to_string(margin) + " to 0 or 1");
    }
  }
}

// ln t on (0, 1) from t and 1 - t, whichever is accurate.
double log_unit(double t, double one_minus_t) { return t < 0.5 ? std::log(t) : std::log1p(-one_minus_t); }

template <class T>
void accumulate(QuadratureResult& out, const TanhSinhResult<T>& part) {
  const Complex v(part.value);
  out.value_real += v.real();
  out.value_imag += v.imag();
  out.error_estimate += part.error_estimate;
  out.evaluations += part.evaluations;
}

template <class T>
QuadratureResult to_result(const TanhSinhResult<T>& part) {
  QuadratureResult out;
  accumulate(out, part);
  return out;
}

// Signed x - c for a node of [a, b], exact when c is one of the endpoints.
double offset(double x, double from_a, double from_b, double a, double b, double c) {
  if (c == a) return from_a;
  if (c == b) return -from_b;
  return x - c;
}

GridReport map_grid(std::span<const double> grid, const std::function<double(double)>& residual) {
  std::vector<double> residuals(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { residuals[i] = residual(grid[i]); });
  return GridReport::from({grid.begin(), grid.end()}, std::move(residuals));
}

}  // namespace

nlohmann::json QuadratureResult::to_json() const {
  return {{"value_real", value_real},
          {"value_imag", value_imag},
          {"error_estimate", error_estimate},
          {"evaluations", evaluations}};
}

QuadratureResult digamma_integral(double x) {
  require_unit_open(x, "digamma_integral");
  auto f = [x](double t, double, double one_minus_t) {
    return -std::expm1(-x * log_unit(t, one_minus_t)) / one_minus_t;
  };
  QuadratureResult out = to_result(tanh_sinh<double>(f, 0.0, 1.0));
  out.value_real -= kEulerGamma;
  return out;
}

QuadratureResult phi_unit_interval(double x) {
  require_unit_open(x, "phi_unit_interval");
  // t^{-x} - t^{x-1} = -t^{-x} expm1((2x - 1) ln t), which stays accurate near t = 1.
  auto f = [x](double t, double, double one_minus_t) {
    const double l = log_unit(t, one_minus_t);
    return -std::exp(-x * l) * std::expm1((2.0 * x - 1.0) * l) / one_minus_t;
  };
  return to_result(tanh_sinh<double>(f, 0.0, 1.0));
}

QuadratureResult phi_principal_value(double x) {
  require_unit_open(x, "phi_principal_value");
  // P int_0^2 dt/(1 - t) = 0, so on (0, 2) only (t^{-x} - 1)/(1 - t) remains,
  // which is regular at t = 1.
  auto below = [x](double t, double, double one_minus_t) {
    return std::expm1(-x * log_unit(t, one_minus_t)) / one_minus_t;
  };
  auto above = [x](double, double u, double) {  // t = 1 + u
    return -std::expm1(-x * std::log1p(u)) / u;
  };
  // int_2^inf t^{-x}/(1 - t) dt = -int_0^{1/2} s^{x-1}/(1 - s) ds.
  auto folded_tail = [x](double s, double, double) { return -std::exp((x - 1.0) * std::log(s)) / (1.0 - s); };

  QuadratureResult out;
  accumulate(out, tanh_sinh<double>(below, 0.0, 1.0));
  accumulate(out, tanh_sinh<double>(above, 1.0, 2.0));
  accumulate(out, tanh_sinh<double>(folded_tail, 0.0, 0.5));
  return out;
}

QuadratureResult phi_epsilon(double x, double eps, EpsSign sign) {
  require_unit_open(x, "phi_epsilon");
  if (!(eps > 0.0 && eps <= 0.1)) throw DomainError("phi_epsilon: eps must lie in (0, 0.1], got " + std::to_string(eps));
  const double s = sign == EpsSign::Plus ? eps : -eps;
  // (1, inf) folded with t -> 1/s:  int_0^1 t^{x-1} / (t - 1 + s i eps t) dt.
  auto f = [x, s](double t, double, double one_minus_t) {
    const double l = log_unit(t, one_minus_t);
    const Complex direct = std::exp(-x * l) / Complex(one_minus_t, s);
    const Complex folded = std::exp((x - 1.0) * l) / Complex(-one_minus_t, s * t);
    return direct + folded;
  };
  return to_result(tanh_sinh<Complex>(f, 0.0, 1.0));
}

QuadratureResult log_kernel_integral(double x) {
  require_unit_open(x, "log_kernel_integral");
  // (1, inf) folds onto the t^{x-1} term.
  auto f = [x](double t, double, double one_minus_t) {
    const double l = log_unit(t, one_minus_t);
    return (std::exp(-x * l) + std::exp((x - 1.0) * l)) * l / one_minus_t;
  };
  return to_result(tanh_sinh<double>(f, 0.0, 1.0));
}

QuadratureResult fubini_inner_integral(double y, double eps) {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("fubini_inner_integral: y must be positive");
  if (std::abs(y - 1.0) < 1e-12) throw DomainError("fubini_inner_integral: y = 1 is degenerate");
  if (!(eps > 0.0 && eps <= 0.1)) throw DomainError("fubini_inner_integral: eps must lie in (0, 0.1]");

  auto integrand = [eps](double one_minus_t, double t_minus_y, double t) {
    return 1.0 / (Complex(one_minus_t, eps) * Complex(t_minus_y, -eps * t));
  };
  // Breakpoints at both near-poles so that each sits at an endpoint.
  const double lo = std::min(1.0, y);
  const double hi = std::max(1.0, y);
  QuadratureResult out;
  for (const auto& [a, b] : {std::pair{0.0, lo}, std::pair{lo, hi}, std::pair{hi, 2.0 * hi}}) {
    auto f = [&, a, b](double t, double from_a, double from_b) {
      return integrand(-offset(t, from_a, from_b, a, b, 1.0), offset(t, from_a, from_b, a, b, y), t);
    };
    accumulate(out, tanh_sinh<Complex>(f, a, b));
  }
  // (2 hi, inf) folded with t = 2 hi / s; both factors are multiplied by s
  // so nothing overflows as s -> 0.
  const double scale = 2.0 * hi;
  auto tail = [&](double s, double, double) {
    return scale / (Complex(s - scale, eps * s) * Complex(scale - y * s, -eps * scale));
  };
  accumulate(out, tanh_sinh<Complex>(tail, 0.0, 1.0));
  return out;
}

GridReport fubini_inner_check(double y, std::span<const double> eps_list) {
  if (!(y > 0.0) || std::abs(y - 1.0) < 1e-12) throw DomainError("fubini_inner_check: need y > 0, y != 1");
  const double limit = -std::log(y) / (1.0 - y);
  return map_grid(eps_list, [&](double eps) { return std::abs(fubini_inner_integral(y, eps).value() - limit); });
}

double phi_derivative(double x, double h) {
  auto central = [x](double step) {
    return (phi_unit_interval(x + step).value_real - phi_unit_interval(x - step).value_real) / (2.0 * step);
  };
  return (4.0 * central(h / 2.0) - central(h)) / 3.0;
}

GridReport ode_residual(std::span<const double> grid, double h) {
  for (double x : grid) {
    if (!(x >= 0.2 - 1e-12 && x <= 0.8 + 1e-12)) {
      throw DomainError("ode_residual: grid point " + std::to_string(x) + " outside [0.2, 0.8]");
    }
  }
  if (!(h >= 1e-6 && h <= 1e-2)) throw DomainError("ode_residual: h must lie in [1e-6, 1e-2]");
  return map_grid(grid, [h](double x) {
    const double phi = phi_unit_interval(x).value_real;
    return std::abs(phi_derivative(x, h) - kPi * kPi - phi * phi);
  });
}

GridReport reflection_closed_form_check(std::span<const double> grid) {
  require_interior_grid(grid, 0.05, "reflection_closed_form_check");
  return map_grid(grid, [](double x) {
    const double cot = std::cos(kPi * x) / std::sin(kPi * x);
    return std::abs(phi_principal_value(x).value_real + kPi * cot);
  });
}

GridReport representation_check(std::span<const double> grid) {
  require_interior_grid(grid, 0.05, "representation_check");
  return map_grid(grid, [](double x) {
    return std::abs(phi_principal_value(x).value_real - phi_unit_interval(x).value_real);
  });
}

GridReport product_identity_check(std::span<const double> grid) {
  require_interior_grid(grid, 0.05, "product_identity_check");
  return map_grid(grid, [](double x) {
    const double phi = phi_unit_interval(x).value_real;
    return std::abs(-log_kernel_integral(x).value_real - kPi * kPi - phi * phi);
  });
}

GridReport plemelj_sweep(double x, std::span<const double> eps_list) {
  require_unit_open(x, "plemelj_sweep");
  return map_grid(eps_list, [x](double eps) { return std::abs(phi_epsilon(x, eps, EpsSign::Minus).value_imag - kPi); });
}

}  // namespace zeta_forge
