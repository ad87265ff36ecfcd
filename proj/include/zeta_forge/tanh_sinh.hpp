#pragma once

// Double-exponential (tanh-sinh) quadrature on a finite interval [a, b].
//
// The substitution x = a + (b - a) (1 + tanh(pi/2 sinh u)) / 2 clusters nodes
// doubly exponentially at both endpoints, so algebraic endpoint
// singularities and removable 0/0 points at an endpoint need no special
// treatment. Integrands receive the node together with its distances to both
// endpoints, computed without cancellation:
//
//   f(x, x - a, b - x)
//
// which lets them evaluate quantities like 1 - t or log(t) accurately when a
// node sits 1e-200 away from an endpoint.
//
// The step h is halved level by level (reusing all previous nodes) until two
// successive levels agree to the requested tolerance or the evaluation cap
// is reached.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace zeta_forge {

struct TanhSinhOptions {
  double tolerance = 1e-12;          // on |I_l - I_{l-1}| / max(1, |I_l|)
  std::uint64_t max_evaluations = 1u << 20;
  double u_max = 6.0;                // nodes reach ~1e-275 from the endpoints
  int min_level = 3;
};

template <class T>
struct TanhSinhResult {
  T value{};
  double error_estimate = 0.0;
  std::uint64_t evaluations = 0;
  bool converged = false;
};

template <class T, class F>
TanhSinhResult<T> tanh_sinh(F&& f, double a, double b, const TanhSinhOptions& options = {}) {
  if (!(b > a)) throw std::invalid_argument("tanh_sinh: need a < b");
  const double width = b - a;
  std::uint64_t evaluations = 0;

  // Weighted sample at abscissa u; for u > 0 the node sits near b.
  auto sample = [&](double u) -> T {
    const double s = std::numbers::pi / 2.0 * std::sinh(std::abs(u));
    const double e = std::exp(-2.0 * s);
    const double near = width * e / (1.0 + e);  // distance to the closer endpoint
    const double far = width / (1.0 + e);
    const double weight = width * std::numbers::pi * std::cosh(u) * e / ((1.0 + e) * (1.0 + e));
    if (near == 0.0 || weight == 0.0) return T{};
    ++evaluations;
    T value = u > 0.0 ? f(b - near, far, near) : f(a + near, near, far);
    if (!std::isfinite(std::abs(value))) {
      throw std::runtime_error("tanh_sinh: non-finite integrand value");
    }
    return weight * value;
  };

  double h = 0.5;
  T sum = sample(0.0);
  for (double u = h; u <= options.u_max; u += h) sum += sample(u) + sample(-u);
  T estimate = h * sum;

  TanhSinhResult<T> result;
  for (int level = 1;; ++level) {
    h /= 2.0;
    const auto new_nodes = static_cast<std::uint64_t>(2.0 * options.u_max / (2.0 * h));
    if (evaluations + new_nodes > options.max_evaluations) {
      result.value = estimate;
      result.evaluations = evaluations;
      return result;
    }
    for (double u = h; u <= options.u_max; u += 2.0 * h) sum += sample(u) + sample(-u);
    const T next = h * sum;
    const double change = std::abs(next - estimate);
    estimate = next;
    result.error_estimate = change;
    if (level >= options.min_level && change <= options.tolerance * std::max(1.0, std::abs(next))) {
      result.converged = true;
      break;
    }
  }
  result.value = estimate;
  result.evaluations = evaluations;
  return result;
}

}  // namespace zeta_forge
