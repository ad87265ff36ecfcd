#pragma once

// Test-only reference computations. None of these share code paths with the
// library routines they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "zeta_forge/exact_kernel.hpp"
#include "zeta_forge/tanh_sinh.hpp"

namespace oracle {

using zeta_forge::BigInt;
using zeta_forge::BigRational;

inline BigRational inverse_factorial(std::uint32_t n) {
  BigInt f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return BigRational(BigInt(1), f);
}

// Taylor coefficients of sin and cos up to x^{terms-1}.
inline std::vector<BigRational> sin_series(std::uint32_t terms) {
  std::vector<BigRational> c(terms);
  for (std::uint32_t n = 1; n < terms; n += 2) c[n] = ((n / 2) % 2 ? -inverse_factorial(n) : inverse_factorial(n));
  return c;
}

inline std::vector<BigRational> cos_series(std::uint32_t terms) {
  std::vector<BigRational> c(terms);
  for (std::uint32_t n = 0; n < terms; n += 2) c[n] = ((n / 2) % 2 ? -inverse_factorial(n) : inverse_factorial(n));
  return c;
}

// num / den as truncated power series; den[0] != 0.
inline std::vector<BigRational> divide(const std::vector<BigRational>& num, const std::vector<BigRational>& den) {
  std::vector<BigRational> q(num.size());
  for (std::size_t n = 0; n < num.size(); ++n) {
    BigRational acc = num[n];
    for (std::size_t j = 1; j <= n && j < den.size(); ++j) acc -= den[j] * q[n - j];
    q[n] = acc / den[0];
  }
  return q;
}

/// T_n = n! [x^n] tan x, by dividing the sine series by the cosine series.
inline std::vector<BigRational> tangent_by_series(std::uint32_t max_index) {
  const auto q = divide(sin_series(max_index + 1), cos_series(max_index + 1));
  std::vector<BigRational> t(q.size());
  for (std::uint32_t n = 0; n < q.size(); ++n) t[n] = q[n] / inverse_factorial(n);
  return t;
}

/// S_n = n! [x^n] x cot x = n! [x^n] (x cos x) / sin x; both series are divided by x first.
inline std::vector<BigRational> cotangent_by_series(std::uint32_t max_index) {
  const std::uint32_t terms = max_index + 1;
  auto sin_over_x = sin_series(terms + 1);
  sin_over_x.erase(sin_over_x.begin());
  const auto q = divide(cos_series(terms), sin_over_x);
  std::vector<BigRational> s(terms);
  for (std::uint32_t n = 0; n < terms; ++n) s[n] = q[n] / inverse_factorial(n);
  return s;
}

/// int_0^inf t^{-x} / (1 - t + s i eps) dt in closed form from
/// int_0^inf t^{-x} / (t + a) dt = pi a^{-x} / sin(pi x), a = -(1 + s i eps).
inline std::complex<double> phi_epsilon_closed(double x, double eps, double s) {
  const std::complex<double> a(-1.0, -s * eps);
  return -std::numbers::pi * std::pow(a, -x) / std::sin(std::numbers::pi * x);
}

/// int_0^inf dt / ((1 - t + i eps)(t - y - i eps t)) by partial fractions.
inline std::complex<double> fubini_closed(double y, double eps) {
  using C = std::complex<double>;
  const C a(1.0, eps);
  const C b = y / C(1.0, -eps);
  return -1.0 / (C(1.0, -eps) * (a - b)) * (std::log(-b) - std::log(-a));
}

/// int_0^T t^{-x} / (1 - t + s i eps) dt directly on the unfolded axis,
/// split at 1, 2 and powers of ten up to T.
inline std::complex<double> phi_epsilon_truncated(double x, double eps, double s, double upper) {
  using C = std::complex<double>;
  auto f = [&](double t, double, double) { return std::pow(t, -x) / C(1.0 - t, s * eps); };
  C total = zeta_forge::tanh_sinh<C>(
                [&](double t, double, double to_one) { return std::pow(t, -x) / C(to_one, s * eps); }, 0.0, 1.0)
                .value;
  total += zeta_forge::tanh_sinh<C>(
               [&](double t, double from_one, double) { return std::pow(t, -x) / C(-from_one, s * eps); }, 1.0, 2.0)
               .value;
  double lo = 2.0;
  for (double hi = 10.0; lo < upper; hi *= 10.0) {
    total += zeta_forge::tanh_sinh<C>(f, lo, std::min(hi, upper)).value;
    lo = std::min(hi, upper);
  }
  return total;
}

}  // namespace oracle
