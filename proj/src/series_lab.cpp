#include "zeta_forge/series_lab.hpp"

#include <cmath>
#include <string>

#include "zeta_forge/errors.hpp"
#include "zeta_forge/parallel.hpp"
#include "zeta_forge/sequences.hpp"

namespace zeta_forge {

namespace {

constexpr double kLatticeTolerance = 1e-12;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      carry_ += (sum_ - t) + term;
    } else {
      carry_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double ipow(double base, std::uint32_t e) {
  double out = 1.0;
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

void require_k(std::uint32_t k, const char* op) {
  if (k == 0) throw DomainError(std::string(op) + ": k must be >= 1");
}

void require_terms(std::uint64_t terms, const char* op) {
  if (terms == 0) throw DomainError(std::string(op) + ": need at least one term");
}

void require_lattice_point_free(double x, const char* op) {
  if (!std::isfinite(x)) throw DomainError(std::string(op) + ": x must be finite");
  if (std::abs(x - 1.0) < kLatticeTolerance) {
    throw SingularInputError(std::string(op) + ": x = " + std::to_string(x) + " collides with the lattice point 1");
  }
  if (x < 0.0 || x >= 1.0) throw DomainError(std::string(op) + ": x must lie in [0, 1), got " + std::to_string(x));
}

SeriesEstimate finish(double partial, std::uint64_t terms, double low, double high) {
  return {partial, terms, low, high, partial + 0.5 * (low + high)};
}

// Integral of 1/(t - shift)^{2k} over [a, inf).
double power_tail(double a, double shift, std::uint32_t k) {
  return std::pow(a - shift, 1.0 - 2.0 * k) / (2.0 * k - 1.0);
}

// Integral of x/(t (t - x)) over [a, inf) = ln(a / (a - x)).
double potential_tail(double a, double x) { return -std::log1p(-x / a); }

}  // namespace

nlohmann::json SeriesEstimate::to_json() const {
  return {{"partial_sum", partial_sum}, {"terms", terms_used}, {"tail", {tail_low, tail_high}},
          {"estimate", value_estimate}};
}

SeriesEstimate partial_zeta_sum(std::uint32_t k, std::uint64_t terms, bool half_shift) {
  require_k(k, "partial_zeta_sum");
  require_terms(terms, "partial_zeta_sum");
  const double shift = half_shift ? 0.5 : 0.0;
  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= terms; ++n) {
    const double d = static_cast<double>(n) - shift;
    sum.add(1.0 / ipow(d * d, k));
  }
  const double n = static_cast<double>(terms);
  return finish(sum.value(), terms, power_tail(n + 1.0, shift, k), power_tail(n, shift, k));
}

double potential_term(std::uint64_t n, double x) {
  const double nd = static_cast<double>(n);
  // 1/(n - x) - 1/n without cancellation.
  return x / (nd * (nd - x));
}

double force_term(std::uint64_t n, double x) {
  const double d = static_cast<double>(n) - x;
  return 1.0 / (d * d);
}

SeriesEstimate regularized_potential(double x, std::uint64_t terms) {
  require_lattice_point_free(x, "regularized_potential");
  require_terms(terms, "regularized_potential");
  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= terms; ++n) sum.add(potential_term(n, x));
  const double n = static_cast<double>(terms);
  // U_R is minus the sum, so the bracket flips.
  return finish(-sum.value(), terms, -potential_tail(n, x), -potential_tail(n + 1.0, x));
}

SeriesEstimate coulomb_force(double x, std::uint64_t terms) {
  require_lattice_point_free(x, "coulomb_force");
  require_terms(terms, "coulomb_force");
  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= terms; ++n) sum.add(force_term(n, x));
  const double n = static_cast<double>(terms);
  return finish(sum.value(), terms, 1.0 / (n + 1.0 - x), 1.0 / (n - x));
}

SeriesEstimate digamma_series(double x, std::uint64_t terms) {
  SeriesEstimate u = regularized_potential(x, terms);
  u.partial_sum -= kEulerGamma;
  u.value_estimate -= kEulerGamma;
  return u;
}

SeriesEstimate polygamma_series(std::uint32_t k, double x, std::uint64_t terms) {
  require_k(k, "polygamma_series");
  require_lattice_point_free(x, "polygamma_series");
  require_terms(terms, "polygamma_series");
  double scale = 1.0;  // (2k-1)!
  for (std::uint32_t i = 2; i < 2 * k; ++i) scale *= i;
  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= terms; ++n) {
    const double d = static_cast<double>(n) - x;
    sum.add(1.0 / ipow(d * d, k));
  }
  const double n = static_cast<double>(terms);
  return finish(scale * sum.value(), terms, scale * power_tail(n + 1.0, x, k), scale * power_tail(n, x, k));
}

GridReport reflection_check(std::uint32_t k, std::span<const double> grid, std::uint64_t terms) {
  require_k(k, "reflection_check");
  for (double x : grid) {
    if (!(x >= 0.05 - 1e-12 && x <= 0.95 + 1e-12)) {
      throw DomainError("reflection_check: grid point " + std::to_string(x) + " is closer than 0.05 to 0 or 1");
    }
  }
  if (terms == 0) terms = default_terms(k);
  const CotDerivativePoly poly = cot_derivative_poly(2 * k - 1);
  const double pi_2k = std::pow(std::numbers::pi, 2.0 * k);
  std::vector<double> residuals(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const double x = grid[i];
    const double lhs = polygamma_series(k, x, terms).value_estimate + polygamma_series(k, 1.0 - x, terms).value_estimate;
    const double cot = std::cos(std::numbers::pi * x) / std::sin(std::numbers::pi * x);
    const double rhs = -pi_2k * poly.evaluate(cot);
    residuals[i] = std::abs(lhs - rhs);
  });
  return GridReport::from({grid.begin(), grid.end()}, std::move(residuals));
}

}  // namespace zeta_forge
