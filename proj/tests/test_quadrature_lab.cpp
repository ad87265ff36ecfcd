#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "zeta_forge/errors.hpp"
#include "zeta_forge/grid_report.hpp"
#include "zeta_forge/quadrature_lab.hpp"
#include "zeta_forge/series_lab.hpp"
#include "zeta_forge/tanh_sinh.hpp"

using namespace zeta_forge;

namespace {

constexpr double kPi = std::numbers::pi;

double cot_pi(double x) { return std::cos(kPi * x) / std::sin(kPi * x); }

}  // namespace

TEST_SUITE("quadrature_lab") {
  TEST_CASE("tanh-sinh on smooth and endpoint-singular integrands") {
    auto poly = tanh_sinh<double>([](double x, double, double) { return x * x; }, 0.0, 3.0);
    CHECK(poly.converged);
    CHECK(poly.value == doctest::Approx(9.0).epsilon(1e-14));
    auto inv_sqrt = tanh_sinh<double>([](double x, double, double) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(inv_sqrt.value == doctest::Approx(2.0).epsilon(1e-12));
    auto log_end = tanh_sinh<double>([](double, double, double to_b) { return std::log(to_b); }, 0.0, 1.0);
    CHECK(log_end.value == doctest::Approx(-1.0).epsilon(1e-12));
    auto osc = tanh_sinh<std::complex<double>>(
        [](double x, double, double) { return std::exp(std::complex<double>(0.0, x)); }, 0.0, kPi);
    CHECK(std::abs(osc.value - std::complex<double>(0.0, 2.0)) < 1e-12);
    CHECK_THROWS_AS(tanh_sinh<double>([](double, double, double) { return 1.0; }, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(tanh_sinh<double>([](double, double, double) { return NAN; }, 0.0, 1.0), std::runtime_error);
  }

  TEST_CASE("digamma integral against the series") {
    CHECK(digamma_integral(0.5).value_real ==
          doctest::Approx(-kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-13));
    for (double x : make_grid(0.1, 0.9, 0.1)) {
      CAPTURE(x);
      CHECK(std::abs(digamma_integral(x).value_real - digamma_series(x, 1'000'000).value_estimate) < 1e-8);
    }
  }

  TEST_CASE("phi on the unit interval") {
    CHECK(std::abs(phi_unit_interval(0.5).value_real) < 1e-14);
    CHECK(phi_unit_interval(0.25).value_real == doctest::Approx(-kPi).epsilon(1e-13));
    for (double x : make_grid(0.05, 0.95, 0.05)) {
      CAPTURE(x);
      CHECK(phi_unit_interval(x).value_real == doctest::Approx(-kPi * cot_pi(x)).epsilon(1e-12));
      // Antisymmetry phi(1 - x) = -phi(x).
      CHECK(std::abs(phi_unit_interval(x).value_real + phi_unit_interval(1.0 - x).value_real) < 1e-12);
    }
  }

  TEST_CASE("principal value agrees with the unit-interval form and the closed form") {
    const auto grid = make_grid(0.1, 0.9, 0.05);
    CHECK(representation_check(grid).max_abs_residual <= 1e-8);
    CHECK(reflection_closed_form_check(grid).max_abs_residual <= 1e-8);
    CHECK(phi_principal_value(0.75).value_real == doctest::Approx(kPi).epsilon(1e-12));
    const std::vector<double> edge{0.01};
    CHECK_THROWS_AS(reflection_closed_form_check(edge), DomainError);
    CHECK_THROWS_AS(representation_check(edge), DomainError);
  }

  TEST_CASE("phi_epsilon against the closed form and direct truncated integration") {
    for (double x : {0.3, 0.5, 0.7}) {
      for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
        CAPTURE(x);
        CAPTURE(eps);
        const auto minus = phi_epsilon(x, eps, EpsSign::Minus).value();
        const auto plus = phi_epsilon(x, eps, EpsSign::Plus).value();
        CHECK(std::abs(minus - oracle::phi_epsilon_closed(x, eps, -1.0)) < 1e-10);
        CHECK(std::abs(plus - oracle::phi_epsilon_closed(x, eps, 1.0)) < 1e-10);
        CHECK(std::abs(plus - std::conj(minus)) < 1e-12);
      }
    }
    // The unfolded integral up to T misses roughly T^{-x}/x of the tail.
    const double upper = 1e6;
    for (double x : {0.5, 0.7}) {
      const auto direct = oracle::phi_epsilon_truncated(x, 1e-2, -1.0, upper);
      const auto folded = phi_epsilon(x, 1e-2, EpsSign::Minus).value();
      const double tail = std::pow(upper, -x) / x;
      CHECK(std::abs(direct.imag() - folded.imag()) < 1e-6);
      CHECK(std::abs(direct.real() - tail - folded.real()) < 10.0 * std::pow(upper, -x - 1.0) + 1e-6);
    }
  }

  TEST_CASE("Plemelj limit") {
    const std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4};
    for (double x : {0.3, 0.5, 0.7}) {
      CAPTURE(x);
      const auto report = plemelj_sweep(x, eps);
      CHECK(report.strictly_decreasing());
      CHECK(report.max_abs_residual <= 0.15);
      CHECK(report.residuals.back() <= 1e-3);
      CHECK(phi_epsilon(x, 1e-4, EpsSign::Minus).value_real == doctest::Approx(-kPi * cot_pi(x)).epsilon(1e-3));
    }
    CHECK_THROWS_AS(phi_epsilon(0.5, 0.0, EpsSign::Minus), DomainError);
    CHECK_THROWS_AS(phi_epsilon(0.5, 0.2, EpsSign::Minus), DomainError);
    CHECK_THROWS_AS(phi_epsilon(1.0, 0.01, EpsSign::Minus), DomainError);
  }

  TEST_CASE("log kernel and the product identity") {
    CHECK(log_kernel_integral(0.5).value_real == doctest::Approx(-kPi * kPi).epsilon(1e-12));
    CHECK(log_kernel_integral(0.25).value_real == doctest::Approx(-2.0 * kPi * kPi).epsilon(1e-12));
    CHECK(product_identity_check(make_grid(0.1, 0.9, 0.05)).max_abs_residual <= 1e-7);
  }

  TEST_CASE("Fubini inner integral") {
    for (double y : {0.2, 0.5, 2.0, 5.0, 40.0}) {
      for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
        CAPTURE(y);
        CAPTURE(eps);
        CHECK(std::abs(fubini_inner_integral(y, eps).value() - oracle::fubini_closed(y, eps)) < 1e-9);
      }
    }
    const std::vector<double> eps{1e-2, 1e-3, 1e-4};
    for (double y : {0.5, 2.0, 5.0}) {
      const auto report = fubini_inner_check(y, eps);
      CHECK(report.strictly_decreasing());
      CHECK(report.max_abs_residual <= 1e-2);
    }
    CHECK_THROWS_AS(fubini_inner_integral(1.0, 1e-2), DomainError);
    CHECK_THROWS_AS(fubini_inner_integral(-1.0, 1e-2), DomainError);
    CHECK_THROWS_AS(fubini_inner_check(1.0, eps), DomainError);
  }

  TEST_CASE("ODE residual") {
    const auto report = ode_residual(make_grid(0.2, 0.8, 0.05), 1e-3);
    CHECK(report.points.size() == 13);
    CHECK(report.max_abs_residual <= 1e-4);
    CHECK(phi_derivative(0.5, 1e-3) == doctest::Approx(kPi * kPi).epsilon(1e-8));
    const std::vector<double> outside{0.1};
    CHECK_THROWS_AS(ode_residual(outside, 1e-3), DomainError);
    const std::vector<double> inside{0.5};
    CHECK_THROWS_AS(ode_residual(inside, 1e-1), DomainError);
    CHECK_THROWS_AS(ode_residual(inside, 1e-7), DomainError);
  }

  TEST_CASE("QuadratureResult JSON") {
    const auto j = phi_epsilon(0.5, 1e-2, EpsSign::Minus).to_json();
    CHECK(j.contains("value_real"));
    CHECK(j.contains("value_imag"));
    CHECK(j.contains("error_estimate"));
    CHECK(j["evaluations"].get<std::uint64_t>() > 0);
  }
}

TEST_SUITE("grid_report") {
  TEST_CASE("grids") {
    const auto g = parse_grid("0.1:0.9:0.1");
    REQUIRE(g.size() == 9);
    CHECK(g.front() == 0.1);
    CHECK(g.back() == 0.9);
    CHECK(g[2] == 0.3);
    CHECK(make_grid(0.2, 0.8, 0.05).size() == 13);
    CHECK(make_grid(0.0, 1.0, 0.3).size() == 4);
    CHECK(make_grid(0.5, 0.5, 0.1).size() == 1);
    CHECK_THROWS_AS(parse_grid("0.1:0.9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("a:b:c"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0.1:0.9:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0.9:0.1:0.1"), std::invalid_argument);
  }

  TEST_CASE("reports") {
    const auto r = GridReport::from({1, 2, 3}, {0.3, -0.5, 0.1});
    CHECK(r.max_abs_residual == 0.5);
    CHECK_FALSE(r.strictly_decreasing());
    CHECK(GridReport::from({1, 2}, {0.2, 0.1}).strictly_decreasing());
    CHECK_FALSE(GridReport::from({1, 2}, {0.1, 0.1}).strictly_decreasing());
    CHECK_THROWS_AS(GridReport::from({1, 2}, {0.1}), std::invalid_argument);
    const auto j = r.to_json();
    CHECK(j["points"].size() == 3);
    CHECK(j["residuals"].size() == 3);
    CHECK(j["max_abs_residual"] == 0.5);
  }
}
