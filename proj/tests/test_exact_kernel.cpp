#include <random>
#include <stdexcept>

#include "doctest.h"

#include "zeta_forge/exact_kernel.hpp"

using namespace zeta_forge;

TEST_SUITE("exact_kernel") {
  TEST_CASE("binomial small cases") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    for (std::uint32_t n = 0; n < 30; ++n) CHECK(binomial(n, 0) == 1);
  }

  TEST_CASE("binomial symmetry and Pascal identity") {
    for (std::uint32_t n = 1; n <= 120; ++n) {
      for (std::uint32_t r = 0; r <= n; ++r) {
        REQUIRE(binomial(n, r) == binomial(n, n - r));
        if (r >= 1 && r <= n - 1) REQUIRE(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
      }
    }
  }

  TEST_CASE("binomial row matches pointwise binomial and factorial quotient") {
    const auto row = binomial_row(200);
    REQUIRE(row.size() == 201);
    CHECK(row[100] == binomial(200, 100));
    CHECK(row[100] == factorial(200) / (factorial(100) * factorial(100)));
    CHECK(row[100].get_str() == "90548514656103281165404177077484163874504589675413336841320");
  }

  TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
  }

  TEST_CASE("canonical form and string format") {
    const BigRational r(BigInt(-4), BigInt(-6));
    CHECK(r.to_string() == "2/3");
    CHECK(BigRational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
    CHECK(BigRational(BigInt(10), BigInt(5)).to_string() == "2");
    CHECK(BigRational(BigInt(-1), BigInt(30)).to_string() == "-1/30");
    CHECK(BigRational(0).to_string() == "0");
    CHECK(BigRational(BigInt(691), BigInt(638512875)).to_string() == "691/638512875");
    CHECK(r.denominator() > 0);
  }

  TEST_CASE("parse round-trips rendered values and rejects junk") {
    for (const char* text : {"691/638512875", "2", "-1/30", "0", "-7"}) {
      CHECK(BigRational::parse(text).to_string() == text);
    }
    CHECK(BigRational::parse("4/6").to_string() == "2/3");
    for (const char* bad : {"", "1/", "/2", "1/0", "a/b", "1/-2", "1.5", "--1"}) {
      CHECK_THROWS_AS(BigRational::parse(bad), std::invalid_argument);
    }
  }

  TEST_CASE("division by zero is a domain error") {
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
    BigRational a(1);
    CHECK_THROWS_AS(a /= BigRational(0), std::domain_error);
  }

  TEST_CASE("property: rational arithmetic is exact and canonical") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-1'000'000'000'000L, 1'000'000'000'000L);
    std::uniform_int_distribution<long> den(1, 1'000'000'000'000L);
    for (int trial = 0; trial < 2000; ++trial) {
      const BigInt a(std::to_string(num(rng)));
      const BigInt b(std::to_string(den(rng)));
      const BigInt c(std::to_string(num(rng)));
      const BigInt d(std::to_string(den(rng)));
      const BigRational sum = BigRational(a, b) + BigRational(c, d);
      // (a/b + c/d) * bd = ad + cb
      const BigRational scaled = sum * BigRational(b * d);
      REQUIRE(scaled.is_integer());
      REQUIRE(scaled.numerator() == a * d + c * b);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), sum.numerator().get_mpz_t(), sum.denominator().get_mpz_t());
      REQUIRE((sum.is_zero() || g == 1));
      REQUIRE(sum.denominator() > 0);
      REQUIRE(BigRational::parse(sum.to_string()) == sum);
      if (!sum.is_zero()) REQUIRE(sum / sum == BigRational(1));
      REQUIRE(sum - sum == BigRational(0));
    }
  }

  TEST_CASE("ordering") {
    CHECK(BigRational(BigInt(1), BigInt(3)) < BigRational(BigInt(1), BigInt(2)));
    CHECK(BigRational(-1) < BigRational(0));
    CHECK(-BigRational(BigInt(1), BigInt(6)) == BigRational(BigInt(-1), BigInt(6)));
  }
}
