#pragma once

// Exact integer and rational arithmetic shared by every recurrence in the
// library. Integers are GMP integers; rationals are kept in canonical form
// (positive denominator, coprime numerator and denominator) at all times.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zeta_forge {

using BigInt = mpz_class;

class BigRational {
 public:
  BigRational() = default;
  BigRational(long value);  // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& value);
  /// Throws std::domain_error when `denominator` is zero.
  BigRational(const BigInt& numerator, const BigInt& denominator);

  /// Parses the "p/q" form produced by to_string(); a bare integer is
  /// accepted as well. Throws std::invalid_argument on malformed input.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return BigInt(value_.get_num()); }
  BigInt denominator() const { return BigInt(value_.get_den()); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "p/q", "-p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  /// Nearest-ish double (GMP truncation); exact values are never derived from it.
  double to_double() const { return value_.get_d(); }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

/// n! exactly.
BigInt factorial(std::uint32_t n);

/// C(n, r) exactly, 0 when r > n. Multiplicative formula; every partial
/// product C(n, i) is an integer so the running division is exact.
BigInt binomial(std::uint32_t n, std::uint32_t r);

/// The full row C(n, 0) ... C(n, n).
std::vector<BigInt> binomial_row(std::uint32_t n);

/// 2^e as an exact integer.
BigInt power_of_two(std::uint32_t e);

}  // namespace zeta_forge
