#include "zeta_forge/exact_kernel.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace zeta_forge {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRational::BigRational(long value) : value_(value) {}

BigRational::BigRational(const BigInt& value) : value_(value) {}

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const BigInt d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
  return BigRational(BigInt(std::string(num), 10), d);
}

std::string BigRational::to_string() const {
  std::string out = value_.get_num().get_str(10);
  if (value_.get_den() != 1) {
    out += '/';
    out += value_.get_den().get_str(10);
  }
  return out;
}

BigRational BigRational::operator-() const {
  BigRational out;
  out.value_ = -value_;
  return out;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.to_string(); }

BigInt factorial(std::uint32_t n) {
  BigInt out = 1;
  for (std::uint32_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(std::uint32_t n, std::uint32_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt out = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    out *= n - i;
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), i + 1);
  }
  return out;
}

std::vector<BigInt> binomial_row(std::uint32_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::uint32_t r = 0; r < n; ++r) {
    row[r + 1] = row[r] * (n - r);
    mpz_divexact_ui(row[r + 1].get_mpz_t(), row[r + 1].get_mpz_t(), r + 1);
  }
  return row;
}

BigInt power_of_two(std::uint32_t e) {
  BigInt out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), e);
  return out;
}

}  // namespace zeta_forge
