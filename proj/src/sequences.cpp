#include "zeta_forge/sequences.hpp"

#include <string>
#include <utility>

#include "zeta_forge/errors.hpp"

namespace zeta_forge {

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Tangent: return "tangent";
    case SequenceKind::Cotangent: return "cotangent";
    case SequenceKind::Bernoulli: return "bernoulli";
  }
  return "unknown";
}

std::string to_string(SequenceRoute route) {
  switch (route) {
    case SequenceRoute::Recurrence: return "recurrence";
    case SequenceRoute::FromTangent: return "from_tangent";
  }
  return "unknown";
}

SequenceTable::SequenceTable(SequenceKind kind, SequenceRoute route, std::map<std::uint32_t, BigRational> values)
    : kind_(kind), route_(route), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("SequenceTable: empty table");
}

const BigRational& SequenceTable::at(std::uint32_t index) const {
  const auto it = values_.find(index);
  if (it == values_.end()) {
    throw MissingIndexError(to_string(kind_) + " table has no entry at index " + std::to_string(index) +
                            " (max index " + std::to_string(max_index()) + ")");
  }
  return it->second;
}

nlohmann::json SequenceTable::to_json() const {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [index, value] : values_) values[std::to_string(index)] = value.to_string();
  return {{"kind", to_string(kind_)}, {"route", to_string(route_)}, {"values", std::move(values)}};
}

SequenceTable tangent_numbers(std::uint32_t max_index) {
  // Integers throughout; promoted to rationals only for the table.
  std::vector<BigInt> t(max_index + 1);
  if (max_index >= 1) t[1] = 1;
  for (std::uint32_t n = 2; n <= max_index; ++n) {
    const auto row = binomial_row(n - 1);
    BigInt sum = 0;
    for (std::uint32_t r = 0; r < n; ++r) {
      if (t[r] == 0 || t[n - 1 - r] == 0) continue;
      sum += row[r] * t[r] * t[n - 1 - r];
    }
    t[n] = std::move(sum);
  }
  std::map<std::uint32_t, BigRational> values;
  for (std::uint32_t n = 0; n <= max_index; ++n) values.emplace(n, BigRational(t[n]));
  return SequenceTable(SequenceKind::Tangent, SequenceRoute::Recurrence, std::move(values));
}

SequenceTable cotangent_numbers(std::uint32_t max_index) {
  std::vector<BigRational> s(max_index + 1);
  s[0] = 1;
  for (std::uint32_t n = 2; n <= max_index; ++n) {
    const auto row = binomial_row(n);
    BigRational sum = 0;
    for (std::uint32_t r = 1; r < n; ++r) {
      if (s[r].is_zero() || s[n - r].is_zero()) continue;
      sum += BigRational(row[r]) * s[r] * s[n - r];
    }
    // n-th derivative of -x^2 at the origin.
    if (n == 2) sum += 2;
    s[n] = -sum / BigRational(static_cast<long>(n) + 1);
  }
  std::map<std::uint32_t, BigRational> values;
  for (std::uint32_t n = 0; n <= max_index; ++n) values.emplace(n, std::move(s[n]));
  return SequenceTable(SequenceKind::Cotangent, SequenceRoute::Recurrence, std::move(values));
}

BigRational tangent_from_cotangent(std::uint32_t k, const SequenceTable& cotangent) {
  if (k == 0) throw DomainError("tangent_from_cotangent: k must be >= 1");
  const BigRational& s2k = cotangent.at(2 * k);
  return -BigRational(power_of_two(2 * k) - 1, BigInt(2 * k)) * s2k;
}

BigRational bernoulli_from_tangent(std::uint32_t n, const SequenceTable& tangent) {
  if (n < 2) throw DomainError("bernoulli_from_tangent: n must be >= 2, got " + std::to_string(n));
  const BigRational& t = tangent.at(n - 1);
  if (n % 2 == 1) return BigRational(0);
  const std::uint32_t m = n / 2;
  const BigInt four_m = power_of_two(n);
  BigRational out = BigRational(BigInt(n)) * t / BigRational(four_m * (four_m - 1));
  return m % 2 == 1 ? out : -out;
}

SequenceTable bernoulli_table_from_tangent(std::uint32_t max_n, const SequenceTable& tangent) {
  if (max_n == 0) throw DomainError("bernoulli_table_from_tangent: max_n must be >= 1");
  std::map<std::uint32_t, BigRational> values;
  for (std::uint32_t n = 1; n <= max_n; ++n) values.emplace(2 * n, bernoulli_from_tangent(2 * n, tangent));
  return SequenceTable(SequenceKind::Bernoulli, SequenceRoute::FromTangent, std::move(values));
}

SequenceTable bernoulli_recurrence(std::uint32_t max_n, const BigRational& seed_b2) {
  if (max_n == 0) throw DomainError("bernoulli_recurrence: max_n must be >= 1");
  // b[m] holds B_{2m}.
  std::vector<BigRational> b(max_n + 1);
  b[1] = seed_b2;
  for (std::uint32_t n = 2; n <= max_n; ++n) {
    const auto row = binomial_row(2 * n);
    BigRational sum = 0;
    for (std::uint32_t m = 1; m < n; ++m) sum += BigRational(row[2 * m]) * b[m] * b[n - m];
    b[n] = -sum / BigRational(2 * static_cast<long>(n) + 1);
  }
  std::map<std::uint32_t, BigRational> values;
  for (std::uint32_t n = 1; n <= max_n; ++n) values.emplace(2 * n, std::move(b[n]));
  return SequenceTable(SequenceKind::Bernoulli, SequenceRoute::Recurrence, std::move(values));
}

double CotDerivativePoly::evaluate(double c) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * c + it->get_d();
  return acc;
}

CotDerivativePoly cot_derivative_poly(std::uint32_t n) {
  // P_0(c) = c; P_{j+1}(c) = -(1 + c^2) P_j'(c).
  std::vector<BigInt> p{0, 1};
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<BigInt> deriv(p.size() > 1 ? p.size() - 1 : 1);
    for (std::size_t i = 1; i < p.size(); ++i) deriv[i - 1] = p[i] * static_cast<unsigned long>(i);
    std::vector<BigInt> next(deriv.size() + 2);
    for (std::size_t i = 0; i < deriv.size(); ++i) {
      next[i] -= deriv[i];
      next[i + 2] -= deriv[i];
    }
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    p = std::move(next);
  }
  return CotDerivativePoly{n, std::move(p)};
}

}  // namespace zeta_forge
