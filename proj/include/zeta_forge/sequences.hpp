#pragma once

// Tangent numbers T_n (derivatives of tan x at 0), cotangent-expansion
// numbers S_n (derivatives of x cot x at 0), Bernoulli numbers by two
// routes, and the derivative polynomials of cot(pi x).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "zeta_forge/exact_kernel.hpp"

namespace zeta_forge {

enum class SequenceKind { Tangent, Cotangent, Bernoulli };
enum class SequenceRoute { Recurrence, FromTangent };

std::string to_string(SequenceKind kind);
std::string to_string(SequenceRoute route);

/// Immutable, bottom-up computed table of exact sequence values.
class SequenceTable {
 public:
  SequenceTable(SequenceKind kind, SequenceRoute route, std::map<std::uint32_t, BigRational> values);

  SequenceKind kind() const { return kind_; }
  SequenceRoute route() const { return route_; }
  const std::map<std::uint32_t, BigRational>& values() const { return values_; }

  bool contains(std::uint32_t index) const { return values_.contains(index); }
  /// Throws MissingIndexError when the index was not computed.
  const BigRational& at(std::uint32_t index) const;
  /// Largest index held; the table is never empty.
  std::uint32_t max_index() const { return values_.rbegin()->first; }

  /// {"kind": "...", "route": "...", "values": {"0": "0", "1": "1", ...}}
  nlohmann::json to_json() const;

 private:
  SequenceKind kind_;
  SequenceRoute route_;
  std::map<std::uint32_t, BigRational> values_;
};

/// T_0 ... T_max_index from T_n = sum_{r=0}^{n-1} C(n-1,r) T_r T_{n-1-r}, n >= 2.
SequenceTable tangent_numbers(std::uint32_t max_index);

/// S_0 ... S_max_index from (n+1) S_n = -sum_{r=1}^{n-1} C(n,r) S_r S_{n-r}
/// (plus the -2 contributed by the x^2 term of the generating identity at n = 2).
SequenceTable cotangent_numbers(std::uint32_t max_index);

/// T_{2k-1} = -((2^{2k} - 1) / (2k)) S_{2k}. k >= 1.
BigRational tangent_from_cotangent(std::uint32_t k, const SequenceTable& cotangent);

/// B_n for n >= 2 from T_{n-1}; zero for odd n. DomainError when n < 2.
BigRational bernoulli_from_tangent(std::uint32_t n, const SequenceTable& tangent);

/// Even-index table B_2 ... B_{2 max_n} from the tangent numbers.
SequenceTable bernoulli_table_from_tangent(std::uint32_t max_n, const SequenceTable& tangent);

/// Even-index table B_2 ... B_{2 max_n} from
/// (2n+1) B_{2n} = -sum_{m=1}^{n-1} C(2n,2m) B_{2m} B_{2n-2m}, n >= 2, seeded with B_2.
SequenceTable bernoulli_recurrence(std::uint32_t max_n, const BigRational& seed_b2);

/// d^n/dx^n cot(pi x) = pi^n * sum_j coefficients[j] * cot(pi x)^j.
struct CotDerivativePoly {
  std::uint32_t order = 0;
  std::vector<BigInt> coefficients;

  /// Value of the integer polynomial at c (without the pi^order factor).
  double evaluate(double c) const;
};

CotDerivativePoly cot_derivative_poly(std::uint32_t n);

}  // namespace zeta_forge
