#pragma once

// Exact values zeta(2k) = q_k * pi^{2k}, computed along four independent
// routes (tangent numbers, cotangent numbers, the quadratic self-recurrence
// of zeta values, Bernoulli numbers) and cross-validated.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zeta_forge/exact_kernel.hpp"
#include "zeta_forge/sequences.hpp"

namespace zeta_forge {

enum class ZetaRoute { Tangent, Cotangent, SelfRecurrence, Bernoulli, Validated };

std::string to_string(ZetaRoute route);

/// zeta(2k) = coeff * pi^{2k}.
struct ZetaValue {
  std::uint32_t k = 1;
  BigRational coeff;
  ZetaRoute route = ZetaRoute::Validated;

  std::uint32_t pi_power() const { return 2 * k; }
  /// coeff * pi^{2k} in double precision.
  double numeric() const;
};

/// coeff * pi^{pi_power}.
struct PiMonomial {
  BigRational coeff;
  std::uint32_t pi_power = 0;

  double numeric() const;
  friend bool operator==(const PiMonomial&, const PiMonomial&) = default;
};

ZetaValue zeta_via_tangent(std::uint32_t k);
ZetaValue zeta_via_tangent(std::uint32_t k, const SequenceTable& tangent);

ZetaValue zeta_via_cotangent(std::uint32_t k);
ZetaValue zeta_via_cotangent(std::uint32_t k, const SequenceTable& cotangent);

/// (k + 1/2) q_k = sum_{m=1}^{k-1} q_m q_{k-m}, seeded with q_1 from the tangent route.
ZetaValue zeta_via_self_recurrence(std::uint32_t k);
/// q_1 ... q_max_k in one pass of the self-recurrence.
std::vector<ZetaValue> zeta_self_recurrence_table(std::uint32_t max_k);

/// Uses the Bernoulli recurrence seeded with B_2 from the tangent numbers.
ZetaValue zeta_via_bernoulli(std::uint32_t k);
ZetaValue zeta_via_bernoulli(std::uint32_t k, const SequenceTable& bernoulli);

/// Runs all four routes and throws RouteDisagreementError unless they agree exactly.
ZetaValue zeta_validated(std::uint32_t k);
/// zeta_validated for k = 1 ... max_k, sharing the sequence tables between k.
std::vector<ZetaValue> zeta_validated_range(std::uint32_t max_k);

/// psi_{2k-1}(1/2) = (T_{2k-1} / 2) * pi^{2k}.
PiMonomial polygamma_half_exact(std::uint32_t k);
PiMonomial polygamma_half_exact(std::uint32_t k, const SequenceTable& tangent);

/// "691/638512875 * pi^12"
std::string render_exact(const ZetaValue& value);
/// Inverse of render_exact; route is set to Validated. Throws std::invalid_argument.
ZetaValue parse_exact(std::string_view text);
/// {"k": 6, "coeff": "691/638512875", "pi_power": 12, "routes_agreed": true}
nlohmann::json to_json(const ZetaValue& value, bool routes_agreed);

/// Decisions made with exact rational bounds on pi, valid where double
/// precision cannot resolve zeta(2k) from 1.
bool zeta_exceeds_one(const ZetaValue& value);
/// True when zeta(2 later.k) < zeta(2 earlier.k) is certified.
bool zeta_certainly_less(const ZetaValue& later, const ZetaValue& earlier);

}  // namespace zeta_forge
