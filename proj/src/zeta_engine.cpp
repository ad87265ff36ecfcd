#include "zeta_forge/zeta_engine.hpp"

#include <array>
#include <cmath>
#include <future>
#include <numbers>
#include <regex>
#include <string>

#include "zeta_forge/errors.hpp"
#include "zeta_forge/parallel.hpp"

namespace zeta_forge {

namespace {

void require_positive_k(std::uint32_t k, const char* op) {
  if (k == 0) throw DomainError(std::string(op) + ": k must be >= 1");
}

// pi truncated to 110 decimals; [kPiLow, kPiLow + 1e-110] brackets pi.
constexpr const char* kPiDigits =
    "314159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808651";
constexpr unsigned kPiDecimals = 110;

const BigRational& pi_low() {
  static const BigRational value(BigInt(kPiDigits, 10), BigInt("1" + std::string(kPiDecimals, '0'), 10));
  return value;
}

const BigRational& pi_high() {
  static const BigRational value =
      pi_low() + BigRational(BigInt(1), BigInt("1" + std::string(kPiDecimals, '0'), 10));
  return value;
}

BigRational pow(const BigRational& base, std::uint32_t e) {
  BigRational out = 1;
  for (std::uint32_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

std::string to_string(ZetaRoute route) {
  switch (route) {
    case ZetaRoute::Tangent: return "tangent";
    case ZetaRoute::Cotangent: return "cotangent";
    case ZetaRoute::SelfRecurrence: return "recurrence";
    case ZetaRoute::Bernoulli: return "bernoulli";
    case ZetaRoute::Validated: return "validated";
  }
  return "unknown";
}

namespace {

// coeff * pi^power in 320-bit floating point, truncated to double at the end.
double monomial_numeric(const BigRational& coeff, std::uint32_t power) {
  constexpr mp_bitcnt_t kBits = 320;
  mpf_class pi(pi_low().numerator(), kBits);
  pi /= mpf_class(pi_low().denominator(), kBits);
  mpf_class scaled(0, kBits);
  mpf_pow_ui(scaled.get_mpf_t(), pi.get_mpf_t(), power);
  scaled *= mpf_class(coeff.numerator(), kBits);
  scaled /= mpf_class(coeff.denominator(), kBits);
  return scaled.get_d();
}

}  // namespace

double ZetaValue::numeric() const { return monomial_numeric(coeff, pi_power()); }

double PiMonomial::numeric() const { return monomial_numeric(coeff, pi_power); }

ZetaValue zeta_via_tangent(std::uint32_t k, const SequenceTable& tangent) {
  require_positive_k(k, "zeta_via_tangent");
  const BigInt denom = 2 * (power_of_two(2 * k) - 1) * factorial(2 * k - 1);
  return {k, tangent.at(2 * k - 1) / BigRational(denom), ZetaRoute::Tangent};
}

ZetaValue zeta_via_tangent(std::uint32_t k) {
  require_positive_k(k, "zeta_via_tangent");
  return zeta_via_tangent(k, tangent_numbers(2 * k - 1));
}

ZetaValue zeta_via_cotangent(std::uint32_t k, const SequenceTable& cotangent) {
  require_positive_k(k, "zeta_via_cotangent");
  return {k, -cotangent.at(2 * k) / BigRational(2 * factorial(2 * k)), ZetaRoute::Cotangent};
}

ZetaValue zeta_via_cotangent(std::uint32_t k) {
  require_positive_k(k, "zeta_via_cotangent");
  return zeta_via_cotangent(k, cotangent_numbers(2 * k));
}

std::vector<ZetaValue> zeta_self_recurrence_table(std::uint32_t max_k) {
  require_positive_k(max_k, "zeta_self_recurrence_table");
  std::vector<BigRational> q(max_k + 1);
  q[1] = zeta_via_tangent(1).coeff;
  for (std::uint32_t k = 2; k <= max_k; ++k) {
    BigRational sum = 0;
    for (std::uint32_t m = 1; m < k; ++m) sum += q[m] * q[k - m];
    q[k] = sum * BigRational(BigInt(2), BigInt(2 * k + 1));
  }
  std::vector<ZetaValue> out;
  out.reserve(max_k);
  for (std::uint32_t k = 1; k <= max_k; ++k) out.push_back({k, std::move(q[k]), ZetaRoute::SelfRecurrence});
  return out;
}

ZetaValue zeta_via_self_recurrence(std::uint32_t k) {
  require_positive_k(k, "zeta_via_self_recurrence");
  return std::move(zeta_self_recurrence_table(k).back());
}

ZetaValue zeta_via_bernoulli(std::uint32_t k, const SequenceTable& bernoulli) {
  require_positive_k(k, "zeta_via_bernoulli");
  BigRational coeff = bernoulli.at(2 * k) * BigRational(power_of_two(2 * k), 2 * factorial(2 * k));
  if (k % 2 == 0) coeff = -coeff;
  return {k, std::move(coeff), ZetaRoute::Bernoulli};
}

ZetaValue zeta_via_bernoulli(std::uint32_t k) {
  require_positive_k(k, "zeta_via_bernoulli");
  const BigRational b2 = bernoulli_from_tangent(2, tangent_numbers(1));
  return zeta_via_bernoulli(k, bernoulli_recurrence(k, b2));
}

std::vector<ZetaValue> zeta_validated_range(std::uint32_t max_k) {
  require_positive_k(max_k, "zeta_validated_range");
  // Each route builds its own tables so that a defect in one sequence cannot
  // leak into another route.
  auto tangent_route = [max_k] {
    const auto table = tangent_numbers(2 * max_k - 1);
    std::vector<ZetaValue> out;
    for (std::uint32_t k = 1; k <= max_k; ++k) out.push_back(zeta_via_tangent(k, table));
    return out;
  };
  auto cotangent_route = [max_k] {
    const auto table = cotangent_numbers(2 * max_k);
    std::vector<ZetaValue> out;
    for (std::uint32_t k = 1; k <= max_k; ++k) out.push_back(zeta_via_cotangent(k, table));
    return out;
  };
  auto self_route = [max_k] { return zeta_self_recurrence_table(max_k); };
  auto bernoulli_route = [max_k] {
    const auto table = bernoulli_recurrence(max_k, bernoulli_from_tangent(2, tangent_numbers(1)));
    std::vector<ZetaValue> out;
    for (std::uint32_t k = 1; k <= max_k; ++k) out.push_back(zeta_via_bernoulli(k, table));
    return out;
  };

  std::array<std::vector<ZetaValue>, 4> routes;
  if (max_threads() > 1) {
    auto a = std::async(std::launch::async, tangent_route);
    auto b = std::async(std::launch::async, cotangent_route);
    auto c = std::async(std::launch::async, self_route);
    routes[3] = bernoulli_route();
    routes[0] = a.get();
    routes[1] = b.get();
    routes[2] = c.get();
  } else {
    routes = {tangent_route(), cotangent_route(), self_route(), bernoulli_route()};
  }

  std::vector<ZetaValue> out;
  out.reserve(max_k);
  for (std::uint32_t i = 0; i < max_k; ++i) {
    const ZetaValue& reference = routes[0][i];
    for (std::size_t r = 1; r < routes.size(); ++r) {
      const ZetaValue& other = routes[r][i];
      if (other.coeff != reference.coeff) {
        throw RouteDisagreementError("zeta(" + std::to_string(2 * reference.k) + "): route " +
                                     to_string(reference.route) + " gives " + reference.coeff.to_string() +
                                     " but route " + to_string(other.route) + " gives " +
                                     other.coeff.to_string());
      }
    }
    out.push_back({reference.k, reference.coeff, ZetaRoute::Validated});
  }
  return out;
}

ZetaValue zeta_validated(std::uint32_t k) {
  require_positive_k(k, "zeta_validated");
  return std::move(zeta_validated_range(k).back());
}

PiMonomial polygamma_half_exact(std::uint32_t k, const SequenceTable& tangent) {
  require_positive_k(k, "polygamma_half_exact");
  return {tangent.at(2 * k - 1) / BigRational(2), 2 * k};
}

PiMonomial polygamma_half_exact(std::uint32_t k) {
  require_positive_k(k, "polygamma_half_exact");
  return polygamma_half_exact(k, tangent_numbers(2 * k - 1));
}

std::string render_exact(const ZetaValue& value) {
  return value.coeff.to_string() + " * pi^" + std::to_string(value.pi_power());
}

ZetaValue parse_exact(std::string_view text) {
  static const std::regex pattern(R"(^\s*(-?[0-9]+(?:/[0-9]+)?)\s*\*\s*pi\^([0-9]+)\s*$)");
  std::cmatch match;
  if (!std::regex_match(text.begin(), text.end(), match, pattern)) {
    throw std::invalid_argument("not of the form 'p/q * pi^n': '" + std::string(text) + "'");
  }
  const unsigned long power = std::stoul(match[2].str());
  if (power == 0 || power % 2 != 0) {
    throw std::invalid_argument("pi power must be a positive even integer: '" + std::string(text) + "'");
  }
  return {static_cast<std::uint32_t>(power / 2), BigRational::parse(match[1].str()), ZetaRoute::Validated};
}

nlohmann::json to_json(const ZetaValue& value, bool routes_agreed) {
  return {{"k", value.k},
          {"coeff", value.coeff.to_string()},
          {"pi_power", value.pi_power()},
          {"routes_agreed", routes_agreed}};
}

bool zeta_exceeds_one(const ZetaValue& value) {
  return value.coeff * pow(pi_low(), value.pi_power()) > BigRational(1);
}

bool zeta_certainly_less(const ZetaValue& later, const ZetaValue& earlier) {
  return later.coeff * pow(pi_high(), later.pi_power()) < earlier.coeff * pow(pi_low(), earlier.pi_power());
}

}  // namespace zeta_forge
