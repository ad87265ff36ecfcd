#include "zeta_forge/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zeta_forge/errors.hpp"
#include "zeta_forge/grid_report.hpp"
#include "zeta_forge/quadrature_lab.hpp"
#include "zeta_forge/sequences.hpp"
#include "zeta_forge/series_lab.hpp"
#include "zeta_forge/zeta_engine.hpp"

namespace zeta_forge::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string decimal(double value) { return fmt::format("{:.15g}", value); }

bool is_json(const CliConfig& c) { return c.format == "json"; }

std::vector<double> grid_or(const CliConfig& c, const char* fallback) {
  return parse_grid(c.grid.empty() ? std::string(fallback) : c.grid);
}

std::vector<double> list_or(const std::vector<double>& values, std::vector<double> fallback) {
  return values.empty() ? fallback : values;
}

void print_report_text(std::ostream& out, const std::string& title, const std::string& point_label,
                       const GridReport& report) {
  out << "# " << title << '\n';
  out << fmt::format("{:<14}{}\n", point_label, "residual");
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    out << fmt::format("{:<14}{:.3e}\n", decimal(report.points[i]), report.residuals[i]);
  }
}

void print_verdict(std::ostream& out, double max_residual, double threshold, bool passed) {
  out << fmt::format("max_abs_residual = {:.3e} (threshold {:.3e}): {}\n", max_residual, threshold,
                     passed ? "PASS" : "FAIL");
}

json report_json(const GridReport& report, double threshold, bool passed) {
  json j = report.to_json();
  j["threshold"] = threshold;
  j["passed"] = passed;
  return j;
}

// Single-report verification: pass iff max_abs_residual <= threshold.
int finish_single(const CliConfig& c, std::ostream& out, const std::string& title, const std::string& label,
                  const GridReport& report, double default_threshold) {
  const double threshold = c.threshold.value_or(default_threshold);
  const bool passed = report.max_abs_residual <= threshold;
  if (is_json(c)) {
    out << report_json(report, threshold, passed).dump(2) << '\n';
  } else {
    print_report_text(out, title, label, report);
    print_verdict(out, report.max_abs_residual, threshold, passed);
  }
  return passed ? kExitOk : kExitVerificationFailed;
}

// Sweep verification over decreasing eps: residuals must strictly decrease and
// the one at the smallest eps must meet the threshold.
bool sweep_passes(const GridReport& report, double threshold) {
  return !report.residuals.empty() && report.strictly_decreasing() && report.residuals.back() <= threshold;
}

std::vector<double> descending(std::vector<double> eps) {
  std::sort(eps.begin(), eps.end(), std::greater<>());
  return eps;
}

// --- exact sequences ------------------------------------------------------

int print_table(const CliConfig& c, std::ostream& out, const SequenceTable& table, const char* symbol) {
  if (is_json(c)) {
    out << table.to_json().dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& [index, value] : table.values()) {
    out << symbol << '_' << index << " = " << (c.format == "decimal" ? decimal(value.to_double()) : value.to_string())
        << '\n';
  }
  return kExitOk;
}

int cmd_tangent(const CliConfig& c, std::ostream& out) {
  return print_table(c, out, tangent_numbers(c.max_index.value_or(11)), "T");
}

int cmd_cotangent(const CliConfig& c, std::ostream& out) {
  return print_table(c, out, cotangent_numbers(c.max_index.value_or(12)), "S");
}

int cmd_bernoulli(const CliConfig& c, std::ostream& out) {
  const std::uint32_t max_n = c.max_index.value_or(12) / 2;
  if (max_n == 0) throw DomainError("bernoulli: --max-index must be >= 2");
  const auto tangent = tangent_numbers(2 * max_n - 1);
  if (c.route == "tangent") return print_table(c, out, bernoulli_table_from_tangent(max_n, tangent), "B");
  const auto recurrence = bernoulli_recurrence(max_n, bernoulli_from_tangent(2, tangent));
  if (c.route == "all") {
    const auto from_tangent = bernoulli_table_from_tangent(max_n, tangent);
    for (const auto& [index, value] : recurrence.values()) {
      if (from_tangent.at(index) != value) {
        throw RouteDisagreementError("B_" + std::to_string(index) + ": recurrence gives " + value.to_string() +
                                     " but tangent route gives " + from_tangent.at(index).to_string());
      }
    }
  } else if (c.route != "recurrence") {
    throw std::invalid_argument("bernoulli: --route must be recurrence, tangent or all");
  }
  return print_table(c, out, recurrence, "B");
}

// --- zeta ------------------------------------------------------------------

int cmd_zeta(const CliConfig& c, std::ostream& out) {
  if (!c.k) throw std::invalid_argument("zeta: --k is required");
  const std::uint32_t k = *c.k;
  if (k == 0) throw DomainError("zeta: k must be >= 1");
  static const std::map<std::string, std::function<ZetaValue(std::uint32_t)>> routes{
      {"tangent", [](std::uint32_t n) { return zeta_via_tangent(n); }},
      {"cotangent", [](std::uint32_t n) { return zeta_via_cotangent(n); }},
      {"recurrence", [](std::uint32_t n) { return zeta_via_self_recurrence(n); }},
      {"bernoulli", [](std::uint32_t n) { return zeta_via_bernoulli(n); }},
      {"all", [](std::uint32_t n) { return zeta_validated(n); }},
  };
  const auto it = routes.find(c.route);
  if (it == routes.end()) throw std::invalid_argument("zeta: unknown route '" + c.route + "'");
  const ZetaValue value = it->second(k);
  if (is_json(c)) {
    out << to_json(value, c.route == "all").dump() << '\n';
  } else if (c.format == "decimal") {
    out << decimal(value.numeric()) << '\n';
  } else {
    out << render_exact(value) << '\n';
  }
  return kExitOk;
}

int cmd_polygamma_half(const CliConfig& c, std::ostream& out) {
  const std::uint32_t k = c.k.value_or(1);
  const PiMonomial value = polygamma_half_exact(k);
  if (is_json(c)) {
    out << json{{"k", k}, {"order", 2 * k - 1}, {"coeff", value.coeff.to_string()}, {"pi_power", value.pi_power}}.dump()
        << '\n';
  } else if (c.format == "decimal") {
    out << decimal(value.numeric()) << '\n';
  } else {
    out << value.coeff.to_string() << " * pi^" << value.pi_power << '\n';
  }
  return kExitOk;
}

// --- series ------------------------------------------------------------------

int print_estimate(const CliConfig& c, std::ostream& out, const SeriesEstimate& e) {
  if (is_json(c)) {
    out << e.to_json().dump() << '\n';
  } else {
    out << "estimate = " << decimal(e.value_estimate) << '\n'
        << "partial_sum = " << decimal(e.partial_sum) << '\n'
        << "terms = " << e.terms_used << '\n'
        << "bracket = [" << decimal(e.lower()) << ", " << decimal(e.upper()) << "]\n";
  }
  return kExitOk;
}

int cmd_force(const CliConfig& c, std::ostream& out) {
  return print_estimate(c, out, coulomb_force(c.x, c.terms ? c.terms : default_terms(1)));
}

int cmd_potential(const CliConfig& c, std::ostream& out) {
  return print_estimate(c, out, regularized_potential(c.x, c.terms ? c.terms : default_terms(1)));
}

int cmd_verify_series(const CliConfig& c, std::ostream& out) {
  const std::uint32_t max_k = c.k.value_or(3);
  if (max_k == 0) throw DomainError("verify-series: k must be >= 1");
  const auto exact = zeta_validated_range(max_k);
  std::vector<double> points;
  std::vector<double> residuals;
  for (const ZetaValue& z : exact) {
    const std::uint64_t terms = c.terms ? c.terms : default_terms(z.k);
    const double reference = z.numeric();
    const double plain = partial_zeta_sum(z.k, terms, false).value_estimate;
    const double shifted = partial_zeta_sum(z.k, terms, true).value_estimate / (std::pow(4.0, z.k) - 1.0);
    points.push_back(z.k);
    residuals.push_back(std::max(std::abs(plain - reference), std::abs(shifted - reference)));
  }
  return finish_single(c, out, "verify-series: |partial zeta sums (plain, half-shifted) - exact zeta(2k)|", "k",
                       GridReport::from(std::move(points), std::move(residuals)), 1e-8);
}

int cmd_verify_reflection(const CliConfig& c, std::ostream& out) {
  const std::uint32_t k = c.k.value_or(1);
  const auto grid = grid_or(c, "0.1:0.9:0.1");
  return finish_single(c, out, "verify-reflection: |psi_{2k-1}(1-x) + psi_{2k-1}(x) + pi d^{2k-1} cot(pi x)|", "x",
                       reflection_check(k, grid, c.terms), 1e-5);
}

// --- quadrature -----------------------------------------------------------------

int cmd_verify_pv(const CliConfig& c, std::ostream& out) {
  const auto grid = grid_or(c, "0.1:0.9:0.05");
  const GridReport closed = reflection_closed_form_check(grid);
  const GridReport forms = representation_check(grid);
  std::vector<double> combined(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) combined[i] = std::max(closed.residuals[i], forms.residuals[i]);
  return finish_single(c, out, "verify-pv: max(|phi_PV(x) + pi cot(pi x)|, |phi_PV(x) - phi_unit(x)|)", "x",
                       GridReport::from(grid, std::move(combined)), 1e-8);
}

int cmd_verify_plemelj(const CliConfig& c, std::ostream& out) {
  const auto xs = grid_or(c, "0.3:0.7:0.2");
  const auto eps = descending(list_or(c.eps_list, {1e-1, 1e-2, 1e-3, 1e-4}));
  const double threshold = c.threshold.value_or(0.05);
  bool all_passed = true;
  json reports = json::array();
  for (double x : xs) {
    const GridReport report = plemelj_sweep(x, eps);
    const bool passed = sweep_passes(report, threshold);
    all_passed = all_passed && passed;
    if (is_json(c)) {
      json j = report_json(report, threshold, passed);
      j["x"] = x;
      reports.push_back(std::move(j));
    } else {
      print_report_text(out, fmt::format("verify-plemelj: |Im phi_eps(x) - pi| at x = {}", decimal(x)), "eps", report);
      out << fmt::format("strictly decreasing: {}\n", report.strictly_decreasing() ? "yes" : "no");
      print_verdict(out, report.residuals.back(), threshold, passed);
    }
  }
  if (is_json(c)) out << json{{"reports", reports}, {"passed", all_passed}}.dump(2) << '\n';
  return all_passed ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_fubini(const CliConfig& c, std::ostream& out) {
  const auto ys = list_or(c.y_list, {0.5, 2.0, 5.0});
  const auto eps = descending(list_or(c.eps_list, {1e-2, 1e-3, 1e-4}));
  const double threshold = c.threshold.value_or(1e-2);
  bool all_passed = true;
  json reports = json::array();
  for (double y : ys) {
    const GridReport report = fubini_inner_check(y, eps);
    const bool passed = sweep_passes(report, threshold);
    all_passed = all_passed && passed;
    if (is_json(c)) {
      json j = report_json(report, threshold, passed);
      j["y"] = y;
      reports.push_back(std::move(j));
    } else {
      print_report_text(out, fmt::format("verify-fubini: |inner integral + ln y/(1-y)| at y = {}", decimal(y)), "eps",
                        report);
      out << fmt::format("strictly decreasing: {}\n", report.strictly_decreasing() ? "yes" : "no");
      print_verdict(out, report.residuals.back(), threshold, passed);
    }
  }
  if (is_json(c)) out << json{{"reports", reports}, {"passed", all_passed}}.dump(2) << '\n';
  return all_passed ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_ode(const CliConfig& c, std::ostream& out) {
  const auto grid = grid_or(c, "0.2:0.8:0.05");
  const double ode_threshold = c.threshold.value_or(1e-4);
  const double product_threshold = c.product_threshold.value_or(1e-7);
  const GridReport ode = ode_residual(grid, c.h);
  const GridReport product = product_identity_check(grid);
  const bool ode_ok = ode.max_abs_residual <= ode_threshold;
  const bool product_ok = product.max_abs_residual <= product_threshold;
  if (is_json(c)) {
    out << json{{"ode", report_json(ode, ode_threshold, ode_ok)},
                {"product", report_json(product, product_threshold, product_ok)},
                {"h", c.h},
                {"passed", ode_ok && product_ok}}
               .dump(2)
        << '\n';
  } else {
    print_report_text(out, fmt::format("verify-ode: |phi'(x) - pi^2 - phi(x)^2|, h = {}", decimal(c.h)), "x", ode);
    print_verdict(out, ode.max_abs_residual, ode_threshold, ode_ok);
    print_report_text(out, "verify-ode: |-I(x) - pi^2 - phi(x)^2| (log-kernel product identity)", "x", product);
    print_verdict(out, product.max_abs_residual, product_threshold, product_ok);
  }
  return ode_ok && product_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_table(const CliConfig& c, std::ostream& out) {
  TableFormat format = TableFormat::Markdown;
  if (c.format == "csv") format = TableFormat::Csv;
  if (c.format == "json") format = TableFormat::Json;
  emit_table(c.k.value_or(10), format, out);
  return kExitOk;
}

int dispatch(const CliConfig& c, std::ostream& out) {
  static const std::map<std::string, int (*)(const CliConfig&, std::ostream&)> commands{
      {"tangent", cmd_tangent},
      {"cotangent", cmd_cotangent},
      {"bernoulli", cmd_bernoulli},
      {"zeta", cmd_zeta},
      {"polygamma-half", cmd_polygamma_half},
      {"force", cmd_force},
      {"potential", cmd_potential},
      {"verify-series", cmd_verify_series},
      {"verify-reflection", cmd_verify_reflection},
      {"verify-pv", cmd_verify_pv},
      {"verify-plemelj", cmd_verify_plemelj},
      {"verify-ode", cmd_verify_ode},
      {"verify-fubini", cmd_verify_fubini},
      {"table", cmd_table},
  };
  const auto it = commands.find(c.subcommand);
  if (it == commands.end()) throw std::invalid_argument("unknown subcommand '" + c.subcommand + "'");
  return it->second(c, out);
}

void write_output(const CliConfig& c, const std::string& text, std::ostream& out) {
  if (!c.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*c.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + *c.output_path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + *c.output_path + "'");
}

}  // namespace

void emit_table(std::uint32_t max_k, TableFormat format, std::ostream& out) {
  if (max_k == 0) throw DomainError("table: max_k must be >= 1");
  const auto zetas = zeta_validated_range(max_k);
  const auto tangent = tangent_numbers(2 * max_k - 1);
  const auto bernoulli = bernoulli_recurrence(max_k, bernoulli_from_tangent(2, tangent));

  if (format == TableFormat::Json) {
    json rows = json::array();
    for (const ZetaValue& z : zetas) {
      rows.push_back({{"k", z.k},
                      {"two_k", z.pi_power()},
                      {"coeff", z.coeff.to_string()},
                      {"decimal", decimal(z.numeric())},
                      {"tangent", tangent.at(2 * z.k - 1).to_string()},
                      {"bernoulli", bernoulli.at(2 * z.k).to_string()}});
    }
    out << rows.dump(2) << '\n';
  } else if (format == TableFormat::Csv) {
    out << "k,two_k,coeff,decimal,tangent,bernoulli\n";
    for (const ZetaValue& z : zetas) {
      out << fmt::format("{},{},{},{},{},{}\n", z.k, z.pi_power(), z.coeff.to_string(), decimal(z.numeric()),
                         tangent.at(2 * z.k - 1).to_string(), bernoulli.at(2 * z.k).to_string());
    }
  } else {
    out << "| k | 2k | zeta(2k) | decimal | T_{2k-1} | B_{2k} |\n";
    out << "|---|----|----------|---------|----------|--------|\n";
    for (const ZetaValue& z : zetas) {
      out << fmt::format("| {} | {} | {} | {} | {} | {} |\n", z.k, z.pi_power(), render_exact(z), decimal(z.numeric()),
                         tangent.at(2 * z.k - 1).to_string(), bernoulli.at(2 * z.k).to_string());
    }
  }
  if (!out) throw IoError("failed writing table");
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buffer;
    const int status = dispatch(config, buffer);
    write_output(config, buffer.str(), out);
    return status;
  } catch (const RouteDisagreementError& e) {
    err << "route disagreement: " << e.what() << '\n';
    return kExitRouteDisagreement;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\nusage: zeta_forge " << config.subcommand << " --help\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\nusage: zeta_forge " << config.subcommand << " --help\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\nusage: zeta_forge " << config.subcommand << " --help\n";
    return kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact even zeta values and numerical checks of the digamma reflection formula", "zeta_forge"};
  app.require_subcommand(1);
  CliConfig config;

  const std::vector<std::string> exact_formats{"exact", "decimal", "json"};
  const std::vector<std::string> report_formats{"exact", "text", "json"};

  auto format_option = [&config](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto output_option = [&config](CLI::App* sub) {
    sub->add_option("-o,--output", config.output_path, "Write output to this file instead of stdout");
  };
  auto threshold_option = [&config](CLI::App* sub) {
    sub->add_option("--threshold", config.threshold, "Pass threshold for the residual")->check(CLI::NonNegativeNumber);
  };

  for (const char* name : {"tangent", "cotangent", "bernoulli"}) {
    auto* sub = app.add_subcommand(name, std::string("Exact ") + name + " numbers up to --max-index");
    sub->add_option("--max-index", config.max_index, "Largest index to compute");
    if (std::string(name) == "bernoulli") {
      sub->add_option("--route", config.route, "recurrence, tangent, or all (cross-checked)")
          ->check(CLI::IsMember({"recurrence", "tangent", "all"}));
    }
    format_option(sub, exact_formats);
    output_option(sub);
  }

  auto* zeta = app.add_subcommand("zeta", "Exact zeta(2k) as a rational multiple of pi^{2k}");
  zeta->add_option("--k", config.k, "Positive integer k")->required()->check(CLI::Range(1u, 1000000u));
  zeta->add_option("--route", config.route, "tangent, cotangent, recurrence, bernoulli, or all (validated)")
      ->check(CLI::IsMember({"tangent", "cotangent", "recurrence", "bernoulli", "all"}));
  format_option(zeta, exact_formats);
  output_option(zeta);

  auto* polygamma = app.add_subcommand("polygamma-half", "Exact psi_{2k-1}(1/2)");
  polygamma->add_option("--k", config.k, "Positive integer k")->check(CLI::PositiveNumber);
  format_option(polygamma, exact_formats);
  output_option(polygamma);

  for (const char* name : {"force", "potential"}) {
    auto* sub = app.add_subcommand(
        name, std::string(name) == "force" ? "Lattice force F(x) with tail bracket" : "Regularized potential U_R(x)");
    sub->add_option("--x", config.x, "Evaluation point in [0, 1)");
    sub->add_option("--terms", config.terms, "Number of series terms")->check(CLI::PositiveNumber);
    format_option(sub, {"exact", "decimal", "json"});
    output_option(sub);
  }

  auto* verify_series = app.add_subcommand("verify-series", "Partial zeta sums against exact zeta(2k), k = 1..K");
  verify_series->add_option("--k", config.k, "Largest k (default 3)")->check(CLI::PositiveNumber);
  verify_series->add_option("--terms", config.terms, "Number of series terms (default per k)");

  auto* verify_reflection = app.add_subcommand("verify-reflection", "Polygamma reflection formula from series");
  verify_reflection->add_option("--k", config.k, "Positive integer k (default 1)")->check(CLI::PositiveNumber);
  verify_reflection->add_option("--terms", config.terms, "Number of series terms (default per k)");

  auto* verify_pv = app.add_subcommand("verify-pv", "Principal-value phi(x) against -pi cot(pi x)");
  auto* verify_plemelj = app.add_subcommand("verify-plemelj", "Sokhotski-Plemelj eps-sweep of the phi integral");
  auto* verify_ode = app.add_subcommand("verify-ode", "phi' = pi^2 + phi^2 and the log-kernel product identity");
  verify_ode->set_help_flag("--help", "Print this help message and exit");
  verify_ode->add_option("--h", config.h, "Finite-difference step")->check(CLI::Range(1e-6, 1e-2));
  verify_ode->add_option("--product-threshold", config.product_threshold, "Threshold for the product identity");
  auto* verify_fubini = app.add_subcommand("verify-fubini", "Inner integral of the Fubini product identity");
  verify_fubini->add_option("--y-list", config.y_list, "Comma-separated y values")->delimiter(',');

  for (auto* sub : {verify_reflection, verify_pv, verify_plemelj, verify_ode}) {
    sub->add_option("--grid", config.grid, "start:stop:step (inclusive)");
  }
  for (auto* sub : {verify_plemelj, verify_fubini}) {
    sub->add_option("--eps-list", config.eps_list, "Comma-separated eps values")->delimiter(',');
  }
  for (auto* sub : {verify_series, verify_reflection, verify_pv, verify_plemelj, verify_ode, verify_fubini}) {
    threshold_option(sub);
    format_option(sub, report_formats);
    output_option(sub);
  }

  auto* table = app.add_subcommand("table", "Table of zeta(2k), T_{2k-1} and B_{2k} for k = 1..K");
  table->add_option("--k", config.k, "Largest k (default 10)");
  format_option(table, {"exact", "markdown", "csv", "json"});
  output_option(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return run(config, out, err);
}

}  // namespace zeta_forge::cli
