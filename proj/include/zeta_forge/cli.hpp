#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zeta_forge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRouteDisagreement = 3;
inline constexpr int kExitIo = 4;

enum class TableFormat { Markdown, Csv, Json };

struct CliConfig {
  std::string subcommand;
  std::optional<std::uint32_t> k;          // per-subcommand default when unset
  std::optional<std::uint32_t> max_index;
  std::string route = "all";
  std::string format = "exact";
  std::uint64_t terms = 0;  // 0: per-operation default
  std::string grid;         // "start:stop:step"; empty: per-subcommand default
  std::vector<double> eps_list;
  std::vector<double> y_list;
  double x = 0.5;
  double h = 1e-3;
  std::optional<double> threshold;
  std::optional<double> product_threshold;
  std::optional<std::string> output_path;
};

/// Rows (k, 2k, q_k, decimal value, T_{2k-1}, B_{2k}) for k = 1 ... max_k.
/// Throws DomainError for max_k = 0 and RouteDisagreementError if the exact routes disagree.
void emit_table(std::uint32_t max_k, TableFormat format, std::ostream& out);

/// Executes a parsed configuration and returns the process exit status.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zeta_forge::cli
