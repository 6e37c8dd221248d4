#pragma once

#include "fock/errors.hpp"
#include "fock/special_functions.hpp"
#include "fock/symbols.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fock::cli {

/// Invalid or incomplete experiment configuration (exit code 2).
class ConfigError : public Error {
public:
  using Error::Error;
};

struct Tolerances {
  double quad_abs = 1e-14;
  double quad_rel = 1e-12;
  double verdict_multiplier = 3.0;
};

struct OutputSpec {
  std::string directory = "fock_out";
  bool json = true;
  bool csv = true;
};

/// Parsed experiment file. Fields a command needs but the file omits are
/// reported by require_* at command time, so one file can drive several
/// commands.
struct ExperimentConfig {
  std::string source; ///< path the config was read from
  std::vector<double> s_values = {0.0};
  std::optional<int> N;
  std::optional<int> k_max;
  std::optional<int> j_max;
  std::optional<SymbolSpec> u;
  std::optional<SymbolSpec> v;
  Tolerances tolerances;
  OutputSpec output;
  std::optional<bool> assert_commutation;
  std::optional<std::string> samples; ///< resolved relative to the config file

  QuadratureSpec quadrature() const;

  int require_N() const;
  int require_k_max() const;
  const SymbolSpec &require_u() const;
  const SymbolSpec &require_v() const;
  const std::string &require_samples() const;
};

ExperimentConfig load_config(const std::string &path);
ExperimentConfig parse_config(const std::string &text, const std::string &source = "<string>");

/// "json", "csv" or "both".
void apply_format(OutputSpec &out, const std::string &format);

} // namespace fock::cli
