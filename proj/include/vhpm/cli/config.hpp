#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vhpm/action.hpp"
#include "vhpm/audit.hpp"
#include "vhpm/oscillator.hpp"

namespace vhpm::cli {

/// Bad configuration: unreadable file, unknown key, malformed value. Maps to exit code 2.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv, md };

struct RunConfig {
  // [problem]
  double omega0_sq = 1.0;
  double epsilon = 1.0;
  double amplitude = 1.0;
  Polynomial nonlinearity = Polynomial::monomial(3);

  // [space]
  std::string space = "al-single";  // al-single | al-double | custom
  std::vector<BasisShape> custom_shapes;

  // [solver]
  std::optional<Bracket> bracket;
  int grid_points = 512;
  double grad_tol = 1e-10;
  double triviality_tol = 1e-10;
  RhoDefinition rho = RhoDefinition::eps_a2;
  PeriodConvention convention = PeriodConvention::moving_limit;

  // [output]
  std::optional<OutputFormat> format;  // per-command default when unset
  std::string out_path;
  bool fail_on_findings = false;

  // [sweep]
  std::vector<double> eps_grid;
  std::vector<double> amp_grid;
};

/// One `key = value` entry of the config file, with its source position.
struct ConfigEntry {
  std::string value;
  int line;
};

/// section -> key -> entry. Keys outside any section land in section "".
using ConfigTable = std::map<std::string, std::map<std::string, ConfigEntry>>;

ConfigTable parse_config_text(const std::string& text, const std::string& source);

/// Applies a parsed table onto `cfg`; unknown sections or keys are errors.
void apply_config(const ConfigTable& table, const std::string& source, RunConfig& cfg);

RunConfig load_config_file(const std::string& path);

// Value parsers; `field` names the option in diagnostics.
double parse_number(const std::string& text, const std::string& field);
Polynomial parse_polynomial(const std::string& text, const std::string& field);
std::vector<BasisShape> parse_shapes(const std::string& text, const std::string& field);
Bracket parse_bracket(const std::string& text, const std::string& field);
std::vector<double> parse_list(const std::string& text, const std::string& field);
OutputFormat parse_format(const std::string& text, const std::string& field);
RhoDefinition parse_rho(const std::string& text, const std::string& field);
PeriodConvention parse_convention(const std::string& text, const std::string& field);

OscillatorProblem build_problem(const RunConfig& cfg);
TrialSpace build_space(const RunConfig& cfg);
AuditOptions build_audit_options(const RunConfig& cfg);

std::string to_string(OutputFormat format);

}  // namespace vhpm::cli
