#include "vhpm/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace vhpm::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

int parse_int(const std::string& text, const std::string& field) {
  const double v = parse_number(text, field);
  if (v != std::floor(v) || v < 2 || v > 1e6)
    throw config_error(field + ": expected an integer >= 2, got '" + text + "'");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& text, const std::string& field) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw config_error(field + ": expected true/false, got '" + text + "'");
}

}  // namespace

double parse_number(const std::string& text, const std::string& field) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw config_error(field + ": expected a number, got '" + text + "'");
  }
  if (used != t.size() || !std::isfinite(v))
    throw config_error(field + ": expected a number, got '" + text + "'");
  return v;
}

Polynomial parse_polynomial(const std::string& text, const std::string& field) {
  std::map<int, double> coeffs;
  const auto terms = split(text, ',');
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = field + " term " + std::to_string(i + 1);
    const auto pc = split(terms[i], ':');
    if (pc.size() != 2)
      throw config_error(where + ": expected POWER:COEFF, got '" + terms[i] + "'");
    const double power = parse_number(pc[0], where + " power");
    if (power != std::floor(power) || power < 0)
      throw config_error(where + ": power must be a non-negative integer, got '" + pc[0] + "'");
    coeffs[static_cast<int>(power)] += parse_number(pc[1], where + " coefficient");
  }
  return Polynomial(std::move(coeffs));
}

std::vector<BasisShape> parse_shapes(const std::string& text, const std::string& field) {
  std::vector<BasisShape> shapes;
  const auto groups = split(text, ';');
  for (std::size_t s = 0; s < groups.size(); ++s) {
    BasisShape shape;
    const auto terms = split(groups[s], ',');
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string where =
          field + " shape " + std::to_string(s + 1) + " term " + std::to_string(i + 1);
      const auto hc = split(terms[i], ':');
      if (hc.size() != 2)
        throw config_error(where + ": expected HARMONIC:COEFF, got '" + terms[i] + "'");
      const double k = parse_number(hc[0], where + " harmonic");
      if (k != std::floor(k) || k < 0 || k > TrigSeries::kMaxHarmonic)
        throw config_error(where + ": harmonic must be an integer in [0, " +
                           std::to_string(TrigSeries::kMaxHarmonic) + "], got '" + hc[0] + "'");
      shape.cos_harmonics[static_cast<int>(k)] += parse_number(hc[1], where + " coefficient");
    }
    shapes.push_back(std::move(shape));
  }
  return shapes;
}

Bracket parse_bracket(const std::string& text, const std::string& field) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw config_error(field + ": expected LO:HI, got '" + text + "'");
  const Bracket b{parse_number(parts[0], field + " low"), parse_number(parts[1], field + " high")};
  if (!(b.lo > 0.0) || !(b.hi > b.lo))
    throw config_error(field + ": need 0 < LO < HI, got '" + text + "'");
  return b;
}

std::vector<double> parse_list(const std::string& text, const std::string& field) {
  std::vector<double> values;
  const auto items = split(text, ',');
  for (std::size_t i = 0; i < items.size(); ++i)
    values.push_back(parse_number(items[i], field + " item " + std::to_string(i + 1)));
  if (values.empty()) throw config_error(field + ": empty list");
  return values;
}

OutputFormat parse_format(const std::string& text, const std::string& field) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "md") return OutputFormat::md;
  throw config_error(field + ": expected json, csv or md, got '" + text + "'");
}

RhoDefinition parse_rho(const std::string& text, const std::string& field) {
  if (text == "eps*A^2") return RhoDefinition::eps_a2;
  if (text == "eps") return RhoDefinition::eps;
  throw config_error(field + ": expected eps*A^2 or eps, got '" + text + "'");
}

PeriodConvention parse_convention(const std::string& text, const std::string& field) {
  if (text == "moving") return PeriodConvention::moving_limit;
  if (text == "fixed") return PeriodConvention::fixed_limit;
  throw config_error(field + ": expected moving or fixed, got '" + text + "'");
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::md:
      return "md";
    case OutputFormat::json:
    default:
      return "json";
  }
}

ConfigTable parse_config_text(const std::string& text, const std::string& source) {
  ConfigTable table;
  std::istringstream is(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    const std::string where = source + ":" + std::to_string(line);
    if (s.front() == '[') {
      if (s.back() != ']') throw config_error(where + ": unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw config_error(where + ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    if (key.empty()) throw config_error(where + ": empty key");
    std::string value = trim(s.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (table[section].contains(key))
      throw config_error(where + ": duplicate key '" + key + "' in [" + section + "]");
    table[section][key] = {value, line};
  }
  return table;
}

void apply_config(const ConfigTable& table, const std::string& source, RunConfig& cfg) {
  for (const auto& [section, entries] : table) {
    for (const auto& [key, entry] : entries) {
      const std::string field = source + ":" + std::to_string(entry.line) + ": [" + section + "] " + key;
      const std::string& v = entry.value;
      if (section == "problem") {
        if (key == "preset") {
          if (v != "duffing") throw config_error(field + ": unknown preset '" + v + "'");
          cfg.omega0_sq = 1.0;
          cfg.nonlinearity = Polynomial::monomial(3);
        } else if (key == "omega0sq") cfg.omega0_sq = parse_number(v, field);
        else if (key == "eps") cfg.epsilon = parse_number(v, field);
        else if (key == "A") cfg.amplitude = parse_number(v, field);
        else if (key == "poly") cfg.nonlinearity = parse_polynomial(v, field);
        else throw config_error(field + ": unknown key");
      } else if (section == "space") {
        if (key == "name") cfg.space = v;
        else if (key == "shapes") cfg.custom_shapes = parse_shapes(v, field);
        else throw config_error(field + ": unknown key");
      } else if (section == "solver") {
        if (key == "bracket") cfg.bracket = parse_bracket(v, field);
        else if (key == "grid_points") cfg.grid_points = parse_int(v, field);
        else if (key == "grad_tol") cfg.grad_tol = parse_number(v, field);
        else if (key == "triviality_tol") cfg.triviality_tol = parse_number(v, field);
        else if (key == "rho") cfg.rho = parse_rho(v, field);
        else if (key == "convention") cfg.convention = parse_convention(v, field);
        else throw config_error(field + ": unknown key");
      } else if (section == "output") {
        if (key == "format") cfg.format = parse_format(v, field);
        else if (key == "path") cfg.out_path = v;
        else if (key == "fail_on_findings") cfg.fail_on_findings = parse_bool(v, field);
        else throw config_error(field + ": unknown key");
      } else if (section == "sweep") {
        if (key == "eps") cfg.eps_grid = parse_list(v, field);
        else if (key == "A") cfg.amp_grid = parse_list(v, field);
        else throw config_error(field + ": unknown key");
      } else {
        throw config_error(source + ":" + std::to_string(entry.line) + ": unknown section [" +
                           section + "]");
      }
    }
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error(path + ": cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  RunConfig cfg;
  apply_config(parse_config_text(ss.str(), path), path, cfg);
  return cfg;
}

OscillatorProblem build_problem(const RunConfig& cfg) {
  try {
    return make_oscillator(cfg.omega0_sq, cfg.epsilon, cfg.nonlinearity, cfg.amplitude);
  } catch (const std::invalid_argument& e) {
    throw config_error(std::string("problem: ") + e.what());
  }
}

TrialSpace build_space(const RunConfig& cfg) {
  if (cfg.space == "al-single") return al_single();
  if (cfg.space == "al-double") return al_double();
  if (cfg.space == "custom") {
    if (cfg.custom_shapes.empty())
      throw config_error("space: 'custom' needs shapes ([space] shapes or --shapes)");
    try {
      return TrialSpace("custom", cfg.custom_shapes);
    } catch (const std::invalid_argument& e) {
      throw config_error(std::string("space: ") + e.what());
    }
  }
  throw config_error("space: expected al-single, al-double or custom, got '" + cfg.space + "'");
}

AuditOptions build_audit_options(const RunConfig& cfg) {
  AuditOptions opts;
  opts.solver.bracket = cfg.bracket;
  opts.solver.grid_points = cfg.grid_points;
  opts.solver.grad_tol = cfg.grad_tol;
  opts.solver.triviality_tol = cfg.triviality_tol;
  opts.solver.convention = cfg.convention;
  opts.bc_tol = cfg.triviality_tol;
  opts.rho = cfg.rho;
  return opts;
}

}  // namespace vhpm::cli
