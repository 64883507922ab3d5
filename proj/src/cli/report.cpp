#include "vhpm/cli/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace vhpm::cli {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json vector_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

std::string csv_quote(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string preset_name(TrialPreset preset) {
  switch (preset) {
    case TrialPreset::al_single:
      return "AL_SINGLE";
    case TrialPreset::al_double:
      return "AL_DOUBLE";
    case TrialPreset::custom:
    default:
      return "custom";
  }
}

// Which inconsistency each finding code instantiates.
std::string finding_claim(const std::string& code) {
  if (code == "TRIVIAL_CORRECTION")
    return "The variational conditions return a correction that vanishes identically.";
  if (code == "BC_VIOLATION")
    return "The trial correction cannot satisfy u1(0) = 0 and u1'(0) = 0 at the same time.";
  if (code == "AMPLITUDE_MISMATCH")
    return "The corrected trajectory starts at a displacement different from the amplitude used "
           "to derive the frequency.";
  if (code == "CLOSED_FORM_MISMATCH")
    return "The numerical stationary point disagrees with the published closed form.";
  if (code == "FREQ_ACCURACY")
    return "The approximate frequencies are close to, but not equal to, the exact frequency.";
  if (code == "NO_STATIONARY_POINT")
    return "The action has no stationary point in the searched frequency range.";
  return "";
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

json to_json(const TrigSeries& s) {
  json cos = json::array(), sin = json::array();
  for (const auto& [k, c] : s.cos_terms()) cos.push_back({k, c});
  for (const auto& [k, c] : s.sin_terms()) sin.push_back({k, c});
  return {{"base_freq", s.base_freq()}, {"cos", cos}, {"sin", sin}};
}

TrigSeries trig_series_from_json(const json& j) {
  TrigSeries s(j.at("base_freq").get<double>());
  for (const auto& term : j.at("cos")) s.add_cos(term.at(0).get<int>(), term.at(1).get<double>());
  for (const auto& term : j.at("sin")) s.add_sin(term.at(0).get<int>(), term.at(1).get<double>());
  return s;
}

json to_json(const OscillatorProblem& p) {
  json poly = json::object();
  for (const auto& [power, c] : p.nonlinearity.coefficients()) poly[std::to_string(power)] = c;
  return {{"omega0_sq", p.omega0_sq},
          {"epsilon", p.epsilon},
          {"amplitude", p.amplitude},
          {"nonlinearity", poly},
          {"duffing", is_duffing(p)}};
}

json to_json(const TrialSpace& space) {
  json shapes = json::array();
  for (const auto& shape : space.basis()) {
    json terms = json::array();
    for (const auto& [k, c] : shape.cos_harmonics) terms.push_back({k, c});
    shapes.push_back(terms);
  }
  return {{"name", space.name()}, {"preset", preset_name(identify_preset(space))}, {"shapes", shapes}};
}

json to_json(const StationaryPoint& sp) {
  return {{"omega", sp.omega},
          {"B", vector_json(sp.amplitudes)},
          {"J", sp.action},
          {"grad_norm", sp.grad_norm},
          {"branch", sp.branch},
          {"continued_from_linear", sp.continued_from_linear}};
}

json to_json(const ExactResult& r) {
  json j{{"method", to_string(r.method)},
         {"period", r.period},
         {"frequency", r.frequency},
         {"est_error", r.est_error}};
  if (r.trajectory) {
    j["quarter_time"] = r.trajectory->quarter_time;
    j["energy_drift"] = r.trajectory->energy_drift;
    j["half_period_value"] = r.trajectory->half_period_value;
  }
  return j;
}

json analysis_document(const OscillatorProblem& p, const TrialSpace& space,
                       const std::vector<StationaryPoint>& points) {
  json pts = json::array();
  for (const auto& sp : points) pts.push_back(to_json(sp));
  return {{"problem", to_json(p)},
          {"trial_space", to_json(space)},
          {"stationary_points", pts},
          {"versions", {{"schema", kSchemaVersion}}}};
}

json audit_document(const AuditReport& r, const TrialSpace& space) {
  json doc = analysis_document(r.problem, space, r.stationary_points);

  json freq = json::array();
  for (const FreqRow& row : r.freq_table) {
    freq.push_back({{"source", row.source},
                    {"omega", optional_number(row.omega)},
                    {"rel_err_vs_exact", optional_number(row.rel_err_vs_exact)},
                    {"available", row.omega.has_value()},
                    {"note", row.note}});
  }
  json findings = json::array();
  for (const Finding& f : r.findings) {
    json values = json::object();
    for (const auto& [name, v] : f.values) values[name] = v;
    findings.push_back({{"code", f.code},
                        {"message", f.message},
                        {"claim", finding_claim(f.code)},
                        {"values", values}});
  }
  json audit{
      {"bc", {{"u1_at_0", r.bc_u1_at_0}, {"du1_at_0", r.bc_du1_at_0}}},
      {"trivial", {{"flag", r.trivial}, {"threshold", r.trivial_threshold}}},
      {"amplitude_mismatch", r.amplitude_mismatch},
      {"u_app_at_0", r.u_app_at_0},
      {"rho", {{"value", r.rho}, {"definition", to_string(r.rho_definition)}}},
      {"selected", r.selected ? to_json(*r.selected) : json(nullptr)},
      {"correction", r.correction ? to_json(*r.correction) : json(nullptr)},
      {"freq_table", freq},
      {"closed_form_residuals",
       {{"omega_vs_eq13", optional_number(r.closed_form.omega_vs_eq13)},
        {"omega_vs_eq15", optional_number(r.closed_form.omega_vs_eq15)},
        {"B_vs_eq16", optional_number(r.closed_form.b_vs_eq16)},
        {"u1_at_0_formula", optional_number(r.closed_form.u1_at_0_formula)},
        {"u1_at_0_vs_formula", optional_number(r.closed_form.u1_at_0_vs_formula)}}},
      {"period_conventions",
       {{"omega_fixed_limit", optional_number(r.conventions.omega_fixed_limit)},
        {"d_omega_fixed_at_solution", optional_number(r.conventions.d_omega_fixed_at_solution)}}},
      {"findings", findings}};
  doc["audit"] = audit;
  return doc;
}

std::string analysis_csv(const std::vector<StationaryPoint>& points) {
  Eigen::Index width = 0;
  for (const auto& sp : points) width = std::max(width, sp.amplitudes.size());
  std::ostringstream os;
  os << "omega,J,grad_norm,branch,continued_from_linear";
  for (Eigen::Index i = 0; i < width; ++i) os << ",B" << i + 1;
  os << '\n';
  for (const auto& sp : points) {
    os << format_double(sp.omega) << ',' << format_double(sp.action) << ','
       << format_double(sp.grad_norm) << ',' << sp.branch << ','
       << (sp.continued_from_linear ? "true" : "false");
    for (Eigen::Index i = 0; i < width; ++i)
      os << ',' << (i < sp.amplitudes.size() ? format_double(sp.amplitudes[i]) : "");
    os << '\n';
  }
  return os.str();
}

std::string analysis_markdown(const OscillatorProblem& p, const TrialSpace& space,
                              const std::vector<StationaryPoint>& points) {
  std::ostringstream os;
  os << "# Stationary points\n\n"
     << "Problem: omega0^2 = " << format_double(p.omega0_sq) << ", eps = " << format_double(p.epsilon)
     << ", A = " << format_double(p.amplitude) << ", f = {" << p.nonlinearity.to_string() << "}\n\n"
     << "Trial space: " << space.name() << " (" << space.size() << (space.size() == 1 ? " shape)\n\n" : " shapes)\n\n")
     << "| omega | B | J | grad | branch |\n|---|---|---|---|---|\n";
  for (const auto& sp : points) {
    os << "| " << format_double(sp.omega) << " | ";
    for (Eigen::Index i = 0; i < sp.amplitudes.size(); ++i)
      os << (i ? ", " : "") << format_double(sp.amplitudes[i]);
    os << " | " << format_double(sp.action) << " | " << format_double(sp.grad_norm) << " | "
       << sp.branch << " |\n";
  }
  if (points.empty()) os << "\nNo stationary point in the bracket.\n";
  return os.str();
}

std::string audit_csv(const AuditReport& r) {
  std::ostringstream os;
  os << "source,omega,rel_err_vs_exact,note\n";
  for (const FreqRow& row : r.freq_table)
    os << row.source << ',' << optional_cell(row.omega) << ',' << optional_cell(row.rel_err_vs_exact)
       << ',' << csv_quote(row.note) << '\n';
  return os.str();
}

std::string audit_markdown(const AuditReport& r) {
  std::ostringstream os;
  os << "# Audit: " << r.space_name << "\n\n"
     << "Problem: omega0^2 = " << format_double(r.problem.omega0_sq)
     << ", eps = " << format_double(r.problem.epsilon) << ", A = " << format_double(r.problem.amplitude)
     << ", f = {" << r.problem.nonlinearity.to_string() << "}, rho = " << format_double(r.rho) << " ("
     << to_string(r.rho_definition) << ")\n\n";
  if (r.selected) {
    os << "Selected stationary point: omega = " << format_double(r.selected->omega) << ", B = [";
    for (Eigen::Index i = 0; i < r.selected->amplitudes.size(); ++i)
      os << (i ? ", " : "") << format_double(r.selected->amplitudes[i]);
    os << "], branch " << r.selected->branch << "\n\n";
  }
  os << "## Boundary conditions\n\n"
     << "- u1(0) = " << format_double(r.bc_u1_at_0) << "\n"
     << "- u1'(0) = " << format_double(r.bc_du1_at_0) << "\n"
     << "- u_app(0) - A = " << format_double(r.amplitude_mismatch) << "\n\n"
     << "## Frequencies\n\n| source | omega | rel. error vs exact |\n|---|---|---|\n";
  for (const FreqRow& row : r.freq_table)
    os << "| " << row.source << " | " << (row.omega ? format_double(*row.omega) : "unavailable")
       << " | " << optional_cell(row.rel_err_vs_exact) << " |\n";
  os << "\n## Findings\n";
  if (r.findings.empty()) os << "\nNone.\n";
  for (const Finding& f : r.findings) {
    os << "\n### " << f.code << "\n\n> " << finding_claim(f.code) << "\n\n" << f.message << "\n";
    if (!f.values.empty()) {
      os << '\n';
      for (const auto& [name, v] : f.values) os << "- " << name << " = " << format_double(v) << '\n';
    }
  }
  return os.str();
}

SweepRow sweep_row(double eps, double amplitude, const AuditReport& r) {
  SweepRow row{eps, amplitude, {}, {}, {}, {}, {}, {}, {}, r.trivial, std::nullopt};
  for (const FreqRow& fr : r.freq_table) {
    if (fr.source == "solver") {
      row.omega_solver = fr.omega;
      row.rel_err_solver = fr.rel_err_vs_exact;
    } else if (fr.source == "eq13") {
      row.omega_eq13 = fr.omega;
      row.rel_err_eq13 = fr.rel_err_vs_exact;
    } else if (fr.source == "eq15") {
      row.omega_eq15 = fr.omega;
      row.rel_err_eq15 = fr.rel_err_vs_exact;
    } else if (fr.source == "exact") {
      row.omega_exact = fr.omega;
    }
  }
  if (r.selected) row.u1_at_0 = r.bc_u1_at_0;
  return row;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kSweepHeader << '\n';
  for (const SweepRow& row : rows) {
    os << format_double(row.eps) << ',' << format_double(row.amplitude) << ','
       << optional_cell(row.omega_solver) << ',' << optional_cell(row.omega_eq13) << ','
       << optional_cell(row.omega_eq15) << ',' << optional_cell(row.omega_exact) << ','
       << optional_cell(row.rel_err_solver) << ',' << optional_cell(row.rel_err_eq13) << ','
       << optional_cell(row.rel_err_eq15) << ',' << (row.trivial ? "true" : "false") << ','
       << optional_cell(row.u1_at_0) << '\n';
  }
  return os.str();
}

}  // namespace vhpm::cli
