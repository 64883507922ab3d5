#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vhpm/action.hpp"
#include "vhpm/audit.hpp"
#include "vhpm/exact_period.hpp"
#include "vhpm/trig_series.hpp"

namespace vhpm::cli {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const TrigSeries& s);
nlohmann::json to_json(const OscillatorProblem& p);
nlohmann::json to_json(const TrialSpace& space);
nlohmann::json to_json(const StationaryPoint& sp);
nlohmann::json to_json(const ExactResult& r);

TrigSeries trig_series_from_json(const nlohmann::json& j);

/// {problem, trial_space, stationary_points[], versions{schema}}
nlohmann::json analysis_document(const OscillatorProblem& p, const TrialSpace& space,
                                 const std::vector<StationaryPoint>& points);

/// analysis_document plus audit{bc, trivial, amplitude_mismatch, freq_table[], findings[], ...}
nlohmann::json audit_document(const AuditReport& report, const TrialSpace& space);

/// Shortest round-trip form of a double ("%.17g" when needed).
std::string format_double(double v);

std::string analysis_csv(const std::vector<StationaryPoint>& points);
std::string analysis_markdown(const OscillatorProblem& p, const TrialSpace& space,
                              const std::vector<StationaryPoint>& points);
std::string audit_csv(const AuditReport& report);
std::string audit_markdown(const AuditReport& report);

/// One sweep row per (eps, A).
struct SweepRow {
  double eps;
  double amplitude;
  std::optional<double> omega_solver, omega_eq13, omega_eq15, omega_exact;
  std::optional<double> rel_err_solver, rel_err_eq13, rel_err_eq15;
  bool trivial;
  std::optional<double> u1_at_0;
};

/// Column order of the sweep CSV; fixed.
inline constexpr const char* kSweepHeader =
    "eps,A,omega_solver,omega_eq13,omega_eq15,omega_exact,rel_err_solver,rel_err_eq13,"
    "rel_err_eq15,trivial,u1_at_0";

SweepRow sweep_row(double eps, double amplitude, const AuditReport& report);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace vhpm::cli
