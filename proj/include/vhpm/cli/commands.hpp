#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "vhpm/cli/config.hpp"

namespace vhpm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitFindings = 4;

// Each command renders its report to cfg.out_path, or to `out` when no path is set.
int cmd_analyze(const RunConfig& cfg, std::ostream& out);
int cmd_audit(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_exact(const RunConfig& cfg, std::ostream& out);

/// Full command line (without the program name): parses flags and the
/// optional --config file (flags win), dispatches, and maps errors to exit
/// codes: 2 config, 3 numeric domain, 4 findings with --fail-on-findings.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vhpm::cli
