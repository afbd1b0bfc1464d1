#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "pairbound/interval.hpp"

namespace pairbound::cli {

enum ExitCode { kCertified = 0, kInconclusive = 1, kError = 2 };

// Default directory for report files when --output is not given.
inline constexpr const char* kOutputDirEnv = "PAIRBOUND_OUTPUT_DIR";

// "0", "pi", "pi/2", "3pi/4", "-pi/3", "2*pi", "0.25": an enclosure of the
// named angle. Throws std::invalid_argument on anything else.
Interval parse_theta(const std::string& text);

// key = value lines; blank lines and # comments are skipped. Keys are
// option names without the leading dashes.
std::map<std::string, std::string> read_config_file(const std::string& path);

// Runs one subcommand. `args` excludes the program name. The human summary
// (or the JSON report with --json) goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace pairbound::cli
