#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "radfp/assembly.hpp"
#include "radfp/model.hpp"

namespace radfp {

/// Exit codes shared by the library runners and the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      ///< bad flags, unknown keys, bad config
inline constexpr int kExitNumerical = 3;  ///< solver failure, no bracket

/// Options common to preset and custom runs. Unset numeric fields keep the
/// defaults noted per command.
struct RunOptions {
    std::string out_dir = ".";
    std::size_t n_intervals = 0;  ///< 0 keeps the preset/config value
    LoadStyle load_style = LoadStyle::Hat;
    double mu = 1.0;
    double ell = 0.0;
    bool ell_set = false;
    double mu_lo = -1.0;  ///< < 0 means unset
    double mu_hi = -1.0;
    std::size_t samples = 0;  ///< 0 means unset
    bool dump_solution = false;
    std::string dump_system_path;  ///< empty disables the system dump
};

/// Runs a named preset experiment: writes profiles.csv, fscan.csv and
/// summary.txt into out_dir. Returns an exit code; failures are logged to
/// `log`.
int run_preset(const std::string& name, const RunOptions& opts, std::ostream& log);

/// Runs one command (solve | scan | invert | moments | asymptote) against a
/// parsed config. Artifacts land in out_dir; key results are logged.
int run_custom_config(const ProblemConfig& cfg, const std::string& command,
                      const RunOptions& opts, std::ostream& log);

/// Convenience wrapper: parses config_path first (exit 2 on config errors).
int run_custom(const std::string& config_path, const std::string& command,
               const RunOptions& opts, std::ostream& log);

}  // namespace radfp
