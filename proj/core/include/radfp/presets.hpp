#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "radfp/model.hpp"

namespace radfp {

/// The mu values an experiment visits: profile solves, the F(mu) scan, and
/// the large-mu samples of the asymptote summary block.
struct MuSchedule {
    std::vector<double> profile_mus;
    double scan_lo = 1e-2;
    double scan_hi = 1e4;
    std::size_t scan_samples = 60;
    std::vector<double> asymptote_mus;
};

/// A frozen named experiment: model, mesh default, and mu schedule. All five
/// share dim = 3, gamma = 1, S = indicator on [0.3, 0.5], and N = 2000.
///
///   fig_ok1    quadratic potential 2r^2, Gaussian kernel at the origin;
///              solution profiles at mu = 1..10.
///   fig_ok2    same model; wide monotonicity scan up to mu = 1e7.
///   fig_delta4 quartic kernel 1e-3 r^4 (vanishes at the origin); scan to 500.
///   fig_bad    double-well potential 2r^2(r-0.2)^2 with a kernel shifted to
///              r = 0.05; scan to 1.5e5.
///   fig_bad2   quadratic potential with the kernel shifted to r = 0.1;
///              scan to 2500.
struct ExperimentPreset {
    std::string name;
    ProblemConfig config;
    MuSchedule mu_schedule;
    std::vector<std::string> outputs;  ///< artifact file names written by run_preset
};

const std::vector<ExperimentPreset>& all_presets();

/// nullptr when the name is unknown.
const ExperimentPreset* find_preset(const std::string& name);

}  // namespace radfp
