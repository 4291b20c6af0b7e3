#include "radfp/presets.hpp"

namespace radfp {

namespace {

ProblemConfig base_config() {
    ProblemConfig cfg;
    cfg.model.potential = PotentialSpec::quadratic(2.0);
    cfg.model.kernel = KernelSpec::gaussian_at_origin(1e-3);
    cfg.model.source = SourceSpec::indicator(0.3, 0.5);
    cfg.model.gamma = 1.0;
    cfg.model.dim = 3;
    cfg.n_intervals = 2000;
    return cfg;
}

std::vector<ExperimentPreset> make_presets() {
    const std::vector<std::string> outputs = {"profiles.csv", "fscan.csv", "summary.txt"};
    const std::vector<double> large_mus = {1e2, 1e3, 1e4};
    std::vector<ExperimentPreset> presets;

    {
        ExperimentPreset p;
        p.name = "fig_ok1";
        p.config = base_config();
        p.mu_schedule.profile_mus = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        p.mu_schedule.scan_lo = 1e-2;
        p.mu_schedule.scan_hi = 1e4;
        p.mu_schedule.scan_samples = 60;
        p.mu_schedule.asymptote_mus = large_mus;
        p.outputs = outputs;
        presets.push_back(p);
    }
    {
        ExperimentPreset p;
        p.name = "fig_ok2";
        p.config = base_config();
        p.mu_schedule.profile_mus = {1, 10, 100};
        p.mu_schedule.scan_lo = 1e-2;
        p.mu_schedule.scan_hi = 1e7;
        p.mu_schedule.scan_samples = 60;
        p.mu_schedule.asymptote_mus = large_mus;
        p.outputs = outputs;
        presets.push_back(p);
    }
    {
        ExperimentPreset p;
        p.name = "fig_delta4";
        p.config = base_config();
        p.config.model.kernel = KernelSpec::quartic_tail(1e-3);
        p.mu_schedule.profile_mus = {1, 10, 100};
        p.mu_schedule.scan_lo = 1e-2;
        p.mu_schedule.scan_hi = 500.0;
        p.mu_schedule.scan_samples = 60;
        p.mu_schedule.asymptote_mus = large_mus;
        p.outputs = outputs;
        presets.push_back(p);
    }
    {
        ExperimentPreset p;
        p.name = "fig_bad";
        p.config = base_config();
        p.config.model.potential = PotentialSpec::double_well(2.0, 0.2);
        p.config.model.kernel = KernelSpec::shifted_gaussian(1e-3, 0.05);
        p.mu_schedule.profile_mus = {1, 10, 100};
        p.mu_schedule.scan_lo = 1e-2;
        p.mu_schedule.scan_hi = 1.5e5;
        p.mu_schedule.scan_samples = 60;
        p.mu_schedule.asymptote_mus = large_mus;
        p.outputs = outputs;
        presets.push_back(p);
    }
    {
        ExperimentPreset p;
        p.name = "fig_bad2";
        p.config = base_config();
        p.config.model.kernel = KernelSpec::shifted_gaussian(1e-3, 0.1);
        p.mu_schedule.profile_mus = {1, 10, 100};
        p.mu_schedule.scan_lo = 1e-2;
        p.mu_schedule.scan_hi = 2500.0;
        p.mu_schedule.scan_samples = 60;
        p.mu_schedule.asymptote_mus = large_mus;
        p.outputs = outputs;
        presets.push_back(p);
    }
    return presets;
}

}  // namespace

const std::vector<ExperimentPreset>& all_presets() {
    static const std::vector<ExperimentPreset> presets = make_presets();
    return presets;
}

const ExperimentPreset* find_preset(const std::string& name) {
    for (const ExperimentPreset& p : all_presets())
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace radfp
