#include "radfp/runner.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "radfp/inverter.hpp"
#include "radfp/io.hpp"
#include "radfp/oracles.hpp"
#include "radfp/presets.hpp"
#include "radfp/solver.hpp"
#include "radfp/tridiag.hpp"

namespace radfp {

namespace {

namespace fs = std::filesystem;

std::string join_path(const std::string& dir, const std::string& file) {
    return (fs::path(dir) / file).string();
}

const char* style_name(LoadStyle s) { return s == LoadStyle::Hat ? "hat" : "cell"; }

std::string run_provenance(const ProblemConfig& cfg, const RunOptions& opts,
                           const std::string& extra) {
    std::string p = config_provenance(cfg);
    p += " load_style=";
    p += style_name(opts.load_style);
    if (!extra.empty()) {
        p += ' ';
        p += extra;
    }
    return p;
}

void write_hypothesis_block(KeyValueWriter& kv, const HypothesisReport& hyp) {
    kv.put("hphi_ok", hyp.hphi_ok);
    kv.put("lambda_est", hyp.lambda_est);
    kv.put("m_est", hyp.m_est);
    if (!hyp.hphi_ok) kv.put("hphi_violation_r", hyp.hphi_violation_r);
    kv.put("hcm_ok", hyp.hcm_ok);
    kv.put("dphi_nonneg", hyp.dphi_nonneg);
    kv.put("d2phi_nonneg", hyp.d2phi_nonneg);
    kv.put("ddelta_nonpos", hyp.ddelta_nonpos);
    if (!hyp.hcm_ok) kv.put("hcm_violation_r", hyp.hcm_violation_r);
    kv.put("delta_positive_near_origin", hyp.delta_positive_near_origin);
    kv.put("delta_at_origin", hyp.delta_at_origin);
    if (!hyp.delta_positive_near_origin) kv.put("delta_violation_r", hyp.delta_violation_r);
}

void write_scan_block(KeyValueWriter& kv, const MonotonicityScan& scan) {
    kv.put("scan_mu_lo", scan.mu_grid.front());
    kv.put("scan_mu_hi", scan.mu_grid.back());
    kv.put_count("scan_samples", scan.mu_grid.size());
    kv.put_count("sign_change_count", scan.sign_changes.size());
    std::string intervals;
    for (std::size_t idx : scan.sign_changes) {
        if (!intervals.empty()) intervals += ';';
        intervals += g17(scan.mu_grid[idx]) + ".." + g17(scan.mu_grid[idx + 1]);
    }
    kv.put("sign_change_intervals", intervals);
    kv.put("f_monotone", scan.sign_changes.empty());
    double f_max = scan.f_values.front();
    for (double f : scan.f_values) f_max = std::fmax(f_max, f);
    kv.put("f_max", f_max);
    kv.put("f_at_scan_end", scan.f_values.back());
    kv.put("final_ratio", scan.f_values.back() / scan.mu_grid.back());
}

void write_asymptote_block(KeyValueWriter& kv, const AsymptoteReport& asym) {
    kv.put("predicted_slope", asym.predicted_slope);
    for (std::size_t i = 0; i < asym.mu_samples.size(); ++i) {
        const std::string tag = std::to_string(i);
        kv.put("asymptote_mu_" + tag, asym.mu_samples[i]);
        kv.put("asymptote_ratio_" + tag, asym.ratio[i]);
        kv.put("asymptote_rel_deviation_" + tag, asym.rel_deviation[i]);
        kv.put("asymptote_resolved_" + tag, static_cast<bool>(asym.resolved[i]));
    }
    kv.put("deviation_decreasing", asym.deviation_decreasing);
}

/// Nodes inside the concentration core (lambda mu)^{-1/2} for the
/// resolution bookkeeping of wide scans.
std::size_t core_node_count(const RadialMesh& mesh, double lambda, double mu) {
    if (!(lambda > 0.0) || !(mu > 0.0)) return mesh.n_nodes;
    const double core = 1.0 / std::sqrt(lambda * mu);
    const std::size_t n = static_cast<std::size_t>(std::floor(core / mesh.h)) + 1;
    return n > mesh.n_nodes ? mesh.n_nodes : n;
}

int run_preset_impl(const ExperimentPreset& preset, const RunOptions& opts, std::ostream& log) {
    ProblemConfig cfg = preset.config;
    if (opts.n_intervals > 0) cfg.n_intervals = opts.n_intervals;
    const RadialMesh mesh = build_mesh(cfg.n_intervals, cfg.model.dim);
    const HypothesisReport hyp = check_hypotheses(cfg.model, mesh);
    const AssembledSystem sys = assemble(cfg.model, mesh, opts.load_style);
    const std::string prov = run_provenance(cfg, opts, "preset=" + preset.name);
    fs::create_directories(opts.out_dir);

    // Solution profiles, one column per scheduled mu, including the pinned
    // boundary node.
    const std::string profiles_path = join_path(opts.out_dir, "profiles.csv");
    {
        CsvWriter csv(profiles_path, prov);
        std::vector<std::string> cols = {"r"};
        std::vector<std::vector<double>> solutions;
        for (double mu : preset.mu_schedule.profile_mus) {
            cols.push_back("u(mu=" + g17(mu) + ")");
            solutions.push_back(solve_primal(sys, cfg.model, mu).U);
        }
        csv.header(cols);
        std::vector<double> row(cols.size());
        for (std::size_t j = 0; j < mesh.n_nodes; ++j) {
            row[0] = mesh.node(j);
            for (std::size_t c = 0; c < solutions.size(); ++c)
                row[c + 1] = j < sys.size ? solutions[c][j] : 0.0;
            csv.row(row);
        }
        if (!csv.good()) throw std::runtime_error("cannot write " + profiles_path);
    }

    const MonotonicityScan scan =
        scan_monotonicity(cfg.model, mesh, preset.mu_schedule.scan_lo, preset.mu_schedule.scan_hi,
                          preset.mu_schedule.scan_samples);
    const std::string fscan_path = join_path(opts.out_dir, "fscan.csv");
    {
        CsvWriter csv(fscan_path, prov);
        csv.header({"mu", "F", "Fprime"});
        for (std::size_t i = 0; i < scan.mu_grid.size(); ++i)
            csv.row({scan.mu_grid[i], scan.f_values[i], scan.fprime_values[i]});
        if (!csv.good()) throw std::runtime_error("cannot write " + fscan_path);
    }

    const AsymptoteReport asym = check_asymptote(cfg.model, mesh, preset.mu_schedule.asymptote_mus);

    const std::string summary_path = join_path(opts.out_dir, "summary.txt");
    {
        KeyValueWriter kv(summary_path, prov);
        kv.put("preset", preset.name);
        kv.put_count("n_intervals", cfg.n_intervals);
        kv.put("load_style", style_name(opts.load_style));
        write_hypothesis_block(kv, hyp);
        write_scan_block(kv, scan);
        write_asymptote_block(kv, asym);
        // Where the scan outruns the mesh: samples whose concentration core
        // holds fewer than 10 nodes are recorded, not silently refined.
        std::size_t unresolved = 0;
        double first_unresolved = 0.0;
        for (double mu : scan.mu_grid) {
            if (core_node_count(mesh, asym.lambda_est, mu) < 10) {
                if (unresolved == 0) first_unresolved = mu;
                ++unresolved;
            }
        }
        kv.put_count("scan_unresolved_samples", unresolved);
        if (unresolved > 0) kv.put("scan_first_unresolved_mu", first_unresolved);
        if (!kv.good()) throw std::runtime_error("cannot write " + summary_path);
    }

    log << "preset " << preset.name << ": wrote " << profiles_path << ", " << fscan_path << ", "
        << summary_path << "\n";
    log << "  sign_changes=" << scan.sign_changes.size() << " f_max_over_scan="
        << g17([&] {
               double m = scan.f_values.front();
               for (double f : scan.f_values) m = std::fmax(m, f);
               return m;
           }())
        << " predicted_slope=" << g17(asym.predicted_slope) << "\n";
    return kExitOk;
}

int run_solve(const ProblemConfig& cfg, const RadialMesh& mesh, const AssembledSystem& sys,
              const RunOptions& opts, std::ostream& log) {
    const double mu = opts.mu;
    if (!(mu >= 0.0)) {
        log << "error: --mu must be nonnegative\n";
        return kExitUsage;
    }
    const SolveResult primal = solve_primal(sys, cfg.model, mu);
    const AdjointResult adjoint = solve_adjoint(sys, cfg.model, mu);
    const SensitivityResult sens = solve_sensitivity(sys, cfg.model, mu, primal.U);
    const HypothesisReport hyp = check_hypotheses(cfg.model, mesh);
    const std::string prov = run_provenance(cfg, opts, "command=solve mu=" + g17(mu));

    if (opts.dump_solution) {
        const std::string path = join_path(opts.out_dir, "solution.csv");
        dump_solution(sys, primal, adjoint, sens, path, prov);
        log << "wrote " << path << "\n";
    }
    if (!opts.dump_system_path.empty()) {
        dump_system(sys, mu, cfg.model.gamma, opts.dump_system_path, prov);
        log << "wrote " << opts.dump_system_path << "\n";
    }

    std::vector<double> ones(sys.size, 1.0);
    const double m0 = weighted_inner_product(ones, primal.U, mesh);
    const double mass_lhs = cfg.model.gamma * m0;
    const double mass_rhs = mu * comp_sum(sys.load);
    const double s0 = source_moment(cfg.model.source, cfg.model.dim, 0);

    const std::string summary_path = join_path(opts.out_dir, "summary.txt");
    KeyValueWriter kv(summary_path, prov);
    kv.put("mu", mu);
    kv.put("f_value", primal.f_value);
    kv.put("fprime_value", sens.fprime_value);
    kv.put("duality_value", adjoint.duality_value);
    kv.put("duality_gap", std::fabs(primal.f_value - adjoint.duality_value));
    kv.put("residual", primal.residual);
    kv.put("min_value", primal.min_value);
    kv.put("mass_weighted_solution", mass_lhs);
    kv.put("mass_weighted_load", mass_rhs);
    kv.put("mass_identity_gap", std::fabs(mass_lhs - mass_rhs));
    kv.put("mass_prefactor_prediction", mass_prefactor(mu, cfg.model.gamma, s0));
    write_hypothesis_block(kv, hyp);
    if (!kv.good()) throw std::runtime_error("cannot write " + summary_path);

    log << "wrote " << summary_path << "\n";
    log << "F(" << g17(mu) << ") = " << g17(primal.f_value)
        << ", F' = " << g17(sens.fprime_value) << ", min u = " << g17(primal.min_value) << "\n";
    return kExitOk;
}

int run_scan(const ProblemConfig& cfg, const RadialMesh& mesh, const RunOptions& opts,
             std::ostream& log) {
    const double lo = opts.mu_lo >= 0.0 ? opts.mu_lo : 0.0;
    const double hi = opts.mu_hi >= 0.0 ? opts.mu_hi : 1e4;
    const std::size_t samples = opts.samples > 0 ? opts.samples : 60;
    const MonotonicityScan scan = scan_monotonicity(cfg.model, mesh, lo, hi, samples);
    const std::string prov = run_provenance(cfg, opts, "command=scan");

    const std::string fscan_path = join_path(opts.out_dir, "fscan.csv");
    {
        CsvWriter csv(fscan_path, prov);
        csv.header({"mu", "F", "Fprime"});
        for (std::size_t i = 0; i < scan.mu_grid.size(); ++i)
            csv.row({scan.mu_grid[i], scan.f_values[i], scan.fprime_values[i]});
        if (!csv.good()) throw std::runtime_error("cannot write " + fscan_path);
    }
    const std::string summary_path = join_path(opts.out_dir, "summary.txt");
    {
        KeyValueWriter kv(summary_path, prov);
        write_scan_block(kv, scan);
        if (!kv.good()) throw std::runtime_error("cannot write " + summary_path);
    }
    log << "wrote " << fscan_path << ", " << summary_path << "\n";
    log << "sign_changes=" << scan.sign_changes.size() << (scan.sign_changes.empty()
        ? " (F' kept one sign over the grid)\n"
        : " (F is non-monotone over the grid)\n");
    return kExitOk;
}

int run_invert(const ProblemConfig& cfg, const RadialMesh& mesh, const RunOptions& opts,
               std::ostream& log) {
    if (!opts.ell_set) {
        log << "error: invert requires --ell <value>\n";
        return kExitUsage;
    }
    if (!(opts.ell >= 0.0)) {
        log << "error: --ell must be nonnegative\n";
        return kExitUsage;
    }
    const std::string prov = run_provenance(cfg, opts, "command=invert ell=" + g17(opts.ell));

    // A scan is run first only when the caller gave a full grid; its sign
    // changes downgrade a converged answer to NonMonotoneWarning.
    MonotonicityScan scan;
    const bool have_scan = opts.mu_lo >= 0.0 && opts.mu_hi > 0.0 && opts.samples >= 3;
    if (have_scan) {
        scan = scan_monotonicity(cfg.model, mesh, opts.mu_lo, opts.mu_hi, opts.samples);
        const std::string fscan_path = join_path(opts.out_dir, "fscan.csv");
        CsvWriter csv(fscan_path, prov);
        csv.header({"mu", "F", "Fprime"});
        for (std::size_t i = 0; i < scan.mu_grid.size(); ++i)
            csv.row({scan.mu_grid[i], scan.f_values[i], scan.fprime_values[i]});
        if (!csv.good()) throw std::runtime_error("cannot write " + fscan_path);
        log << "wrote " << fscan_path << "\n";
    }

    const InversionReport rep =
        invert(cfg.model, mesh, opts.ell, 1e8, -1.0, have_scan ? &scan : nullptr);

    const std::string report_path = join_path(opts.out_dir, "invert.txt");
    {
        KeyValueWriter kv(report_path, prov);
        kv.put("ell", rep.ell);
        kv.put("mu_found", rep.mu_found);
        kv.put("f_at_mu", rep.f_at_mu);
        kv.put("bracket_lo", rep.bracket_lo);
        kv.put("bracket_hi", rep.bracket_hi);
        kv.put("n_solves", static_cast<double>(rep.n_solves));
        kv.put("status", std::string(to_string(rep.status)));
        if (!kv.good()) throw std::runtime_error("cannot write " + report_path);
    }
    log << "wrote " << report_path << "\n";
    log << "status=" << to_string(rep.status) << " mu_found=" << g17(rep.mu_found)
        << " f_at_mu=" << g17(rep.f_at_mu) << " n_solves=" << rep.n_solves << "\n";
    // A missing bracket means no admissible mu exists below mu_max: a
    // numerical-outcome failure for scripting purposes.
    return rep.status == InversionStatus::NoBracket ? kExitNumerical : kExitOk;
}

int run_moments(const ProblemConfig& cfg, const RadialMesh& mesh, const AssembledSystem& sys,
                const RunOptions& opts, std::ostream& log) {
    const double mu = opts.mu;
    if (!(mu >= 0.0)) {
        log << "error: --mu must be nonnegative\n";
        return kExitUsage;
    }
    const SolveResult primal = solve_primal(sys, cfg.model, mu);
    const MomentReport rep = check_moments(primal, cfg.model, mesh);
    const std::string prov = run_provenance(cfg, opts, "command=moments mu=" + g17(mu));

    const std::string path = join_path(opts.out_dir, "moments.txt");
    KeyValueWriter kv(path, prov);
    kv.put("mu", mu);
    kv.put("m0", rep.m0);
    kv.put("m2", rep.m2);
    kv.put("m4", rep.m4);
    kv.put("exact_available", rep.exact_available);
    if (rep.exact_available) {
        kv.put("m0_exact", rep.m0_exact);
        kv.put("m2_exact", rep.m2_exact);
        kv.put("m4_exact", rep.m4_exact);
        kv.put("rel_error_m0", rep.rel_errors[0]);
        kv.put("rel_error_m2", rep.rel_errors[1]);
        kv.put("rel_error_m4", rep.rel_errors[2]);
    }
    const double s0 = source_moment(cfg.model.source, cfg.model.dim, 0);
    kv.put("mass_prefactor_prediction", mass_prefactor(mu, cfg.model.gamma, s0));
    if (!kv.good()) throw std::runtime_error("cannot write " + path);

    log << "wrote " << path << "\n";
    log << "m0=" << g17(rep.m0) << " m2=" << g17(rep.m2) << " m4=" << g17(rep.m4) << "\n";
    return kExitOk;
}

int run_asymptote(const ProblemConfig& cfg, const RadialMesh& mesh, const RunOptions& opts,
                  std::ostream& log) {
    const double lo = opts.mu_lo >= 0.0 ? opts.mu_lo : 1e2;
    const double hi = opts.mu_hi >= 0.0 ? opts.mu_hi : 1e4;
    const std::size_t samples = opts.samples > 0 ? opts.samples : 3;
    if (!(lo > 0.0) || !(hi > lo) || samples < 2) {
        log << "error: asymptote requires 0 < --mu-lo < --mu-hi and --samples >= 2\n";
        return kExitUsage;
    }
    std::vector<double> mus(samples);
    for (std::size_t i = 0; i < samples; ++i)
        mus[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(samples - 1));
    mus.front() = lo;
    mus.back() = hi;

    const AsymptoteReport rep = check_asymptote(cfg.model, mesh, mus);
    const std::string prov = run_provenance(cfg, opts, "command=asymptote");

    const std::string csv_path = join_path(opts.out_dir, "asymptote.csv");
    {
        CsvWriter csv(csv_path, prov);
        csv.header({"mu", "ratio", "rel_deviation", "core_nodes", "resolved"});
        for (std::size_t i = 0; i < mus.size(); ++i)
            csv.row_text({g17(rep.mu_samples[i]), g17(rep.ratio[i]), g17(rep.rel_deviation[i]),
                          std::to_string(rep.core_nodes[i]), rep.resolved[i] ? "true" : "false"});
        if (!csv.good()) throw std::runtime_error("cannot write " + csv_path);
    }
    const std::string summary_path = join_path(opts.out_dir, "summary.txt");
    {
        KeyValueWriter kv(summary_path, prov);
        kv.put("delta_at_origin", rep.delta_at_origin);
        kv.put("lambda_est", rep.lambda_est);
        write_asymptote_block(kv, rep);
        if (!kv.good()) throw std::runtime_error("cannot write " + summary_path);
    }
    log << "wrote " << csv_path << ", " << summary_path << "\n";
    log << "predicted_slope=" << g17(rep.predicted_slope)
        << " final_rel_deviation=" << g17(rep.rel_deviation.back()) << "\n";
    return kExitOk;
}

}  // namespace

int run_preset(const std::string& name, const RunOptions& opts, std::ostream& log) {
    const ExperimentPreset* preset = find_preset(name);
    if (preset == nullptr) {
        log << "error: unknown preset '" << name << "'; available:";
        for (const ExperimentPreset& p : all_presets()) log << ' ' << p.name;
        log << "\n";
        return kExitUsage;
    }
    try {
        return run_preset_impl(*preset, opts, log);
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        log << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int run_custom_config(const ProblemConfig& cfg_in, const std::string& command,
                      const RunOptions& opts, std::ostream& log) {
    try {
        ProblemConfig cfg = cfg_in;
        if (opts.n_intervals > 0) cfg.n_intervals = opts.n_intervals;
        const RadialMesh mesh = build_mesh(cfg.n_intervals, cfg.model.dim);
        std::filesystem::create_directories(opts.out_dir);
        if (command == "solve" || command == "moments") {
            const AssembledSystem sys = assemble(cfg.model, mesh, opts.load_style);
            return command == "solve" ? run_solve(cfg, mesh, sys, opts, log)
                                      : run_moments(cfg, mesh, sys, opts, log);
        }
        if (command == "scan") return run_scan(cfg, mesh, opts, log);
        if (command == "invert") return run_invert(cfg, mesh, opts, log);
        if (command == "asymptote") return run_asymptote(cfg, mesh, opts, log);
        log << "error: unknown command '" << command
            << "' (expected solve | scan | invert | moments | asymptote)\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        log << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int run_custom(const std::string& config_path, const std::string& command, const RunOptions& opts,
               std::ostream& log) {
    ProblemConfig cfg;
    try {
        cfg = parse_config_file(config_path);
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    return run_custom_config(cfg, command, opts, log);
}

}  // namespace radfp
