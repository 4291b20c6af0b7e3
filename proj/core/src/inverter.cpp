#include "radfp/inverter.hpp"

#include <cmath>
#include <stdexcept>

#include "radfp/assembly.hpp"
#include "radfp/solver.hpp"

namespace radfp {

const char* to_string(InversionStatus s) {
    switch (s) {
        case InversionStatus::Converged:
            return "Converged";
        case InversionStatus::NoBracket:
            return "NoBracket";
        case InversionStatus::NonMonotoneWarning:
            return "NonMonotoneWarning";
    }
    return "";
}

MonotonicityScan scan_monotonicity(const ModelSpec& model, const RadialMesh& mesh, double mu_lo,
                                   double mu_hi, std::size_t n_samples) {
    if (!(mu_lo >= 0.0) || !(mu_hi > mu_lo))
        throw std::invalid_argument("scan_monotonicity: need 0 <= mu_lo < mu_hi");
    if (n_samples < 3) throw std::invalid_argument("scan_monotonicity: need n_samples >= 3");

    MonotonicityScan scan;
    scan.mu_grid.resize(n_samples);
    const double steps = static_cast<double>(n_samples - 1);
    if (mu_lo > 0.0) {
        const double ratio = mu_hi / mu_lo;
        for (std::size_t i = 0; i < n_samples; ++i)
            scan.mu_grid[i] = mu_lo * std::pow(ratio, static_cast<double>(i) / steps);
    } else {
        for (std::size_t i = 0; i < n_samples; ++i)
            scan.mu_grid[i] = mu_lo + (mu_hi - mu_lo) * static_cast<double>(i) / steps;
    }
    scan.mu_grid.front() = mu_lo;
    scan.mu_grid.back() = mu_hi;

    const AssembledSystem sys = assemble(model, mesh);
    for (double mu : scan.mu_grid) {
        const SolveResult sol = solve_primal(sys, model, mu);
        const SensitivityResult sens = solve_sensitivity(sys, model, mu, sol.U);
        scan.f_values.push_back(sol.f_value);
        scan.fprime_values.push_back(sens.fprime_value);
    }

    // Record a sign change on the interval between consecutive samples with
    // nonzero F' of opposite signs (exact zeros separate, they do not flip).
    int last_sign = 0;
    std::size_t last_index = 0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double v = scan.fprime_values[i];
        const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (s == 0) continue;
        if (last_sign != 0 && s != last_sign) scan.sign_changes.push_back(last_index);
        last_sign = s;
        last_index = i;
    }
    return scan;
}

InversionReport invert(const ModelSpec& model, const RadialMesh& mesh, double ell, double mu_max,
                       double tol_f, const MonotonicityScan* scan) {
    if (!(ell >= 0.0)) throw std::invalid_argument("invert: ell must be nonnegative");
    if (!(mu_max > 0.0)) throw std::invalid_argument("invert: mu_max must be positive");
    if (tol_f <= 0.0) tol_f = 1e-8 * std::fmax(1.0, ell);

    InversionReport rep;
    rep.ell = ell;
    if (ell == 0.0) {
        // F(0) = 0 identically: the zero right-hand side needs no solve.
        rep.status = InversionStatus::Converged;
        return rep;
    }

    const AssembledSystem sys = assemble(model, mesh);
    const auto f_of = [&](double mu) {
        ++rep.n_solves;
        return solve_primal(sys, model, mu).f_value;
    };

    // Doubling bracket upward from [0, 1]; the first interval whose upper
    // end clears ell localizes the smallest crossing.
    double lo = 0.0, f_lo = 0.0;
    double hi = 1.0;
    double f_hi = f_of(hi);
    while (f_hi < ell) {
        if (hi > mu_max) {
            rep.status = InversionStatus::NoBracket;
            rep.mu_found = hi;
            rep.f_at_mu = f_hi;
            rep.bracket_lo = lo;
            rep.bracket_hi = hi;
            return rep;
        }
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        f_hi = f_of(hi);
    }
    (void)f_lo;

    // Bisection with Newton acceleration: the Newton step uses the exact
    // discrete F' and is accepted only inside the open bracket.
    double mu = 0.5 * (lo + hi);
    bool converged = false;
    for (int iter = 0; iter < 300; ++iter) {
        const SolveResult sol = solve_primal(sys, model, mu);
        const SensitivityResult sens = solve_sensitivity(sys, model, mu, sol.U);
        rep.n_solves += 2;
        const double f = sol.f_value;
        if (std::fabs(f - ell) <= tol_f) {
            rep.mu_found = mu;
            rep.f_at_mu = f;
            converged = true;
            break;
        }
        if (f < ell)
            lo = mu;
        else
            hi = mu;
        const double newton = mu - (f - ell) / sens.fprime_value;
        mu = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
    }
    if (!converged)
        throw std::runtime_error("invert: root refinement stalled before reaching tol_f");

    rep.bracket_lo = lo;
    rep.bracket_hi = hi;
    rep.status = (scan != nullptr && !scan->sign_changes.empty())
                     ? InversionStatus::NonMonotoneWarning
                     : InversionStatus::Converged;
    return rep;
}

}  // namespace radfp
