#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "radfp/mesh.hpp"
#include "radfp/model.hpp"

namespace radfp {

/// F and F' sampled over a mu grid, with the grid intervals where F'
/// changes sign. The grid is log-spaced when mu_lo > 0 and linear when
/// mu_lo = 0 (log spacing cannot reach zero).
struct MonotonicityScan {
    std::vector<double> mu_grid;
    std::vector<double> f_values;
    std::vector<double> fprime_values;
    std::vector<std::size_t> sign_changes;  ///< i such that F' flips sign between grid[i] and grid[i+1]
};

MonotonicityScan scan_monotonicity(const ModelSpec& model, const RadialMesh& mesh, double mu_lo,
                                   double mu_hi, std::size_t n_samples);

enum class InversionStatus { Converged, NoBracket, NonMonotoneWarning };

const char* to_string(InversionStatus s);

/// Result of solving F(mu) = ell for mu.
struct InversionReport {
    double ell = 0.0;
    double mu_found = 0.0;
    double f_at_mu = 0.0;
    double bracket_lo = 0.0;  ///< final bracket
    double bracket_hi = 0.0;
    int n_solves = 0;  ///< linear solves spent (each F costs one, each F' one more)
    InversionStatus status = InversionStatus::Converged;
};

/// Finds the smallest mu in [0, mu_max] with |F(mu) - ell| <= tol_f.
///
/// ell = 0 returns mu = 0 immediately (F(0) = 0) with zero solves. Otherwise
/// the bracket doubles upward from [0, 1] until F(mu_hi) >= ell; inside it,
/// Newton steps using the exact discrete F' are taken whenever the iterate
/// stays inside the bracket, with bisection as fallback, so convergence is
/// guaranteed. NoBracket reports F < ell everywhere up to mu_max.
///
/// tol_f <= 0 selects the default 1e-8 * max(1, ell). When `scan` is given
/// and recorded sign changes, a converged result is downgraded to
/// NonMonotoneWarning (the located root may not be the only one).
InversionReport invert(const ModelSpec& model, const RadialMesh& mesh, double ell,
                       double mu_max = 1e8, double tol_f = -1.0,
                       const MonotonicityScan* scan = nullptr);

}  // namespace radfp
