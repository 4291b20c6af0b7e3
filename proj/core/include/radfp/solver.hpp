#pragma once

#include <string>
#include <vector>

#include "radfp/assembly.hpp"
#include "radfp/model.hpp"

namespace radfp {

/// Primal solve of (gamma A - mu C + Mstiff) U = mu load.
struct SolveResult {
    std::vector<double> U;   ///< nodal solution at the unknowns
    double f_value = 0.0;    ///< constraint functional F(mu) = delta^T A U
    double residual = 0.0;   ///< relative linear residual of the solve
    double min_value = 0.0;  ///< most negative nodal entry (positivity diagnostic)
    double mu = 0.0;
};

/// Adjoint solve of the transposed system with right-hand side A delta.
struct AdjointResult {
    std::vector<double> Psi;
    double duality_value = 0.0;  ///< mu * Psi^T load; equals f_value in exact arithmetic
    double mu = 0.0;
};

/// Derivative of the discrete solution map in mu.
struct SensitivityResult {
    std::vector<double> Uprime;
    double fprime_value = 0.0;  ///< F'(mu) = delta^T A Uprime
    double mu = 0.0;
};

SolveResult solve_primal(const AssembledSystem& sys, const ModelSpec& model, double mu);

/// Solves (gamma A - mu C + Mstiff)^T Psi = A delta. The matrix is the
/// literal transpose of the primal one, which makes the duality identity
/// delta^T A U = mu Psi^T load exact in the discrete algebra.
AdjointResult solve_adjoint(const AssembledSystem& sys, const ModelSpec& model, double mu);

/// Solves (gamma A - mu C + Mstiff) Uprime = load + C U, the exact
/// mu-derivative of the discrete system; U must be the primal solution at
/// the same mu.
SensitivityResult solve_sensitivity(const AssembledSystem& sys, const ModelSpec& model, double mu,
                                    const std::vector<double>& U);

/// Central difference (F(mu+h) - F(mu-h)) / (2h) evaluated through the
/// algebraically equivalent single solve
///   (gamma A - (mu+h) C + Mstiff) X = load + C U(mu-h),   FD = delta^T A X,
/// which avoids the catastrophic cancellation of differencing two nearly
/// equal F values. Used to cross-check solve_sensitivity.
double central_difference_fprime(const AssembledSystem& sys, const ModelSpec& model, double mu,
                                 double h_mu);

/// Writes per-node rows (r, u, psi, uprime) including the pinned boundary
/// node at r = 1.
void dump_solution(const AssembledSystem& sys, const SolveResult& primal,
                   const AdjointResult& adjoint, const SensitivityResult& sensitivity,
                   const std::string& path, const std::string& provenance);

}  // namespace radfp
