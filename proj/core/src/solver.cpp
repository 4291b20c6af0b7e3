#include "radfp/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "radfp/io.hpp"
#include "radfp/tridiag.hpp"

namespace radfp {

namespace {
void check_mu(double mu) {
    if (!(mu >= 0.0)) throw std::invalid_argument("mu must be nonnegative");
}
}  // namespace

SolveResult solve_primal(const AssembledSystem& sys, const ModelSpec& model, double mu) {
    check_mu(mu);
    SolveResult res;
    res.mu = mu;
    const Tridiag t = system_matrix(sys, mu, model.gamma);
    std::vector<double> rhs(sys.size);
    for (std::size_t i = 0; i < sys.size; ++i) rhs[i] = mu * sys.load[i];
    res.U = solve_refined(t, rhs, &res.residual);
    res.f_value = comp_dot(sys.delta, matvec(sys.A, res.U));
    res.min_value = res.U.empty() ? 0.0 : *std::min_element(res.U.begin(), res.U.end());
    return res;
}

AdjointResult solve_adjoint(const AssembledSystem& sys, const ModelSpec& model, double mu) {
    check_mu(mu);
    AdjointResult res;
    res.mu = mu;
    const Tridiag t = transpose(system_matrix(sys, mu, model.gamma));
    const std::vector<double> rhs = matvec(sys.A, sys.delta);
    res.Psi = solve_refined(t, rhs);
    res.duality_value = mu * comp_dot(res.Psi, sys.load);
    return res;
}

SensitivityResult solve_sensitivity(const AssembledSystem& sys, const ModelSpec& model, double mu,
                                    const std::vector<double>& U) {
    check_mu(mu);
    if (U.size() != sys.size)
        throw std::invalid_argument("solve_sensitivity: U must be the primal solution vector");
    SensitivityResult res;
    res.mu = mu;
    const Tridiag t = system_matrix(sys, mu, model.gamma);
    const std::vector<double> cu = matvec(sys.C, U);
    std::vector<double> rhs(sys.size);
    for (std::size_t i = 0; i < sys.size; ++i) rhs[i] = sys.load[i] + cu[i];
    res.Uprime = solve_refined(t, rhs);
    res.fprime_value = comp_dot(sys.delta, matvec(sys.A, res.Uprime));
    return res;
}

double central_difference_fprime(const AssembledSystem& sys, const ModelSpec& model, double mu,
                                 double h_mu) {
    if (!(h_mu > 0.0)) throw std::invalid_argument("central_difference_fprime: h_mu must be > 0");
    check_mu(mu - h_mu);
    // X = (U(mu+h) - U(mu-h)) / (2h) satisfies, identically in the assembled
    // matrices, Sys(mu+h) X = load + C U(mu-h); evaluating it through this
    // single solve keeps the difference quotient free of rounding-error
    // amplification by 1/(2h).
    const SolveResult lower = solve_primal(sys, model, mu - h_mu);
    const Tridiag upper = system_matrix(sys, mu + h_mu, model.gamma);
    const std::vector<double> cu = matvec(sys.C, lower.U);
    std::vector<double> rhs(sys.size);
    for (std::size_t i = 0; i < sys.size; ++i) rhs[i] = sys.load[i] + cu[i];
    const std::vector<double> x = solve_refined(upper, rhs);
    return comp_dot(sys.delta, matvec(sys.A, x));
}

void dump_solution(const AssembledSystem& sys, const SolveResult& primal,
                   const AdjointResult& adjoint, const SensitivityResult& sensitivity,
                   const std::string& path, const std::string& provenance) {
    CsvWriter csv(path, provenance);
    csv.header({"r", "u", "psi", "uprime"});
    for (std::size_t j = 0; j < sys.mesh.n_nodes; ++j) {
        const bool boundary = j >= sys.size;
        csv.row({sys.mesh.node(j), boundary ? 0.0 : primal.U[j], boundary ? 0.0 : adjoint.Psi[j],
                 boundary ? 0.0 : sensitivity.Uprime[j]});
    }
    if (!csv.good()) throw std::runtime_error("dump_solution: cannot write '" + path + "'");
}

}  // namespace radfp
