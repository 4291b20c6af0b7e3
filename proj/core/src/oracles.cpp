#include "radfp/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace radfp {

double mass_prefactor(double mu, double gamma, double source_integral) {
    return mu * source_integral / gamma;
}

double source_moment(const SourceSpec& source, int dim, int k) {
    const int p = k + dim - 1;
    if (source.kind == SourceKind::Indicator)
        return monomial_integral(source.r_lo, source.r_hi, p);
    // Custom sources: composite 8-point Gauss-Legendre over 64 panels.
    constexpr int panels = 64;
    constexpr double node[] = {-0.96028985649753623, -0.79666647741362674, -0.52553240991632899,
                               -0.18343464249564980, 0.18343464249564980,  0.52553240991632899,
                               0.79666647741362674,  0.96028985649753623};
    constexpr double weight[] = {0.10122853629037626, 0.22238103445337447, 0.31370664587788729,
                                 0.36268378337836198, 0.36268378337836198, 0.31370664587788729,
                                 0.22238103445337447, 0.10122853629037626};
    double total = 0.0;
    for (int panel = 0; panel < panels; ++panel) {
        const double a = static_cast<double>(panel) / panels;
        const double b = static_cast<double>(panel + 1) / panels;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double sum = 0.0;
        for (int q = 0; q < 8; ++q) {
            const double r = mid + half * node[q];
            double rp = 1.0;
            for (int e = 0; e < p; ++e) rp *= r;
            sum += weight[q] * source.s(r) * rp;
        }
        total += half * sum;
    }
    return total;
}

ExactMoments exact_moments(const ModelSpec& model, double mu, double gamma, int dim) {
    if (model.potential.kind != PotentialKind::Quadratic || model.potential.a != 1.0)
        throw std::invalid_argument(
            "exact_moments: closed forms hold only for the unit quadratic potential");
    if (model.source.kind != SourceKind::Indicator)
        throw std::invalid_argument("exact_moments: closed forms require an indicator source");
    if (!(gamma > 0.0)) throw std::invalid_argument("exact_moments: gamma must be positive");
    const double s0 = source_moment(model.source, dim, 0);
    const double s2 = source_moment(model.source, dim, 2);
    const double s4 = source_moment(model.source, dim, 4);
    ExactMoments ex;
    ex.m0 = mu * s0 / gamma;
    const double b2 = s2 + (2.0 * dim / gamma) * s0;
    ex.m2 = mu * b2 / (gamma + 4.0 * mu);
    ex.m4 = (mu * s4 + (4.0 * dim + 8.0) * ex.m2) / (gamma + 8.0 * mu);
    return ex;
}

MomentReport check_moments(const SolveResult& solve, const ModelSpec& model,
                           const RadialMesh& mesh) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    MomentReport rep;
    const std::size_t n = mesh.n_unknowns();
    if (solve.U.size() != n)
        throw std::invalid_argument("check_moments: solution does not match the mesh");
    std::vector<double> ones(n, 1.0), r2(n), r4(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = mesh.node(j);
        r2[j] = r * r;
        r4[j] = r2[j] * r2[j];
    }
    rep.m0 = weighted_inner_product(ones, solve.U, mesh);
    rep.m2 = weighted_inner_product(r2, solve.U, mesh);
    rep.m4 = weighted_inner_product(r4, solve.U, mesh);

    rep.exact_available = model.potential.kind == PotentialKind::Quadratic &&
                          model.potential.a == 1.0 &&
                          model.source.kind == SourceKind::Indicator;
    if (rep.exact_available) {
        const ExactMoments ex = exact_moments(model, solve.mu, model.gamma, model.dim);
        rep.m0_exact = ex.m0;
        rep.m2_exact = ex.m2;
        rep.m4_exact = ex.m4;
        const double pairs[3][2] = {{rep.m0, ex.m0}, {rep.m2, ex.m2}, {rep.m4, ex.m4}};
        for (int i = 0; i < 3; ++i) {
            const double got = pairs[i][0], want = pairs[i][1];
            rep.rel_errors[static_cast<std::size_t>(i)] =
                want != 0.0 ? std::fabs(got - want) / std::fabs(want) : std::fabs(got);
        }
    } else {
        rep.m0_exact = rep.m2_exact = rep.m4_exact = nan;
        rep.rel_errors = {nan, nan, nan};
    }
    return rep;
}

AsymptoteReport check_asymptote(const ModelSpec& model, const RadialMesh& mesh,
                                const std::vector<double>& mu_samples) {
    AsymptoteReport rep;
    rep.mu_samples = mu_samples;
    rep.delta_at_origin = model.kernel.delta(0.0, model.dim);
    rep.predicted_slope =
        rep.delta_at_origin * source_moment(model.source, model.dim, 0) / model.gamma;
    rep.lambda_est = check_hypotheses(model, mesh).lambda_est;

    const AssembledSystem sys = assemble(model, mesh);
    for (double mu : mu_samples) {
        const SolveResult sol = solve_primal(sys, model, mu);
        const double ratio = mu > 0.0 ? sol.f_value / mu : 0.0;
        rep.ratio.push_back(ratio);
        rep.rel_deviation.push_back(rep.predicted_slope > 0.0
                                        ? std::fabs(ratio / rep.predicted_slope - 1.0)
                                        : std::fabs(ratio));
        // Resolution proxy: the solution concentrates on the scale
        // (lambda mu)^{-1/2}; demand at least 10 nodes inside it.
        std::size_t nodes_in_core = mesh.n_nodes;
        if (rep.lambda_est > 0.0 && mu > 0.0) {
            const double core = 1.0 / std::sqrt(rep.lambda_est * mu);
            nodes_in_core = static_cast<std::size_t>(std::floor(core / mesh.h)) + 1;
            if (nodes_in_core > mesh.n_nodes) nodes_in_core = mesh.n_nodes;
        }
        rep.core_nodes.push_back(nodes_in_core);
        rep.resolved.push_back(nodes_in_core >= 10);
    }
    rep.deviation_decreasing = rep.rel_deviation.size() >= 2;
    for (std::size_t i = 0; i + 1 < rep.rel_deviation.size(); ++i)
        if (!(rep.rel_deviation[i + 1] < rep.rel_deviation[i])) rep.deviation_decreasing = false;
    return rep;
}

}  // namespace radfp
