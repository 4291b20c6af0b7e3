#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "radfp/mesh.hpp"

namespace radfp {

enum class PotentialKind { Quadratic, DoubleWell, Custom };

/// Radial potential.
///   Quadratic(a):      phi(r) = a r^2
///   DoubleWell(a,r_c): phi(r) = a r^2 (r - r_c)^2
///   Custom:            user callables for phi, phi', phi''
struct PotentialSpec {
    PotentialKind kind = PotentialKind::Quadratic;
    double a = 1.0;
    double r_c = 0.0;
    std::function<double(double)> value, deriv, second_deriv;  // Custom only

    static PotentialSpec quadratic(double a);
    static PotentialSpec double_well(double a, double r_c);
    static PotentialSpec custom(std::function<double(double)> value,
                                std::function<double(double)> deriv,
                                std::function<double(double)> second_deriv);

    double phi(double r) const;
    double dphi(double r) const;
    double d2phi(double r) const;
};

enum class KernelKind { GaussianAtOrigin, ShiftedGaussian, QuarticTail, Custom };

/// Constraint kernel delta >= 0. The Gaussian forms are normalized by
/// (4 pi eps)^{dim/2}; QuarticTail is delta(r) = eps r^4 (it vanishes at the
/// origin, which the hypothesis checks flag).
struct KernelSpec {
    KernelKind kind = KernelKind::GaussianAtOrigin;
    double eps = 1e-3;
    double r1 = 0.0;
    std::function<double(double)> value, deriv;  // Custom only

    static KernelSpec gaussian_at_origin(double eps);
    static KernelSpec shifted_gaussian(double eps, double r1);
    static KernelSpec quartic_tail(double eps);
    static KernelSpec custom(std::function<double(double)> value,
                             std::function<double(double)> deriv);

    double delta(double r, int dim) const;
    double ddelta(double r, int dim) const;
};

enum class SourceKind { Indicator, Custom };

/// Source S >= 0 supported in [0,1].
struct SourceSpec {
    SourceKind kind = SourceKind::Indicator;
    double r_lo = 0.3;
    double r_hi = 0.5;
    std::function<double(double)> value;  // Custom only

    static SourceSpec indicator(double r_lo, double r_hi);
    static SourceSpec custom(std::function<double(double)> value);

    double s(double r) const;
};

struct ModelSpec {
    PotentialSpec potential;
    KernelSpec kernel;
    SourceSpec source;
    double gamma = 1.0;  ///< absorption rate, > 0
    int dim = 3;         ///< spatial dimension n
};

/// Model data sampled at every mesh node (length n_nodes).
struct ModelTables {
    std::vector<double> phi, dphi, delta, source;
};

ModelTables evaluate_model(const ModelSpec& model, const RadialMesh& mesh);

/// Sampled verdicts on the structural hypotheses, evaluated at all nodes and
/// cell midpoints. For radial data the Hessian eigenvalues of phi are
/// phi''(r) and phi'(r)/r (the latter read as phi''(0) at r = 0).
struct HypothesisReport {
    bool hphi_ok = false;      ///< 0 < lambda_est (uniform convexity window)
    double lambda_est = 0.0;   ///< smallest sampled Hessian eigenvalue
    double m_est = 0.0;        ///< largest sampled Hessian eigenvalue
    bool hcm_ok = false;       ///< all three comparison conditions hold
    bool dphi_nonneg = false;  ///< phi' >= 0 at all samples
    bool d2phi_nonneg = false; ///< phi'' >= 0 at all samples
    bool ddelta_nonpos = false;///< delta' <= 0 at all samples
    bool delta_positive_near_origin = false;  ///< delta >= delta(0)/2 > 0 on [0, 5h]
    double delta_at_origin = 0.0;
    // Radius of the first violating sample per failed flag (NaN when the
    // flag holds).
    double hphi_violation_r = 0.0;
    double hcm_violation_r = 0.0;
    double delta_violation_r = 0.0;
};

HypothesisReport check_hypotheses(const ModelSpec& model, const RadialMesh& mesh);

/// A parsed problem description: the model plus the mesh resolution.
struct ProblemConfig {
    ModelSpec model;
    std::size_t n_intervals = 2000;
};

/// Raised on malformed configuration text; carries the offending line.
struct ConfigError : std::runtime_error {
    int line_no;
    std::string line;
    ConfigError(const std::string& msg, int line_no_, std::string line_);
};

/// Parses `key=value` configuration lines. Recognized keys:
///   potential=quadratic:<a> | doublewell:<a>:<r_c>
///   kernel=gauss0:<eps> | gauss:<eps>:<r1> | quartic:<eps>
///   source=indicator:<r_lo>:<r_hi>
///   gamma=<v>   dim=<n>   n_intervals=<N>
/// Blank lines and lines starting with '#' are ignored; unknown keys and
/// malformed values raise ConfigError. Missing keys keep their defaults
/// (the quadratic/Gaussian model above at gamma=1, dim=3, N=2000).
ProblemConfig parse_config(std::istream& in);
ProblemConfig parse_config_file(const std::string& path);

/// Serializes a config in the grammar accepted by parse_config; numbers are
/// printed with enough digits to round-trip.
std::string format_config(const ProblemConfig& cfg);

/// Single-line `key=value ...` form of format_config, for provenance headers.
std::string config_provenance(const ProblemConfig& cfg);

}  // namespace radfp
