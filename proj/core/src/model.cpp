#include "radfp/model.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "radfp/io.hpp"

namespace radfp {

// ---------------------------------------------------------------------------
// Potential

PotentialSpec PotentialSpec::quadratic(double a) {
    PotentialSpec p;
    p.kind = PotentialKind::Quadratic;
    p.a = a;
    return p;
}

PotentialSpec PotentialSpec::double_well(double a, double r_c) {
    PotentialSpec p;
    p.kind = PotentialKind::DoubleWell;
    p.a = a;
    p.r_c = r_c;
    return p;
}

PotentialSpec PotentialSpec::custom(std::function<double(double)> value,
                                    std::function<double(double)> deriv,
                                    std::function<double(double)> second_deriv) {
    PotentialSpec p;
    p.kind = PotentialKind::Custom;
    p.value = std::move(value);
    p.deriv = std::move(deriv);
    p.second_deriv = std::move(second_deriv);
    return p;
}

double PotentialSpec::phi(double r) const {
    switch (kind) {
        case PotentialKind::Quadratic:
            return a * r * r;
        case PotentialKind::DoubleWell: {
            const double d = r - r_c;
            return a * r * r * d * d;
        }
        case PotentialKind::Custom:
            return value(r);
    }
    return 0.0;
}

double PotentialSpec::dphi(double r) const {
    switch (kind) {
        case PotentialKind::Quadratic:
            return 2.0 * a * r;
        case PotentialKind::DoubleWell:
            return 2.0 * a * r * (r - r_c) * (2.0 * r - r_c);
        case PotentialKind::Custom:
            return deriv(r);
    }
    return 0.0;
}

double PotentialSpec::d2phi(double r) const {
    switch (kind) {
        case PotentialKind::Quadratic:
            return 2.0 * a;
        case PotentialKind::DoubleWell:
            return 2.0 * a * ((r - r_c) * (2.0 * r - r_c) + r * (4.0 * r - 3.0 * r_c));
        case PotentialKind::Custom:
            return second_deriv(r);
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Kernel

KernelSpec KernelSpec::gaussian_at_origin(double eps) {
    KernelSpec k;
    k.kind = KernelKind::GaussianAtOrigin;
    k.eps = eps;
    return k;
}

KernelSpec KernelSpec::shifted_gaussian(double eps, double r1) {
    KernelSpec k;
    k.kind = KernelKind::ShiftedGaussian;
    k.eps = eps;
    k.r1 = r1;
    return k;
}

KernelSpec KernelSpec::quartic_tail(double eps) {
    KernelSpec k;
    k.kind = KernelKind::QuarticTail;
    k.eps = eps;
    return k;
}

KernelSpec KernelSpec::custom(std::function<double(double)> value,
                              std::function<double(double)> deriv) {
    KernelSpec k;
    k.kind = KernelKind::Custom;
    k.value = std::move(value);
    k.deriv = std::move(deriv);
    return k;
}

namespace {
double gaussian_norm(double eps, int dim) {
    return std::pow(4.0 * std::acos(-1.0) * eps, -0.5 * dim);
}
}  // namespace

double KernelSpec::delta(double r, int dim) const {
    switch (kind) {
        case KernelKind::GaussianAtOrigin:
            return gaussian_norm(eps, dim) * std::exp(-r * r / eps);
        case KernelKind::ShiftedGaussian: {
            const double d = r - r1;
            return gaussian_norm(eps, dim) * std::exp(-d * d / eps);
        }
        case KernelKind::QuarticTail:
            return eps * r * r * r * r;
        case KernelKind::Custom:
            return value(r);
    }
    return 0.0;
}

double KernelSpec::ddelta(double r, int dim) const {
    switch (kind) {
        case KernelKind::GaussianAtOrigin:
            return -2.0 * r / eps * delta(r, dim);
        case KernelKind::ShiftedGaussian:
            return -2.0 * (r - r1) / eps * delta(r, dim);
        case KernelKind::QuarticTail:
            return 4.0 * eps * r * r * r;
        case KernelKind::Custom:
            return deriv(r);
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Source

SourceSpec SourceSpec::indicator(double r_lo, double r_hi) {
    SourceSpec s;
    s.kind = SourceKind::Indicator;
    s.r_lo = r_lo;
    s.r_hi = r_hi;
    return s;
}

SourceSpec SourceSpec::custom(std::function<double(double)> value) {
    SourceSpec s;
    s.kind = SourceKind::Custom;
    s.value = std::move(value);
    return s;
}

double SourceSpec::s(double r) const {
    switch (kind) {
        case SourceKind::Indicator:
            return (r >= r_lo && r <= r_hi) ? 1.0 : 0.0;
        case SourceKind::Custom:
            return value(r);
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Tables and hypothesis checks

ModelTables evaluate_model(const ModelSpec& model, const RadialMesh& mesh) {
    ModelTables t;
    const std::size_t n = mesh.n_nodes;
    t.phi.resize(n);
    t.dphi.resize(n);
    t.delta.resize(n);
    t.source.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = mesh.node(j);
        t.phi[j] = model.potential.phi(r);
        t.dphi[j] = model.potential.dphi(r);
        t.delta[j] = model.kernel.delta(r, model.dim);
        t.source[j] = model.source.s(r);
    }
    return t;
}

HypothesisReport check_hypotheses(const ModelSpec& model, const RadialMesh& mesh) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    HypothesisReport rep;
    rep.hphi_violation_r = nan;
    rep.hcm_violation_r = nan;
    rep.delta_violation_r = nan;

    // Sample radii: every node and every cell midpoint.
    const std::size_t n_samples = 2 * mesh.n_intervals() + 1;
    double lambda = std::numeric_limits<double>::infinity();
    double m = -std::numeric_limits<double>::infinity();
    bool hphi = true, dphi_ok = true, d2phi_ok = true, ddelta_ok = true;

    for (std::size_t k = 0; k < n_samples; ++k) {
        const double r = 0.5 * static_cast<double>(k) * mesh.h;
        const double eig_radial = model.potential.d2phi(r);
        const double eig_tangent =
            r > 0.0 ? model.potential.dphi(r) / r : model.potential.d2phi(0.0);
        const double lo = std::fmin(eig_radial, eig_tangent);
        const double hi = std::fmax(eig_radial, eig_tangent);
        if (lo < lambda) lambda = lo;
        if (hi > m) m = hi;
        if (hphi && lo <= 0.0) {
            hphi = false;
            rep.hphi_violation_r = r;
        }
        const bool cond_dphi = model.potential.dphi(r) >= 0.0;
        const bool cond_d2phi = eig_radial >= 0.0;
        const bool cond_ddelta = model.kernel.ddelta(r, model.dim) <= 0.0;
        if (!cond_dphi) dphi_ok = false;
        if (!cond_d2phi) d2phi_ok = false;
        if (!cond_ddelta) ddelta_ok = false;
        if ((!cond_dphi || !cond_d2phi || !cond_ddelta) && std::isnan(rep.hcm_violation_r))
            rep.hcm_violation_r = r;
    }
    rep.lambda_est = lambda;
    rep.m_est = m;
    rep.hphi_ok = hphi && lambda > 0.0;
    rep.dphi_nonneg = dphi_ok;
    rep.d2phi_nonneg = d2phi_ok;
    rep.ddelta_nonpos = ddelta_ok;
    rep.hcm_ok = dphi_ok && d2phi_ok && ddelta_ok;

    // delta must stay bounded away from zero on a neighborhood of the
    // origin; the concrete surrogate is delta >= delta(0)/2 on [0, 5h].
    rep.delta_at_origin = model.kernel.delta(0.0, model.dim);
    if (rep.delta_at_origin > 0.0) {
        bool ok = true;
        for (std::size_t k = 0; k <= 10 && ok; ++k) {
            const double r = 0.5 * static_cast<double>(k) * mesh.h;
            if (r > 1.0) break;
            if (model.kernel.delta(r, model.dim) < 0.5 * rep.delta_at_origin) {
                ok = false;
                rep.delta_violation_r = r;
            }
        }
        rep.delta_positive_near_origin = ok;
    } else {
        rep.delta_positive_near_origin = false;
        rep.delta_violation_r = 0.0;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Config text

ConfigError::ConfigError(const std::string& msg, int line_no_, std::string line_)
    : std::runtime_error(msg + " (line " + std::to_string(line_no_) + ": \"" + line_ + "\")"),
      line_no(line_no_),
      line(std::move(line_)) {}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

double parse_double(const std::string& s, const char* what, int line_no, const std::string& line) {
    const std::string t = trim(s);
    if (t.empty()) throw ConfigError(std::string("missing number for ") + what, line_no, line);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || !std::isfinite(v))
        throw ConfigError(std::string("malformed number for ") + what + ": '" + t + "'", line_no,
                          line);
    return v;
}

long parse_integer(const std::string& s, const char* what, int line_no, const std::string& line) {
    const std::string t = trim(s);
    if (t.empty()) throw ConfigError(std::string("missing integer for ") + what, line_no, line);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size())
        throw ConfigError(std::string("malformed integer for ") + what + ": '" + t + "'", line_no,
                          line);
    return v;
}

void expect_args(const std::vector<std::string>& parts, std::size_t n, const char* what,
                 int line_no, const std::string& line) {
    if (parts.size() != n + 1)
        throw ConfigError(std::string(what) + " expects " + std::to_string(n) + " parameter(s)",
                          line_no, line);
}

}  // namespace

ProblemConfig parse_config(std::istream& in) {
    ProblemConfig cfg;
    cfg.model.potential = PotentialSpec::quadratic(2.0);
    cfg.model.kernel = KernelSpec::gaussian_at_origin(1e-3);
    cfg.model.source = SourceSpec::indicator(0.3, 0.5);

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key=value", line_no, line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "potential") {
            const auto parts = split(value, ':');
            if (parts[0] == "quadratic") {
                expect_args(parts, 1, "potential=quadratic", line_no, line);
                cfg.model.potential =
                    PotentialSpec::quadratic(parse_double(parts[1], "a", line_no, line));
            } else if (parts[0] == "doublewell") {
                expect_args(parts, 2, "potential=doublewell", line_no, line);
                cfg.model.potential =
                    PotentialSpec::double_well(parse_double(parts[1], "a", line_no, line),
                                               parse_double(parts[2], "r_c", line_no, line));
            } else {
                throw ConfigError("unknown potential '" + parts[0] + "'", line_no, line);
            }
        } else if (key == "kernel") {
            const auto parts = split(value, ':');
            if (parts[0] == "gauss0") {
                expect_args(parts, 1, "kernel=gauss0", line_no, line);
                cfg.model.kernel =
                    KernelSpec::gaussian_at_origin(parse_double(parts[1], "eps", line_no, line));
            } else if (parts[0] == "gauss") {
                expect_args(parts, 2, "kernel=gauss", line_no, line);
                cfg.model.kernel =
                    KernelSpec::shifted_gaussian(parse_double(parts[1], "eps", line_no, line),
                                                 parse_double(parts[2], "r1", line_no, line));
            } else if (parts[0] == "quartic") {
                expect_args(parts, 1, "kernel=quartic", line_no, line);
                cfg.model.kernel =
                    KernelSpec::quartic_tail(parse_double(parts[1], "eps", line_no, line));
            } else {
                throw ConfigError("unknown kernel '" + parts[0] + "'", line_no, line);
            }
        } else if (key == "source") {
            const auto parts = split(value, ':');
            if (parts[0] == "indicator") {
                expect_args(parts, 2, "source=indicator", line_no, line);
                const double lo = parse_double(parts[1], "r_lo", line_no, line);
                const double hi = parse_double(parts[2], "r_hi", line_no, line);
                if (!(0.0 <= lo && lo < hi && hi <= 1.0))
                    throw ConfigError("indicator bounds must satisfy 0 <= r_lo < r_hi <= 1",
                                      line_no, line);
                cfg.model.source = SourceSpec::indicator(lo, hi);
            } else {
                throw ConfigError("unknown source '" + parts[0] + "'", line_no, line);
            }
        } else if (key == "gamma") {
            const double g = parse_double(value, "gamma", line_no, line);
            if (!(g > 0.0)) throw ConfigError("gamma must be positive", line_no, line);
            cfg.model.gamma = g;
        } else if (key == "dim") {
            const long d = parse_integer(value, "dim", line_no, line);
            if (d < 1) throw ConfigError("dim must be >= 1", line_no, line);
            cfg.model.dim = static_cast<int>(d);
        } else if (key == "n_intervals") {
            const long n = parse_integer(value, "n_intervals", line_no, line);
            if (n < 2) throw ConfigError("n_intervals must be >= 2", line_no, line);
            cfg.n_intervals = static_cast<std::size_t>(n);
        } else {
            throw ConfigError("unknown key '" + key + "'", line_no, line);
        }
    }
    return cfg;
}

ProblemConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'", 0, path);
    return parse_config(in);
}

namespace {

std::string potential_token(const PotentialSpec& p) {
    switch (p.kind) {
        case PotentialKind::Quadratic:
            return "quadratic:" + g17(p.a);
        case PotentialKind::DoubleWell:
            return "doublewell:" + g17(p.a) + ":" + g17(p.r_c);
        case PotentialKind::Custom:
            return "custom";
    }
    return "";
}

std::string kernel_token(const KernelSpec& k) {
    switch (k.kind) {
        case KernelKind::GaussianAtOrigin:
            return "gauss0:" + g17(k.eps);
        case KernelKind::ShiftedGaussian:
            return "gauss:" + g17(k.eps) + ":" + g17(k.r1);
        case KernelKind::QuarticTail:
            return "quartic:" + g17(k.eps);
        case KernelKind::Custom:
            return "custom";
    }
    return "";
}

std::string source_token(const SourceSpec& s) {
    switch (s.kind) {
        case SourceKind::Indicator:
            return "indicator:" + g17(s.r_lo) + ":" + g17(s.r_hi);
        case SourceKind::Custom:
            return "custom";
    }
    return "";
}

}  // namespace

std::string format_config(const ProblemConfig& cfg) {
    std::ostringstream out;
    out << "potential=" << potential_token(cfg.model.potential) << "\n"
        << "kernel=" << kernel_token(cfg.model.kernel) << "\n"
        << "source=" << source_token(cfg.model.source) << "\n"
        << "gamma=" << g17(cfg.model.gamma) << "\n"
        << "dim=" << cfg.model.dim << "\n"
        << "n_intervals=" << cfg.n_intervals << "\n";
    return out.str();
}

std::string config_provenance(const ProblemConfig& cfg) {
    std::ostringstream out;
    out << "potential=" << potential_token(cfg.model.potential)
        << " kernel=" << kernel_token(cfg.model.kernel)
        << " source=" << source_token(cfg.model.source) << " gamma=" << g17(cfg.model.gamma)
        << " dim=" << cfg.model.dim << " n_intervals=" << cfg.n_intervals;
    return out.str();
}

}  // namespace radfp
