#include "radfp/assembly.hpp"

#include <algorithm>
#include <stdexcept>

#include "radfp/io.hpp"

namespace radfp {

namespace {

// 8-point Gauss-Legendre rule on [-1, 1]; used only for Custom sources,
// where no closed form is available. Indicator loads are exact.
constexpr int kGlPoints = 8;
constexpr double kGlNode[kGlPoints] = {
    -0.96028985649753623, -0.79666647741362674, -0.52553240991632899, -0.18343464249564980,
    0.18343464249564980,  0.52553240991632899,  0.79666647741362674,  0.96028985649753623};
constexpr double kGlWeight[kGlPoints] = {
    0.10122853629037626, 0.22238103445337447, 0.31370664587788729, 0.36268378337836198,
    0.36268378337836198, 0.31370664587788729, 0.22238103445337447, 0.10122853629037626};

double gl_integrate(double a, double b, const std::function<double(double)>& f) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int k = 0; k < kGlPoints; ++k) sum += kGlWeight[k] * f(mid + half * kGlNode[k]);
    return half * sum;
}

/// Exact integral of the rising hat (r - left)/h times r^w over
/// [a, b] intersected with [lo, hi].
double rising_hat_integral(double left, double a, double b, double h, int w, double lo,
                           double hi) {
    const double alpha = std::max(a, lo);
    const double beta = std::min(b, hi);
    if (beta <= alpha) return 0.0;
    return (monomial_integral(alpha, beta, w + 1) - left * monomial_integral(alpha, beta, w)) / h;
}

/// Exact integral of the falling hat (right - r)/h times r^w over
/// [a, b] intersected with [lo, hi].
double falling_hat_integral(double right, double a, double b, double h, int w, double lo,
                            double hi) {
    const double alpha = std::max(a, lo);
    const double beta = std::min(b, hi);
    if (beta <= alpha) return 0.0;
    return (right * monomial_integral(alpha, beta, w) - monomial_integral(alpha, beta, w + 1)) / h;
}

std::vector<double> hat_load(const ModelSpec& model, const RadialMesh& mesh) {
    const std::size_t n = mesh.n_unknowns();
    const int w = mesh.dim - 1;
    const double h = mesh.h;
    std::vector<double> load(n, 0.0);
    if (model.source.kind == SourceKind::Indicator) {
        const double lo = model.source.r_lo;
        const double hi = model.source.r_hi;
        for (std::size_t j = 0; j < n; ++j) {
            const double rj = mesh.node(j);
            double v = 0.0;
            if (j > 0) v += rising_hat_integral(mesh.node(j - 1), mesh.node(j - 1), rj, h, w, lo, hi);
            v += falling_hat_integral(mesh.node(j + 1), rj, mesh.node(j + 1), h, w, lo, hi);
            load[j] = v;
        }
        return load;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double rj = mesh.node(j);
        double v = 0.0;
        if (j > 0) {
            const double rl = mesh.node(j - 1);
            v += gl_integrate(rl, rj, [&](double r) {
                return model.source.s(r) * (r - rl) / h * radial_weight(r, mesh.dim);
            });
        }
        const double rr = mesh.node(j + 1);
        v += gl_integrate(rj, rr, [&](double r) {
            return model.source.s(r) * (rr - r) / h * radial_weight(r, mesh.dim);
        });
        load[j] = v;
    }
    return load;
}

std::vector<double> cell_load(const ModelSpec& model, const RadialMesh& mesh) {
    const std::size_t n = mesh.n_unknowns();
    const int w = mesh.dim - 1;
    std::vector<double> load(n, 0.0);
    if (model.source.kind == SourceKind::Indicator) {
        for (std::size_t j = 0; j < n; ++j) {
            const double alpha = std::max(mesh.node(j), model.source.r_lo);
            const double beta = std::min(mesh.node(j + 1), model.source.r_hi);
            load[j] = beta > alpha ? monomial_integral(alpha, beta, w) : 0.0;
        }
        return load;
    }
    for (std::size_t j = 0; j < n; ++j) {
        load[j] = gl_integrate(mesh.node(j), mesh.node(j + 1), [&](double r) {
            return model.source.s(r) * radial_weight(r, mesh.dim);
        });
    }
    return load;
}

}  // namespace

AssembledSystem assemble(const ModelSpec& model, const RadialMesh& mesh, LoadStyle style) {
    if (model.dim != mesh.dim)
        throw std::invalid_argument("assemble: model.dim and mesh.dim disagree");
    AssembledSystem sys;
    sys.mesh = mesh;
    sys.size = mesh.n_unknowns();
    sys.load_style = style;
    sys.A = mass_matrix(mesh);
    sys.Mstiff = stiffness_matrix(mesh);

    const ModelTables tables = evaluate_model(model, mesh);
    // Drift links: g_k = r_k^{dim-1} phi'(r_k) evaluated at the *link's own
    // node*, so that every interior column of C sums to zero exactly.
    std::vector<double> g(mesh.n_nodes);
    for (std::size_t k = 0; k < mesh.n_nodes; ++k)
        g[k] = radial_weight(mesh.node(k), mesh.dim) * tables.dphi[k];
    sys.C = Tridiag(sys.size);
    for (std::size_t j = 0; j + 1 < sys.size; ++j) sys.C.super[j] = 0.5 * g[j + 1];
    for (std::size_t j = 1; j < sys.size; ++j) sys.C.sub[j] = -0.5 * g[j - 1];

    sys.load = style == LoadStyle::Hat ? hat_load(model, mesh) : cell_load(model, mesh);
    sys.delta.assign(tables.delta.begin(), tables.delta.begin() + static_cast<long>(sys.size));
    return sys;
}

Tridiag system_matrix(const AssembledSystem& sys, double mu, double gamma) {
    const std::size_t n = sys.size;
    Tridiag t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.diag[i] = gamma * sys.A.diag[i] - mu * sys.C.diag[i] + sys.Mstiff.diag[i];
        t.sub[i] = gamma * sys.A.sub[i] - mu * sys.C.sub[i] + sys.Mstiff.sub[i];
        t.super[i] = gamma * sys.A.super[i] - mu * sys.C.super[i] + sys.Mstiff.super[i];
    }
    return t;
}

void dump_system(const AssembledSystem& sys, double mu, double gamma, const std::string& path,
                 const std::string& provenance) {
    const Tridiag t = system_matrix(sys, mu, gamma);
    CsvWriter csv(path, provenance);
    csv.header({"index", "sub", "diag", "super", "load"});
    for (std::size_t i = 0; i < sys.size; ++i)
        csv.row({static_cast<double>(i), t.sub[i], t.diag[i], t.super[i], sys.load[i]});
    if (!csv.good()) throw std::runtime_error("dump_system: cannot write '" + path + "'");
}

}  // namespace radfp
