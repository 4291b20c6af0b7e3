#include "radfp/mesh.hpp"

#include <cmath>
#include <stdexcept>

#include "dd.hpp"

namespace radfp {

RadialMesh build_mesh(std::size_t n_intervals, int dim) {
    if (n_intervals < 2) throw std::invalid_argument("build_mesh: n_intervals must be >= 2");
    if (dim < 1) throw std::invalid_argument("build_mesh: dim must be >= 1");
    RadialMesh mesh;
    mesh.n_nodes = n_intervals + 1;
    mesh.h = 1.0 / static_cast<double>(n_intervals);
    mesh.dim = dim;
    return mesh;
}

HatBasis hat_basis(const RadialMesh& mesh, std::size_t index) {
    if (index >= mesh.n_nodes) throw std::invalid_argument("hat_basis: index out of range");
    HatBasis b;
    b.index = index;
    b.support_lo = index == 0 ? 0.0 : mesh.node(index - 1);
    b.support_hi = index + 1 < mesh.n_nodes ? mesh.node(index + 1) : 1.0;
    return b;
}

double hat_value(const RadialMesh& mesh, std::size_t index, double r) {
    const double rj = mesh.node(index);
    const double d = std::fabs(r - rj);
    if (d >= mesh.h) return 0.0;
    if (r < 0.0 || r > 1.0) return 0.0;
    return 1.0 - d / mesh.h;
}

double monomial_integral(double a, double b, int p) {
    if (p < 0) throw std::invalid_argument("monomial_integral: negative exponent");
    double pa = a, pb = b;
    for (int k = 0; k < p; ++k) {
        pa *= a;
        pb *= b;
    }
    return (pb - pa) / static_cast<double>(p + 1);
}

double radial_weight(double r, int dim) {
    double w = 1.0;
    for (int k = 1; k < dim; ++k) w *= r;
    return w;
}

namespace {

/// Closed-form integrals of hat-function products against r^w over one cell
/// [a, b] of width h. "fall" is the basis function decreasing across the
/// cell (attached to the left node), "rise" the increasing one.
struct CellIntegrals {
    double fall_fall;
    double rise_rise;
    double fall_rise;
    double grad_grad;  ///< integral of r^w / h^2 (gradients are +-1/h)
};

CellIntegrals cell_integrals(double a, double b, double h, int w) {
    const double i0 = monomial_integral(a, b, w);
    const double i1 = monomial_integral(a, b, w + 1);
    const double i2 = monomial_integral(a, b, w + 2);
    const double h2 = h * h;
    CellIntegrals c;
    c.fall_fall = (i2 - 2.0 * b * i1 + b * b * i0) / h2;
    c.rise_rise = (i2 - 2.0 * a * i1 + a * a * i0) / h2;
    c.fall_rise = (-i2 + (a + b) * i1 - a * b * i0) / h2;
    c.grad_grad = i0 / h2;
    return c;
}

}  // namespace

Tridiag mass_matrix(const RadialMesh& mesh) {
    const std::size_t n = mesh.n_unknowns();
    const int w = mesh.dim - 1;
    Tridiag A(n);
    for (std::size_t cell = 0; cell < mesh.n_intervals(); ++cell) {
        const double a = mesh.node(cell);
        const double b = mesh.node(cell + 1);
        const CellIntegrals c = cell_integrals(a, b, mesh.h, w);
        A.diag[cell] += c.fall_fall;
        if (cell + 1 < n) {
            A.diag[cell + 1] += c.rise_rise;
            A.super[cell] += c.fall_rise;
            A.sub[cell + 1] += c.fall_rise;
        }
    }
    return A;
}

Tridiag stiffness_matrix(const RadialMesh& mesh) {
    const std::size_t n = mesh.n_unknowns();
    const int w = mesh.dim - 1;
    Tridiag M(n);
    for (std::size_t cell = 0; cell < mesh.n_intervals(); ++cell) {
        const double a = mesh.node(cell);
        const double b = mesh.node(cell + 1);
        const CellIntegrals c = cell_integrals(a, b, mesh.h, w);
        M.diag[cell] += c.grad_grad;
        if (cell + 1 < n) {
            M.diag[cell + 1] += c.grad_grad;
            M.super[cell] -= c.grad_grad;
            M.sub[cell + 1] -= c.grad_grad;
        }
    }
    return M;
}

double weighted_inner_product(const std::vector<double>& f, const std::vector<double>& g,
                              const RadialMesh& mesh) {
    const std::size_t n = mesh.n_unknowns();
    if (f.size() != n || g.size() != n)
        throw std::invalid_argument("weighted_inner_product: one entry per unknown required");
    const Tridiag A = mass_matrix(mesh);
    // Accumulate f^T A g entry-pair-wise. Each partial term is a bitwise
    // symmetric function of (f, g), so swapping the arguments reproduces the
    // result exactly, not merely to rounding.
    detail::dd acc;
    for (std::size_t i = 0; i < n; ++i) {
        acc = detail::add(acc, detail::two_prod(A.diag[i], f[i] * g[i]));
        if (i + 1 < n) {
            const double cross = f[i] * g[i + 1] + f[i + 1] * g[i];
            acc = detail::add(acc, detail::two_prod(A.super[i], cross));
        }
    }
    return detail::round_to_double(acc);
}

}  // namespace radfp
