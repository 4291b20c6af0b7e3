#pragma once

#include <cstddef>
#include <vector>

#include "radfp/tridiag.hpp"

namespace radfp {

/// Uniform grid on [0,1]: n_nodes = N+1 points r_j = j*h with h = 1/N.
/// All integrals on this mesh carry the weight r^{dim-1}. Unknowns live at
/// nodes j = 0..N-1; the value at r = 1 is pinned to zero (homogeneous
/// Dirichlet boundary), which drops the last basis function.
struct RadialMesh {
    std::size_t n_nodes = 0;  ///< N + 1 grid points
    double h = 0.0;           ///< spacing h = 1/N
    int dim = 0;              ///< spatial dimension n >= 1 (weight exponent dim-1)

    std::size_t n_intervals() const noexcept { return n_nodes - 1; }
    std::size_t n_unknowns() const noexcept { return n_nodes - 1; }
    double node(std::size_t j) const noexcept { return static_cast<double>(j) * h; }
};

/// Piecewise-linear basis function attached to node `index`. chi_0 is the
/// boundary half-hat on [0,h] with chi_0(0) = 1; interior hats span two cells.
struct HatBasis {
    std::size_t index = 0;
    double support_lo = 0.0;
    double support_hi = 0.0;
};

/// Builds the mesh; throws std::invalid_argument when n_intervals < 2 or
/// dim < 1.
RadialMesh build_mesh(std::size_t n_intervals, int dim);

HatBasis hat_basis(const RadialMesh& mesh, std::size_t index);

/// Value of the hat function chi_index at radius r.
double hat_value(const RadialMesh& mesh, std::size_t index, double r);

/// Exact integral of r^p over [a, b] for integer p >= 0.
double monomial_integral(double a, double b, int p);

/// r^{dim-1}, with 0^0 = 1 for dim = 1.
double radial_weight(double r, int dim);

/// Mass matrix A_ij = integral of chi_i chi_j r^{dim-1} dr over the retained
/// basis functions. Entries are closed-form polynomial integrals; no
/// numerical quadrature is involved.
Tridiag mass_matrix(const RadialMesh& mesh);

/// Stiffness matrix M_ij = integral of chi_i' chi_j' r^{dim-1} dr, same
/// closed-form treatment as mass_matrix.
Tridiag stiffness_matrix(const RadialMesh& mesh);

/// f^T A g in the weighted measure: the exact integral of the two P1
/// interpolants' product against r^{dim-1} dr. Exactly symmetric in (f, g)
/// by construction. Vectors carry one entry per unknown; mismatched lengths
/// raise std::invalid_argument.
double weighted_inner_product(const std::vector<double>& f, const std::vector<double>& g,
                              const RadialMesh& mesh);

}  // namespace radfp
