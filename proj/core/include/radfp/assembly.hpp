#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "radfp/mesh.hpp"
#include "radfp/model.hpp"
#include "radfp/tridiag.hpp"

namespace radfp {

/// How the source enters the right-hand side.
///   Hat:  load_j = exact integral of S chi_j r^{dim-1} dr (consistent P1
///         load; default).
///   Cell: load_j = integral of S r^{dim-1} dr over cell [r_j, r_{j+1}]
///         (piecewise-constant test functions; kept for cross-comparison).
enum class LoadStyle { Hat, Cell };

/// The assembled weighted-P1 system over the unknowns j = 0..N-1.
///
/// A is the mass matrix, Mstiff the stiffness matrix, and C the drift matrix
/// discretizing the divergence term: row j of C applies the centered form
///   (C U)_j = (g_{j+1} U_{j+1} - g_{j-1} U_{j-1}) / 2,  g_k = r_k^{dim-1} phi'(r_k),
/// i.e. super-diagonal +g_{j+1}/2 and sub-diagonal -g_{j-1}/2. Interior
/// column sums of C vanish, so the discrete drift transports mass without
/// creating or destroying it. Forcing exact skew-symmetry on the links
/// instead would inject a spurious absorption of size mu*(Laplacian of
/// phi)/2 and bias every moment of the solution; the centered form is kept
/// deliberately, and its symmetric part is O(h).
struct AssembledSystem {
    RadialMesh mesh;
    Tridiag A;                  ///< mass matrix in the r^{dim-1} measure
    Tridiag Mstiff;             ///< stiffness matrix
    Tridiag C;                  ///< mass-conserving centered drift matrix
    std::vector<double> load;   ///< source load vector, one entry per unknown
    std::vector<double> delta;  ///< kernel samples at the unknown nodes
    std::size_t size = 0;       ///< number of unknowns N
    LoadStyle load_style = LoadStyle::Hat;
};

AssembledSystem assemble(const ModelSpec& model, const RadialMesh& mesh,
                         LoadStyle style = LoadStyle::Hat);

/// gamma * A - mu * C + Mstiff.
Tridiag system_matrix(const AssembledSystem& sys, double mu, double gamma);

/// Writes the banded system at (mu, gamma) as CSV rows
/// (index, sub, diag, super, load).
void dump_system(const AssembledSystem& sys, double mu, double gamma, const std::string& path,
                 const std::string& provenance);

}  // namespace radfp
