#pragma once

#include <cstddef>
#include <vector>

namespace radfp {

/// Tridiagonal matrix in banded storage. Row i holds sub[i] (column i-1),
/// diag[i] (column i) and super[i] (column i+1); sub[0] and super[n-1] are
/// not part of the matrix and are kept at zero.
struct Tridiag {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;

    Tridiag() = default;
    explicit Tridiag(std::size_t n) : sub(n, 0.0), diag(n, 0.0), super(n, 0.0) {}

    std::size_t size() const noexcept { return diag.size(); }
};

/// Transpose: swaps the two off-diagonals with the matching index shift.
Tridiag transpose(const Tridiag& t);

/// y = T x. Throws std::invalid_argument on size mismatch.
std::vector<double> matvec(const Tridiag& t, const std::vector<double>& x);

/// Infinity norm (maximum absolute row sum).
double inf_norm(const Tridiag& t);

/// Compensated sum of a vector (Neumaier); error stays at a few ulps of the
/// exact result regardless of length.
double comp_sum(const std::vector<double>& v);

/// Compensated dot product: products are split exactly with fma and
/// accumulated in double-double arithmetic, then rounded once at the end.
double comp_dot(const std::vector<double>& a, const std::vector<double>& b);

/// LU factorization of a tridiagonal matrix without pivoting (Thomas
/// algorithm). The systems assembled here are positive definite, so pivoting
/// is unnecessary; a vanishing pivot therefore signals corrupted inputs and
/// raises std::runtime_error.
struct TridiagLU {
    std::vector<double> lower;  ///< elimination multipliers, lower[0] unused
    std::vector<double> pivot;  ///< diagonal of U
    std::vector<double> upper;  ///< super-diagonal of U (copy of input super)

    std::size_t size() const noexcept { return pivot.size(); }
};

TridiagLU factorize(const Tridiag& t);

/// Solves (LU) x = b by forward and back substitution.
std::vector<double> lu_solve(const TridiagLU& lu, const std::vector<double>& b);

/// Solves T x = b: Thomas elimination followed by iterative refinement with
/// the residual b - T x accumulated in double-double arithmetic, so the
/// returned x is forward-accurate to near machine precision even when the
/// plain elimination loses digits. If residual_out is non-null it receives
/// the final relative residual |b - T x|_inf / (|b|_inf + |T|_inf |x|_inf).
std::vector<double> solve_refined(const Tridiag& t, const std::vector<double>& b,
                                  double* residual_out = nullptr);

}  // namespace radfp
