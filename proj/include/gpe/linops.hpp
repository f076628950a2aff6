#pragma once

#include "gpe/field.hpp"
#include "gpe/grid.hpp"

namespace gpe {

/// Complex tridiagonal matrix of size n x n, stored by bands.
struct Tridiag {
    ComplexVec sub;   // size n-1
    ComplexVec diag;  // size n
    ComplexVec sup;   // size n-1

    std::size_t size() const { return diag.size(); }
};

/// Nonnegative diagonal operator (the |u|^2 weights).
struct DiagOp {
    std::vector<double> diag;
};

/// (1/2) d^2/dx^2 on the interior nodes with Dirichlet rows at the ends:
/// diagonal -1/dx^2, off-diagonals 1/(2 dx^2).
Tridiag laplacian_half(const SpaceGrid& grid);

/// d^2/dx^2 on the interior nodes (the 1/dx^2 * (1,-2,1) stencil).
Tridiag laplacian(const SpaceGrid& grid);

/// diag(|u_j|^2) for the stored samples of f.
DiagOp nonlinear_diag(const WaveField& f);

/// y = A x.
ComplexVec apply_tridiag(const Tridiag& A, const ComplexVec& x);

/// A scaled entrywise by s.
Tridiag scaled(const Tridiag& A, Complex s);

/// Solves A x = b by the Thomas algorithm (no pivoting). Throws
/// std::runtime_error when a pivot falls below 1e-14 times the matrix scale.
/// The systems arising here (identity plus anti-Hermitian tridiagonal) are
/// always safely nonsingular.
ComplexVec thomas_solve(const Tridiag& A, const ComplexVec& b);

}  // namespace gpe
