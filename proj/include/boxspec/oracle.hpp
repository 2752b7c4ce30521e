#pragma once

#include <cstddef>
#include <vector>

namespace boxspec::oracle {

/// Dense symmetric matrix, row-major. The brute-force side of every
/// analytic claim in this project lives on these.
class DenseSymMatrix {
public:
    DenseSymMatrix(std::size_t order, std::vector<double> entries);
    static DenseSymMatrix zero(std::size_t order);

    std::size_t order() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const std::vector<double>& entries() const { return a_; }

    /// Symmetric within 1e-14 relative.
    bool is_symmetric() const;

private:
    std::size_t n_;
    std::vector<double> a_;
};

inline constexpr std::size_t kDenseOrderLimit = 4096;

/// All eigenvalues ascending, via cyclic Jacobi rotations with a
/// deterministic sweep order. Rejects non-symmetric input and orders
/// beyond the desk-scale bound.
std::vector<double> symmetric_eigen_dense(const DenseSymMatrix& m);

/// Householder tridiagonalization followed by implicit-shift QL. Same
/// contract as symmetric_eigen_dense but scales to the large FD grids
/// where Jacobi's O(n^3)-per-sweep cost is prohibitive; cross-checked
/// against the Jacobi kernel in the test suite.
std::vector<double> symmetric_eigen_large(const DenseSymMatrix& m);

/// Eigenvalues of a symmetric tridiagonal matrix (diag, offdiag),
/// ascending. offdiag has size n-1.
std::vector<double> tridiagonal_eigen(std::vector<double> diag, std::vector<double> offdiag);

/// A (x) I + I (x) B; the discrete model whose spectrum is the Minkowski
/// sum of the factor spectra.
DenseSymMatrix kronecker_sum(const DenseSymMatrix& a, const DenseSymMatrix& b);

/// Tridiagonal (2,-1)/h^2 Dirichlet stencil on an interval,
/// h = length/(points+1).
DenseSymMatrix fd_dirichlet_interval_matrix(double length, std::size_t points);

/// Its eigenvalues, ascending. These approximate -Laplace Dirichlet
/// eigenvalues (k pi / length)^2; the factor-4 conversion to box
/// eigenvalues is the caller's concern.
std::vector<double> fd_dirichlet_interval(double length, std::size_t points);

/// 5-point -Laplace stencil on the nx x ny interior grid of an a x b
/// rectangle. Equals kronecker_sum of the two interval operators entry
/// for entry.
DenseSymMatrix fd_dirichlet_rect_matrix(double a, double b, std::size_t nx, std::size_t ny);

/// 5-point -Laplace stencil on the grid nodes strictly inside the disc,
/// zero values outside (Dirichlet). Smallest eigenvalue converges to
/// (j_{0,1}/radius)^2 with staircase-boundary O(step) error.
std::vector<double> fd_dirichlet_disc(double radius, double step);

/// Number of grid nodes strictly inside the disc (the matrix order).
std::size_t disc_interior_node_count(double radius, double step);

/// Eigenvalues of the discrete box_0 quadratic form on an a x b rectangle
/// with free (natural) boundary: dbar is one-sided forward differences
/// averaged onto the (nx-1) x (ny-1) cell grid, and the operator is
/// dbar^H dbar on the nx x ny node grid. The complex Hermitian form is
/// realized as a real symmetric matrix of doubled order; the returned
/// list has the nx*ny complex-operator eigenvalues. The kernel (discrete
/// holomorphic functions, the stand-in for the Bergman space) has
/// dimension at least nx + ny - 1.
std::vector<double> fd_box0_rectangle(double a, double b, std::size_t nx, std::size_t ny);

}  // namespace boxspec::oracle
