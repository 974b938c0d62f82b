#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "spinstar/errors.hpp"

namespace spinstar {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. The universal carrier for operators and
// density matrices throughout the library.
using DenseMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct EigDecomposition {
  RealVector eigenvalues;    // ascending
  DenseMatrix eigenvectors;  // orthonormal columns
};

struct MatrixNorms {
  double op;  // largest singular value
  double hs;  // Frobenius / Hilbert-Schmidt
  double tr;  // sum of singular values
};

// max |A - A^dagger| over entries
double hermiticity_error(const DenseMatrix& a);

// Eigendecomposition of a Hermitian matrix. Throws NonHermitianError if the
// input deviates from Hermiticity by more than herm_tol, ShapeError if it is
// not square.
EigDecomposition hermitian_eig(const DenseMatrix& a, double herm_tol = 1e-10);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

// Trace out all subsystems not listed in `keep`. `dims` are the tensor factor
// dimensions in order; their product must equal dim(rho). `keep` holds
// ascending factor indices.
DenseMatrix partial_trace(const DenseMatrix& rho, const std::vector<int>& dims,
                          const std::vector<int>& keep);

// Operator, Hilbert-Schmidt and trace norms, from the singular values of A
// obtained via the eigendecomposition of A^dagger A.
MatrixNorms matrix_norms(const DenseMatrix& a);

DenseMatrix identity(int n);
DenseMatrix pauli_x();
DenseMatrix pauli_y();
DenseMatrix pauli_z();

// |psi><psi|
DenseMatrix ket_density(const ComplexVector& psi);

// Throws InvalidStateError unless rho is Hermitian, unit-trace and positive
// semidefinite within tol.
void require_density_matrix(const DenseMatrix& rho, double tol = 1e-10);

}  // namespace spinstar
