#include "spinstar/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace spinstar {

double hermiticity_error(const DenseMatrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

EigDecomposition hermitian_eig(const DenseMatrix& a, double herm_tol) {
  if (a.rows() != a.cols())
    throw ShapeError("hermitian_eig: matrix is not square");
  if (hermiticity_error(a) > herm_tol)
    throw NonHermitianError("hermitian_eig: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw Error("hermitian_eig: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw ShapeError("kron: inputs must be square");
  const Eigen::Index da = a.rows(), db = b.rows();
  DenseMatrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a(i, j) * b;
  return out;
}

DenseMatrix partial_trace(const DenseMatrix& rho, const std::vector<int>& dims,
                          const std::vector<int>& keep) {
  long total = 1;
  for (int d : dims) total *= d;
  if (total != rho.rows() || rho.rows() != rho.cols())
    throw ShapeError("partial_trace: dims do not factor the matrix dimension");
  if (keep.empty()) throw ShapeError("partial_trace: keep set is empty");

  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw ShapeError("partial_trace: keep index out of range");
    kept[k] = true;
  }

  // Strides of each factor in the flat row-major index.
  std::vector<long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  std::vector<int> keep_idx, trace_idx;
  for (int i = 0; i < n; ++i) (kept[i] ? keep_idx : trace_idx).push_back(i);

  long dk = 1, dt = 1;
  for (int i : keep_idx) dk *= dims[i];
  for (int i : trace_idx) dt *= dims[i];

  // Flat offset of the c-th kept (resp. traced) multi-index.
  auto offsets = [&](const std::vector<int>& idx, long count) {
    std::vector<long> off(count, 0);
    for (long c = 0; c < count; ++c) {
      long rem = c;
      for (int p = static_cast<int>(idx.size()) - 1; p >= 0; --p) {
        const int f = idx[p];
        off[c] += (rem % dims[f]) * stride[f];
        rem /= dims[f];
      }
    }
    return off;
  };
  const std::vector<long> keep_off = offsets(keep_idx, dk);
  const std::vector<long> trace_off = offsets(trace_idx, dt);

  DenseMatrix out = DenseMatrix::Zero(dk, dk);
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < dk; ++c) {
      Complex sum = 0.0;
      for (long t = 0; t < dt; ++t)
        sum += rho(keep_off[r] + trace_off[t], keep_off[c] + trace_off[t]);
      out(r, c) = sum;
    }
  return out;
}

MatrixNorms matrix_norms(const DenseMatrix& a) {
  if (a.rows() != a.cols())
    throw ShapeError("matrix_norms: matrix is not square");
  const DenseMatrix gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(gram);
  MatrixNorms norms{0.0, 0.0, 0.0};
  double hs2 = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double s = std::sqrt(std::max(0.0, solver.eigenvalues()(i)));
    norms.op = std::max(norms.op, s);
    norms.tr += s;
    hs2 += s * s;
  }
  norms.hs = std::sqrt(hs2);
  return norms;
}

DenseMatrix identity(int n) { return DenseMatrix::Identity(n, n); }

DenseMatrix pauli_x() {
  DenseMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

DenseMatrix pauli_y() {
  DenseMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

DenseMatrix pauli_z() {
  DenseMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

DenseMatrix ket_density(const ComplexVector& psi) {
  return psi * psi.adjoint();
}

void require_density_matrix(const DenseMatrix& rho, double tol) {
  if (rho.rows() != rho.cols())
    throw InvalidStateError("density matrix is not square");
  if (hermiticity_error(rho) > tol)
    throw InvalidStateError("density matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > std::max(tol, 1e-8))
    throw InvalidStateError("density matrix trace differs from 1");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(rho);
  if (solver.eigenvalues().minCoeff() < -std::max(tol, 1e-9))
    throw InvalidStateError("density matrix has a negative eigenvalue");
}

}  // namespace spinstar
