#include "spinstar/collective.hpp"

#include <cmath>

namespace spinstar {

namespace {

// Exact binomial coefficient; the multiplicative form keeps every
// intermediate exactly divisible.
BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

std::vector<SectorSpec> sectors(int n) {
  if (n < 1) throw Error("sectors: bath size must be >= 1");
  std::vector<SectorSpec> out;
  // two_j runs over n, n-2, ..., down to 0 or 1.
  for (int two_j = n; two_j >= 0; two_j -= 2) {
    const int k = (n - two_j) / 2;
    out.push_back(SectorSpec{two_j, binomial(n, k) - binomial(n, k - 1)});
  }
  return out;
}

CollectiveOps collective_ops(int two_j) {
  if (two_j < 0) throw Error("collective_ops: two_j must be >= 0");
  const int d = two_j + 1;
  const double j = 0.5 * two_j;

  CollectiveOps ops;
  ops.jz = DenseMatrix::Zero(d, d);
  ops.jplus = DenseMatrix::Zero(d, d);
  for (int row = 0; row < d; ++row) {
    const double m = j - row;
    ops.jz(row, row) = m;
    // <j, m+1| J+ |j, m>; m+1 sits one row above in the descending basis.
    if (row > 0)
      ops.jplus(row - 1, row) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  ops.jminus = ops.jplus.adjoint();
  ops.jx = 0.5 * (ops.jplus + ops.jminus);
  ops.jy = Complex(0, -0.5) * (ops.jplus - ops.jminus);
  return ops;
}

}  // namespace spinstar
