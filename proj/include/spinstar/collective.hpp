#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "spinstar/linalg.hpp"

namespace spinstar {

using BigInt = boost::multiprecision::cpp_int;

// One total-spin-j irrep of an N-spin-1/2 bath. j is carried as the integer
// two_j = 2j so half-integer sectors need no floating-point bookkeeping.
struct SectorSpec {
  int two_j = 0;
  // Number of copies of the spin-j irrep in (1/2)^(tensor N). Exceeds 64-bit
  // range around N = 70, hence arbitrary precision.
  BigInt multiplicity = 0;

  int dim() const { return two_j + 1; }
  double multiplicity_as_double() const {
    return multiplicity.convert_to<double>();
  }
};

// Clebsch-Gordan decomposition of N spin-1/2 particles into total-spin
// sectors, listed in descending j. Multiplicities are exact:
// C(N, N/2 - j) - C(N, N/2 - j - 1). Completeness
// sum multiplicity * (2j+1) = 2^N holds by construction.
std::vector<SectorSpec> sectors(int n);

// Spin-j angular momentum matrices in the |j,m> basis, m descending from j
// to -j, hbar = 1.
struct CollectiveOps {
  DenseMatrix jx, jy, jz, jplus, jminus;
};

CollectiveOps collective_ops(int two_j);

}  // namespace spinstar
