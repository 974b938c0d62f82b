// Timing comparison between the sector-decomposed evolution and the serial
// full-tensor-product reference, plus a thread-scaling probe of the sector
// path. Results go to stdout; pass a bath size to override the default grid.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "spinstar/reference.hpp"

using namespace spinstar;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = a + (b - a) * k / (n - 1);
  return out;
}

DenseMatrix ket1_density() {
  ComplexVector v = ComplexVector::Zero(2);
  v(1) = 1.0;
  return ket_density(v);
}

template <typename F>
double time_once(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const auto times = linspace(0.0, 10.0, 200);
  const DenseMatrix rho0 = ket1_density();

  std::printf("single-qubit trajectory, 200 time points\n");
  std::printf("%6s %12s %12s %10s\n", "N", "sector [s]", "full [s]",
              "max diff");
  // N = 8 already means 200 dense propagations in a 512-dim space; anything
  // larger turns the serial reference into an hours-long run.
  for (int n : {4, 6, 8}) {
    const ModelConfig cfg{2.0, 2.0, 1.0, n, 1.0, true};
    Trajectory fast, slow;
    const double t_fast =
        time_once([&] { fast = evolve_single(cfg, rho0, times); });
    const double t_slow =
        time_once([&] { slow = reference::evolve_single(cfg, rho0, times); });
    double diff = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k)
      diff = std::max(
          diff, (fast.states[k] - slow.states[k]).cwiseAbs().maxCoeff());
    std::printf("%6d %12.4f %12.4f %10.2e\n", n, t_fast, t_slow, diff);
  }

  const int big = argc > 1 ? std::atoi(argv[1]) : 150;
  std::printf("\nsector path only, N = %d (full space is out of reach)\n",
              big);
  const ModelConfig cfg{2.0, 2.0, 1.0, big, 1.0, true};
  const int max_threads = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    if (threads > max_threads && threads != 1) continue;
    omp_set_num_threads(threads);
    const double t =
        time_once([&] { evolve_single(cfg, rho0, times); });
    std::printf("  %d thread(s): %.3f s\n", threads, t);
  }
  omp_set_num_threads(max_threads);
  return 0;
}
