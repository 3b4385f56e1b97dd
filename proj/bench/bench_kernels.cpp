// Wall-time comparison of the serial reference path against the OpenMP map
// for the two hot kernels: critical-line scans and quadrature node sweeps.
// The parallel path must agree bitwise with the serial one; reductions run
// in fixed index order.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "xifeq/parallel.hpp"
#include "xifeq/special_functions.hpp"
#include "xifeq/theta_kernel.hpp"

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <class Fn>
double time_ms(Fn&& fn) {
  const double t0 = now_ms();
  fn();
  return now_ms() - t0;
}

}  // namespace

int main() {
  const int grid_n = 1500;
  std::vector<double> ts(grid_n);
  for (int i = 0; i < grid_n; ++i) ts[i] = 0.5 + 59.0 * i / (grid_n - 1);

  auto xi_at = [&](std::size_t i) { return xifeq::xi_critical_line(ts[i]); };

  std::vector<double> serial_vals, parallel_vals;
  const double serial_scan =
      time_ms([&] { serial_vals = xifeq::map_indexed_serial(ts.size(), xi_at); });
  const double parallel_scan =
      time_ms([&] { parallel_vals = xifeq::map_indexed(ts.size(), xi_at); });
  const bool scan_match = serial_vals == parallel_vals;

  std::printf("critical-line scan, %d points\n", grid_n);
  std::printf("  serial   %8.1f ms\n", serial_scan);
  std::printf("  parallel %8.1f ms   speedup %.2fx   bitwise match: %s\n",
              parallel_scan, serial_scan / parallel_scan,
              scan_match ? "yes" : "NO");

  xifeq::quadrature_spec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-13;
  const xifeq::cplx s{2.0, 12.0};

#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
  omp_set_num_threads(1);
  xifeq::cplx v1;
  const double quad_single = time_ms([&] { v1 = xifeq::mellin_hbar(s, spec); });
  omp_set_num_threads(max_threads);
  xifeq::cplx vn;
  const double quad_multi = time_ms([&] { vn = xifeq::mellin_hbar(s, spec); });
  std::printf("kernel Mellin transform at s = 2+12i\n");
  std::printf("  1 thread  %8.1f ms\n", quad_single);
  std::printf("  %d threads %8.1f ms   speedup %.2fx   bitwise match: %s\n",
              max_threads, quad_multi, quad_single / quad_multi,
              v1 == vn ? "yes" : "NO");
  if (!scan_match || v1 != vn) return 1;
#else
  const double quad_serial = time_ms([&] { (void)xifeq::mellin_hbar(s, spec); });
  std::printf("kernel Mellin transform at s = 2+12i (no OpenMP): %8.1f ms\n",
              quad_serial);
  if (!scan_match) return 1;
#endif
  return 0;
}
