#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <utility>
#include <vector>

namespace xifeq {

// Minimum job count before the OpenMP path kicks in; below this the serial
// loop wins on scheduling overhead.
inline constexpr std::size_t parallel_grain = 64;

// Serial reference path: evaluate f(i) for i in [0, n) in index order.
template <class F>
auto map_indexed_serial(std::size_t n, F&& f) {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

// Evaluate f(i) for i in [0, n), in parallel when built with OpenMP.
// Results land at their index, so any reduction over the output in index
// order is deterministic regardless of thread count. f must be a pure
// function of i. The first exception thrown by f is rethrown after the
// loop joins.
template <class F>
auto map_indexed(std::size_t n, F&& f) {
  using R = std::invoke_result_t<F&, std::size_t>;
#ifdef _OPENMP
  if (n >= parallel_grain) {
    std::vector<R> out(n);
    std::exception_ptr first_error;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      try {
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(xifeq_map_indexed_error)
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return out;
  }
#endif
  return map_indexed_serial(n, std::forward<F>(f));
}

}  // namespace xifeq
