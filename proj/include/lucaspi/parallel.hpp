#pragma once

#include <cstddef>
#include <exception>
#include <limits>

#include <omp.h>

namespace lucaspi {

/// Selects the OpenMP kernel or the serial reference path for a sweep.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, count). Under Execution::parallel the loop is
/// shared across OpenMP threads with dynamic scheduling. The exception
/// raised at the lowest index is rethrown, so error reporting does not
/// depend on the thread schedule.
template <class Body>
void parallel_for(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::size_t first_index = std::numeric_limits<std::size_t>::max();
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(lucaspi_parallel_for_error)
      {
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

inline int max_threads() { return omp_get_max_threads(); }

}  // namespace lucaspi
