#pragma once

#include <cstddef>
#include <exception>

namespace pdiff::detail {

/// OpenMP loop over [0, count) that carries the first exception thrown by a
/// worker back to the caller.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(pdiff_parallel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace pdiff::detail
