#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace permmob::detail {

/// Runs body(i) for i in [0, count) on `workers` OpenMP threads and returns
/// the results in index order. The first exception, by index, is rethrown.
template <typename Result, typename Body>
std::vector<Result> parallel_map(std::size_t count, int workers, Body&& body) {
  std::vector<Result> out(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers) if (workers > 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

template <typename Result, typename Body>
std::vector<Result> serial_map(std::size_t count, Body&& body) {
  std::vector<Result> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(body(i));
  return out;
}

}  // namespace permmob::detail
