#ifndef BCOL_SRC_CHUNK_SCAN_HPP
#define BCOL_SRC_CHUNK_SCAN_HPP

#include <atomic>
#include <exception>
#include <stdexcept>

#include "bcol/outcome.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bcol::detail {

struct ChunkScanResult {
  int success = -1;     // smallest succeeding index, -1 if none
  int budget_hit = -1;  // smallest index that ran out of budget, -1 if none
};

// Evaluates fn(i) -> bool over [0, count), possibly in parallel, and reports
// the smallest succeeding index. Matches the serial scan order semantics: a
// success is only reported if no earlier index ran out of budget. Indices
// beyond a known success may be skipped.
template <typename Fn>
ChunkScanResult scan_chunk(int count, int jobs, Fn&& fn) {
  ChunkScanResult res;
  std::atomic<int> best_success{count};
  std::atomic<int> first_budget{count};
  std::exception_ptr error = nullptr;

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) if (jobs > 1)
  for (int i = 0; i < count; ++i) {
    if (error != nullptr) continue;
    if (best_success.load(std::memory_order_relaxed) <= i) continue;
    try {
      if (fn(i)) {
        int cur = best_success.load(std::memory_order_relaxed);
        while (i < cur &&
               !best_success.compare_exchange_weak(cur, i,
                                                   std::memory_order_relaxed)) {
        }
      }
    } catch (const BudgetExceeded&) {
      int cur = first_budget.load(std::memory_order_relaxed);
      while (i < cur &&
             !first_budget.compare_exchange_weak(cur, i,
                                                 std::memory_order_relaxed)) {
      }
    } catch (...) {
#pragma omp critical(bcol_chunk_scan_error)
      if (error == nullptr) error = std::current_exception();
    }
  }
  if (error != nullptr) std::rethrow_exception(error);

  const int s = best_success.load();
  const int b = first_budget.load();
  if (s < count && (b == count || s < b)) {
    res.success = s;
  } else if (b < count) {
    res.budget_hit = b;
  }
  return res;
}

}  // namespace bcol::detail

#endif
