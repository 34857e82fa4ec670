#ifndef BCOL_OUTCOME_HPP
#define BCOL_OUTCOME_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "bcol/coloring.hpp"

namespace bcol {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("search budget exhausted") {}
};

// Cooperative node/time budget shared across search routines. A zero limit
// means unlimited. charge() is safe to call concurrently.
class Budget {
 public:
  Budget() = default;
  Budget(std::uint64_t node_limit, double seconds_limit)
      : node_limit_(node_limit),
        seconds_limit_(seconds_limit),
        start_(std::chrono::steady_clock::now()) {}

  void charge(std::uint64_t nodes = 1) {
    std::uint64_t used = nodes_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (node_limit_ != 0 && used > node_limit_) throw BudgetExceeded{};
    if (seconds_limit_ > 0 && (used >> 10) != ((used - nodes) >> 10)) {
      std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() > seconds_limit_) throw BudgetExceeded{};
    }
  }

  std::uint64_t used() const { return nodes_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t node_limit_ = 0;
  double seconds_limit_ = 0;
  std::chrono::steady_clock::time_point start_{};
  std::atomic<std::uint64_t> nodes_{0};
};

inline void charge(Budget* b, std::uint64_t nodes = 1) {
  if (b) b->charge(nodes);
}

struct SolveOptions {
  int jobs = 1;               // worker count for the parallel kernels
  Budget* budget = nullptr;   // nullable; unlimited when absent
};

enum class Answer { kYes, kNo, kBudgetExhausted };

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t precolorings_tried = 0;
  double elapsed_ms = 0;
  bool used_fallback = false;        // construction fallback ladder engaged
  bool bijection_gap_witness = false;  // naive bijection completion would conflict
};

struct SolveOutcome {
  Answer answer = Answer::kNo;
  int k = 0;
  std::optional<BCertificate> certificate;  // present iff answer == kYes
  std::string algorithm;
  std::string case_taken;
  SolveStats stats;
};

}  // namespace bcol

#endif
