#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "kmatch/errors.hpp"

namespace kmatch::detail {

/// Runs `body(worker_index)` on `workers` threads (inline when 1) and rethrows
/// the first exception raised by any of them.
inline void run_workers(unsigned workers, const std::function<void(unsigned)>& body) {
  workers = std::max(1u, workers);
  if (workers == 1) {
    body(0);
    return;
  }
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

/// Shared node budget. Workers count locally and flush in batches.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  std::uint64_t used() const { return used_.load(); }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  void stop() { stop_.store(true); }

  class Meter {
   public:
    explicit Meter(NodeBudget& b) : b_(b) {}
    Meter(const Meter&) = delete;
    ~Meter() { b_.used_.fetch_add(local_); }

    void tick() {
      if (++local_ == kBatch) flush();
    }
    void flush() {
      const std::uint64_t total = b_.used_.fetch_add(local_) + local_;
      local_ = 0;
      if (total > b_.limit_) {
        b_.stop();
        throw BudgetExceeded("node budget of " + std::to_string(b_.limit_) + " exhausted", total);
      }
      if (b_.stopped()) throw BudgetExceeded("search aborted", total);
    }

   private:
    static constexpr std::uint64_t kBatch = 256;
    NodeBudget& b_;
    std::uint64_t local_ = 0;
  };

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> stop_{false};
};

}  // namespace kmatch::detail
