#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>

namespace matrank {

// Raised when a search consumes more nodes than its configured cap.  Callers
// that own a whole search (reproduce, the CLI) convert this into an explicit
// "inconclusive" outcome; nothing is ever silently truncated.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

// Shared node counter for branch-and-bound and enumeration searches.
// A cap of 0 means unlimited.  charge() is safe to call concurrently.
class Budget {
 public:
  explicit Budget(std::uint64_t cap = 0) : cap_(cap), used_(0) {}

  void charge(std::uint64_t nodes = 1) {
    std::uint64_t now = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (cap_ != 0 && now > cap_) throw BudgetExceeded();
  }

  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_;
};

}  // namespace matrank
