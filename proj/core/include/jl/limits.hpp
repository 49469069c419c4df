#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "jl/error.hpp"

namespace jl {

/// Wall-clock deadline shared by long-running enumerations.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
    return d;
  }
  bool expired() const {
    return at_ && std::chrono::steady_clock::now() > *at_;
  }
  void check(const char* what) const {
    if (expired()) throw Timeout(std::string("time budget exhausted during ") + what);
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct Limits {
  std::uint64_t order_cap = 1000;     // full subgroup lattice
  std::uint64_t element_cap = 20000;  // explicit element listing
  std::size_t degree_cap = 64;        // constructed groups
  Deadline deadline;
};

}  // namespace jl
