#pragma once

#include <cstdint>

namespace esakia {

// Caps for exhaustive work. Exceeding either raises BudgetExceeded.
struct Budget {
  std::uint64_t max_upsets = std::uint64_t{1} << 20;
  std::uint64_t max_tuples = std::uint64_t{1} << 26;
  // Worker threads for tuple scans; 0 means hardware concurrency.
  unsigned threads = 0;
};

}  // namespace esakia
