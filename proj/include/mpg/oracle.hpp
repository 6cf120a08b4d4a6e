#pragma once

#include "mpg/arena.hpp"
#include "mpg/result.hpp"

namespace mpg {

// Move choice per owned position (target position id), -1 elsewhere.
using PositionalStrategy = std::vector<int32_t>;

struct PlayOutcome {
  std::vector<int32_t> cycle;  // cycle positions in visit order
  Int cycle_sum;               // sum of their weights
  int32_t length = 0;          // steps taken until the cycle first closed
};

// Follows the two strategies from start until a position repeats.
PlayOutcome play_from(const Game& g, const PositionalStrategy& smax,
                      const PositionalStrategy& smin, int32_t start);

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(uint64_t pairs, uint64_t budget)
      : std::runtime_error("strategy space of " + std::to_string(pairs) +
                           " pairs exceeds budget " + std::to_string(budget)) {
  }
};

// Ground truth by exhaustive strategy-pair enumeration: Max wins from v when
// some positional Max strategy yields a positive cycle against every
// positional Min reply. Throws BudgetExceeded when the product of all
// out-degrees exceeds the budget. witness_max carries one Max strategy that
// is optimal on the whole Max region.
Solution oracle_solve(const Game& g, uint64_t budget = 1ull << 20);

}  // namespace mpg
