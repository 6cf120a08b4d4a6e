#pragma once

#include <chrono>
#include <deque>
#include <functional>

#include "mpg/arena.hpp"
#include "mpg/measure.hpp"
#include "mpg/result.hpp"

namespace mpg {

// Worklist progress-measure solver: least fixpoint of per-position lifts
// from the all-zero measure, with the eager cap sending any finite lift
// above S straight to the top.

struct BrimOptions {
  std::chrono::nanoseconds time_limit{0};  // 0 = unlimited
};

// One lift: best stretched successor value (max for Max, min for Min),
// capped to the top when a finite result would exceed S.
Measure brim_lift_at(const Game& g, const MeasureFunction& mu, int32_t v);

// Small-step reference state: FIFO worklist seeded with every position in id
// order, plus the Min satisfied-move counters. One queue level is one pass.
struct BrimState {
  MeasureFunction mu;
  std::vector<int64_t> counters;  // Min positions: satisfying moves
  std::deque<int32_t> worklist;
  std::vector<uint8_t> queued;
  uint64_t pass = 1;
  size_t level_remaining = 0;
  UpdateStats stats;
};

BrimState brim_init(const Game& g);
// Processes one worklist entry; returns false once the worklist is empty.
bool brim_step(const Game& g, BrimState& st);

std::pair<Solution, UpdateStats> brim_solve(const Game& g,
                                            const BrimOptions& opt = {});
std::pair<Solution, UpdateStats> brim_solve_traced(const Game& g,
                                                   const TraceSink& sink,
                                                   const BrimOptions& opt = {});

}  // namespace mpg
