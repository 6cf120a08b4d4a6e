#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mpg/measure.hpp"

namespace mpg {

struct TraceEvent {
  int32_t position;
  Measure old_value;
  Measure new_value;
  uint64_t pass;  // 1-based queue level / phase the update happened in
};
using TraceSink = std::function<void(const TraceEvent&)>;

struct UpdateStats {
  uint64_t lift_events = 0;      // assignments that strictly changed a value
  uint64_t solver_passes = 0;    // queue levels / nonempty phase executions
  uint64_t outer_iterations = 0; // quasi-dominion solver only, else 0
  uint64_t time_ns = 0;
};

struct Solution {
  std::vector<uint8_t> win_max;      // 1 if Max wins from v
  std::vector<int32_t> witness_max;  // Max's move from won Max positions, else -1
  MeasureFunction final_measure;     // empty when the solver has none
  std::vector<int32_t> sigma;        // full Max strategy on the positive
                                     // region when the solver keeps one

  std::vector<int32_t> max_region() const {
    std::vector<int32_t> out;
    for (size_t v = 0; v < win_max.size(); ++v)
      if (win_max[v]) out.push_back(static_cast<int32_t>(v));
    return out;
  }
  std::vector<int32_t> min_region() const {
    std::vector<int32_t> out;
    for (size_t v = 0; v < win_max.size(); ++v)
      if (!win_max[v]) out.push_back(static_cast<int32_t>(v));
    return out;
  }
  size_t max_count() const {
    size_t c = 0;
    for (uint8_t b : win_max) c += b;
    return c;
  }
  size_t min_count() const { return win_max.size() - max_count(); }
};

// Cooperative deadline overrun, thrown by solvers.
struct Timeout : std::runtime_error {
  Timeout() : std::runtime_error("solver deadline exceeded") {}
};

// A runtime self-check inside a solver failed; indicates a bug, surfaced
// loudly instead of returning a wrong answer.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace mpg
