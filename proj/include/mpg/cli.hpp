#pragma once

#include <string>
#include <vector>

#include "mpg/arena.hpp"
#include "mpg/result.hpp"

namespace mpg::cli {

// One measurement row, in CSV column order. W and S are serialized as
// decimal strings so arbitrary weight scales survive the trip.
struct StatsRecord {
  std::string algorithm;
  int64_t n = 0;
  int64_t m = 0;
  Int W{};
  Int S{};
  UpdateStats stats;
  int64_t win_max_size = 0;
  int64_t win_min_size = 0;
  std::string params;  // semicolon-joined key=value pairs
};

std::string csv_header();
std::string to_csv(const StatsRecord& r);
std::string to_json(const StatsRecord& r);

// Entry point used by main() and the tests. args is argv without the
// program name, e.g. {"solve", "--input", "game.mpg"}. Returns the process
// exit code: 0 success, 1 usage/input errors, 2 timeouts, exhausted
// budgets, result mismatches and internal check failures.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace mpg::cli
