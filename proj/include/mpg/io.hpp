#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpg/arena.hpp"

namespace mpg {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line(line),
        reason(reason) {}
  int line;
  std::string reason;
};

// Game file format:
//   mpg <max-id>;
//   <id> <weight> <owner> <succ,succ,...> ["label"];
// Owner 0 is Max, 1 is Min. Ids are dense 0..max-id. Lines whose first
// non-blank character is '#' are ignored.
Game parse_mpg(const std::string& text);

// Inverse of parse_mpg up to whitespace. Each line of header_comment, if
// any, is emitted up front prefixed with "# ".
std::string write_mpg(const Game& g, const std::string& header_comment = "");

// PGSolver-style parity game:
//   parity <max-id>;
//   <id> <priority> <owner> <succ,succ,...> ["label"];
// Owner 0 is the even player. Sinks are rejected.
struct ParityGame {
  std::vector<int32_t> priority;
  std::vector<uint8_t> owner;  // 0 = even, 1 = odd
  std::vector<std::vector<int32_t>> succ;
  std::vector<std::string> label;
  int32_t size() const { return static_cast<int32_t>(priority.size()); }
};

ParityGame parse_parity(const std::string& text);

// Encodes a parity game as a mean-payoff game over the same graph: position
// weight (-n)^p(v) and the even player cast as Max. Every cycle's weight sum
// is nonzero, and positive exactly when the highest priority on the cycle is
// even, so the winning regions transfer.
Game parity_to_mpg(const ParityGame& pg);

// Game with weights on moves instead of positions.
struct WeightedEdgeGame {
  std::vector<Owner> owner;
  std::vector<std::vector<std::pair<int32_t, Int>>> succ;  // (target, weight)
  int32_t size() const { return static_cast<int32_t>(owner.size()); }
};

// Splits every weighted move (u,v,w) through a fresh position carrying w;
// original positions keep weight 0. Winners at original positions are
// preserved.
Game edges_to_positions(const WeightedEdgeGame& eg);

struct InvalidRange : std::invalid_argument {
  explicit InvalidRange(const std::string& msg) : std::invalid_argument(msg) {}
};

struct RandomGameParams {
  int32_t n = 0;
  int32_t max_outdeg = 1;
  int64_t weight_lo = 0;
  int64_t weight_hi = 0;
  double owner_ratio = 0.5;  // probability a position belongs to Max
  uint64_t seed = 0;
};

// Deterministic seeded generator (splitmix64). Per position, in order:
// owner draw, out-degree draw (1 + next % max_outdeg, capped at n), distinct
// successors by rejection keeping draw order, then the weight draw.
Game generate_random(const RandomGameParams& p);

// The parameter echo emitted as a comment header by the generator CLI.
std::string random_game_header(const RandomGameParams& p);

}  // namespace mpg
