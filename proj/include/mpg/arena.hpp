#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mpg {

using Int = boost::multiprecision::cpp_int;

enum class Owner : uint8_t { Max = 0, Min = 1 };

struct GameStats {
  int32_t n = 0;        // positions
  int64_t m = 0;        // moves
  Int W = 0;            // largest positive weight, 0 if none
  Int S = 0;            // sum of positive weights
};

// Raised by build_game on malformed input.
struct BuildError : std::runtime_error {
  enum class Kind {
    SinkPosition,   // a position has no successors
    DanglingEdge,   // successor id out of range
    DuplicateId,    // two records share an id
    DuplicateEdge,  // parallel move between the same pair
    NonDenseIds,    // ids do not form 0..n-1
    TooLarge,       // more positions than the index type carries
  };
  BuildError(Kind k, int64_t id, int64_t succ, const std::string& msg)
      : std::runtime_error(msg), kind(k), id(id), succ(succ) {}
  Kind kind;
  int64_t id;    // offending record id
  int64_t succ;  // offending successor where relevant, else -1
};

struct RawPosition {
  int64_t id = 0;
  Int weight = 0;
  Owner owner = Owner::Max;
  std::vector<int64_t> succ;
  std::string label;
};

// Sinkless directed game graph with weights on positions. Position ids are
// dense, successor order as given, predecessor lists derived (sorted by
// source id). Immutable after construction.
class Game {
 public:
  Game() = default;

  int32_t size() const { return stats_.n; }
  int64_t moves() const { return stats_.m; }
  Owner owner(int32_t v) const { return owner_[v]; }
  const Int& weight(int32_t v) const { return weight_[v]; }

  std::span<const int32_t> succ(int32_t v) const {
    return {succ_.data() + succ_off_[v], succ_.data() + succ_off_[v + 1]};
  }
  std::span<const int32_t> pred(int32_t v) const {
    return {pred_.data() + pred_off_[v], pred_.data() + pred_off_[v + 1]};
  }
  bool has_move(int32_t v, int32_t u) const {
    for (int32_t t : succ(v))
      if (t == u) return true;
    return false;
  }

  const GameStats& stats() const { return stats_; }
  const std::string& label(int32_t v) const { return label_[v]; }
  bool has_labels() const { return labeled_; }

  friend Game build_game(const std::vector<RawPosition>& raw);

 private:
  std::vector<Owner> owner_;
  std::vector<Int> weight_;
  std::vector<int32_t> succ_off_, succ_;
  std::vector<int32_t> pred_off_, pred_;
  std::vector<std::string> label_;
  bool labeled_ = false;
  GameStats stats_;
};

Game build_game(const std::vector<RawPosition>& raw);

inline const GameStats& stats(const Game& g) { return g.stats(); }

// Subtracts nu from every weight; winning above threshold nu in the input
// equals winning above 0 in the result. shift_threshold(g, 0) == g, and
// shifting twice composes additively.
Game shift_threshold(const Game& g, const Int& nu);

}  // namespace mpg
