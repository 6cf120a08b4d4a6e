#pragma once

#include <chrono>
#include <functional>
#include <optional>

#include "mpg/arena.hpp"
#include "mpg/measure.hpp"
#include "mpg/result.hpp"

namespace mpg {

// Measure function paired with a Max witness strategy whose domain is
// exactly the Max positions of positive measure.
struct QDR {
  MeasureFunction mu;
  std::vector<int32_t> sigma;  // successor id, -1 where undefined
};

QDR qdr_init(const Game& g);

// Positions of positive (finite or top) measure, ascending.
std::vector<int32_t> positive_region(const QDR& r);

// Order used for chains of solver states: measures pointwise, and the
// strategy may only differ where the measure strictly rose.
bool qdr_leq(const Game& g, const QDR& a, const QDR& b);

struct ValidationIssue {
  int32_t position;
  std::string what;
};
struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

struct SizeLimit : std::runtime_error {
  explicit SizeLimit(const std::string& msg) : std::runtime_error(msg) {}
};
struct EmptyTargets : std::runtime_error {
  explicit EmptyTargets(int32_t v)
      : std::runtime_error("position " + std::to_string(v) +
                           " has no move into the target set"),
        position(v) {}
  int32_t position;
};
struct NoOutsideMove : std::runtime_error {
  explicit NoOutsideMove(int32_t v)
      : std::runtime_error("position " + std::to_string(v) +
                           " has no move leaving the set"),
        position(v) {}
  int32_t position;
};
struct EmptyEscape : std::runtime_error {
  EmptyEscape() : std::runtime_error("the set has no escape positions") {}
};
struct NotClosed : std::runtime_error {
  explicit NotClosed(int32_t v)
      : std::runtime_error("position " + std::to_string(v) +
                           " can still escape the set"),
        position(v) {}
  int32_t position;
};

// Shallow: strategy domain and range, the per-position value bounds (a Max
// position claims at most what its chosen move justifies, a positive Min
// position at most what every move justifies). Deep adds the quasi-dominion
// play checks on the positive region, the path-sum lower bounds, the
// exit-position weight equality, and an oracle cross-check of the top
// region when the game is small enough to brute-force.
ValidationReport validate_qdr(const Game& g, const QDR& r, bool deep = false,
                              int32_t size_limit = 4096);

// Whether sigma witnesses Q as a quasi dominion for Max: weak asks every
// sigma-compatible cycle inside Q to have positive sum, strong additionally
// every maximal finite play inside Q.
bool check_quasi_dominion(const Game& g, std::span<const int32_t> Q,
                          const std::vector<int32_t>& sigma, bool weak,
                          int32_t size_limit = 1 << 20);

// Recomputes the measures of src over successors restricted to tgt, reading
// the input state only; sigma moves to an argmax inside tgt where the
// measure changed.
QDR controlled_lift(const Game& g, const QDR& r, std::span<const int32_t> src,
                    std::span<const int32_t> tgt);

// One lift of every zero-measure position over all successors.
QDR prg0(const Game& g, const QDR& r);

// Finite positive positions that are no longer progress: Max with some
// strictly raising move, Min with all moves strictly raising.
std::vector<int32_t> npp(const Game& g, const QDR& r);

// Least set containing seed and closed under: Max positions following sigma
// into the set, Min positions all of whose moves leaving the set strictly
// raise the measure.
std::vector<int32_t> compute_dmn(const Game& g, const QDR& r,
                                 std::span<const int32_t> seed);

// Members able to leave Q: Min with any outside move; Max whose sigma move
// is outside while no move inside Q strictly raises the measure.
std::vector<int32_t> esc(const Game& g, const QDR& r,
                         std::span<const int32_t> Q);

// Price of leaving Q from v: best outside stretched value minus mu(v)
// (minimum for Min, maximum for Max).
Measure bef(const Game& g, const MeasureFunction& mu,
            std::span<const int32_t> Q, int32_t v);

// All escape positions sharing the least forfeit, ascending.
std::vector<int32_t> bep(const Game& g, const QDR& r,
                         std::span<const int32_t> Q);

// Sends a closed Q to the top and redirects sigma inside it.
QDR win_close(const Game& g, const QDR& r, std::span<const int32_t> Q);

// Full escape-resolution phase: grow the set from the non-progress seed,
// then repeatedly lift out the cheapest escapes; whatever remains is won by
// Max and closes at the top.
QDR prg_plus(const Game& g, const QDR& r);

enum class Phase { InitialLift, EscapeResolution };

struct QdpmOptions {
  bool validate_each_phase = false;  // shallow self-check after every phase
  bool deep_validation = false;      // deep self-check too (small games)
  bool check_strict = false;  // dominion strictness + pending-set exactness
  std::function<void(Phase, const QDR&)> observer;
  TraceSink trace;
  std::chrono::nanoseconds time_limit{0};  // 0 = unlimited
};

std::pair<Solution, UpdateStats> qdpm_solve(const Game& g,
                                            const QdpmOptions& opt = {});

// A game with two valid states r1 < r2 whose escape-phase images come out
// strictly reversed.
struct NonMonotoneWitness {
  Game game;
  QDR r1, r2;
};

NonMonotoneWitness frozen_nonmonotone_fixture();

// Budgeted search for such a witness over small enumerated states; the
// budget counts candidate pair evaluations. Returned states pass deep
// validation.
std::optional<NonMonotoneWitness> find_nonmonotone_witness(uint64_t budget);

}  // namespace mpg
