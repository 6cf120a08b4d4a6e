#include "doctest.h"

#include "mpg/families.hpp"
#include "mpg/io.hpp"
#include "mpg/oracle.hpp"

using namespace mpg;

TEST_CASE("play_from follows both strategies to the first cycle") {
  Game g = make_escape_demo();
  // a(0)->e(4), b(1)->a, c(2)->a, d(3)->c, e(4)->e, f(5)->f
  PositionalStrategy smax{-1, 0, -1, -1, -1, 5};
  PositionalStrategy smin{4, -1, 0, 2, 4, -1};
  PlayOutcome out = play_from(g, smax, smin, 3);
  // d -> c -> a -> e -> e circles at e with weight 0
  CHECK(out.cycle == std::vector<int32_t>{4});
  CHECK(out.cycle_sum == 0);
  CHECK(out.length == 4);

  PlayOutcome self = play_from(g, smax, smin, 5);
  CHECK(self.cycle == std::vector<int32_t>{5});
  CHECK(self.cycle_sum == 0);
  CHECK(self.length == 1);
}

TEST_CASE("play_from reports a long cycle in visit order") {
  std::vector<RawPosition> raw;
  raw.push_back({0, 1, Owner::Max, {1}, ""});
  raw.push_back({1, 2, Owner::Min, {2}, ""});
  raw.push_back({2, -4, Owner::Max, {0}, ""});
  Game g = build_game(raw);
  PositionalStrategy smax{1, -1, 0};
  PositionalStrategy smin{-1, 2, -1};
  PlayOutcome out = play_from(g, smax, smin, 1);
  CHECK(out.cycle == std::vector<int32_t>{1, 2, 0});
  CHECK(out.cycle_sum == -1);
}

TEST_CASE("known winners on the tiny pinned games") {
  Solution loop = oracle_solve(make_loop_game());
  CHECK(loop.win_max == std::vector<uint8_t>{1});

  // the only cycle sums to zero, which is a Min win
  Solution zero = oracle_solve(make_zero_cycle_game());
  CHECK(zero.win_max == std::vector<uint8_t>{0, 0});

  Solution fig1 = oracle_solve(make_fig1_family(4));
  CHECK(fig1.win_max == std::vector<uint8_t>{0, 0, 0, 0});

  Solution sim = oracle_solve(make_sim_family(4));
  CHECK(sim.win_max == std::vector<uint8_t>{0, 0, 1, 1, 0, 0, 1});

  Solution demo = oracle_solve(make_escape_demo());
  CHECK(demo.max_count() == 0);
}

TEST_CASE("oracle witness is a real winning strategy") {
  Game g = make_sim_family(4);
  Solution sol = oracle_solve(g);
  // every Min reply against the witness closes a positive cycle from each
  // won position
  std::vector<int32_t> min_positions;
  for (int32_t v = 0; v < g.size(); ++v)
    if (g.owner(v) == Owner::Min) min_positions.push_back(v);

  // enumerate all Min strategies (product of out-degrees)
  std::vector<size_t> idx(min_positions.size(), 0);
  for (;;) {
    PositionalStrategy smin(g.size(), -1);
    for (size_t i = 0; i < min_positions.size(); ++i)
      smin[min_positions[i]] = g.succ(min_positions[i])[idx[i]];
    for (int32_t v = 0; v < g.size(); ++v)
      if (sol.win_max[v]) {
        PlayOutcome out = play_from(g, sol.witness_max, smin, v);
        CHECK(out.cycle_sum > 0);
      }
    size_t d = 0;
    while (d < idx.size()) {
      if (++idx[d] < g.succ(min_positions[d]).size()) break;
      idx[d++] = 0;
    }
    if (d == idx.size()) break;
  }
}

TEST_CASE("solutions partition the positions") {
  RandomGameParams p;
  p.n = 6;
  p.max_outdeg = 3;
  p.weight_lo = -4;
  p.weight_hi = 4;
  p.seed = 77;
  Game g = generate_random(p);
  Solution sol = oracle_solve(g);
  CHECK(sol.max_count() + sol.min_count() == g.size());
  CHECK(sol.max_region().size() == static_cast<size_t>(sol.max_count()));
  for (int32_t v : sol.max_region()) CHECK(sol.win_max[v] == 1);
}

TEST_CASE("witness moves exist exactly on won Max positions") {
  RandomGameParams p;
  p.n = 7;
  p.max_outdeg = 3;
  p.weight_lo = -3;
  p.weight_hi = 5;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    p.seed = seed;
    Game g = generate_random(p);
    Solution sol = oracle_solve(g);
    for (int32_t v = 0; v < g.size(); ++v) {
      if (g.owner(v) == Owner::Max && sol.win_max[v]) {
        REQUIRE(sol.witness_max[v] >= 0);
        CHECK(g.has_move(v, sol.witness_max[v]));
        // an optimal move never leaves the won region
        CHECK(sol.win_max[sol.witness_max[v]] == 1);
      } else {
        CHECK(sol.witness_max[v] == -1);
      }
    }
  }
}

TEST_CASE("budget guard trips on big strategy spaces") {
  RandomGameParams p;
  p.n = 30;
  p.max_outdeg = 4;
  p.weight_lo = -2;
  p.weight_hi = 2;
  p.seed = 5;
  Game g = generate_random(p);
  CHECK_THROWS_AS(oracle_solve(g, 1000), BudgetExceeded);
}

TEST_CASE("threshold shift changes winners as the mean crosses it") {
  // single Max self-loop of weight 1: mean 1
  Game g = make_loop_game();
  Game g3 = shift_threshold(g, 1);  // weight becomes 0: mean hits threshold, Min wins
  CHECK(oracle_solve(g3).win_max[0] == 0);
  Game gneg = shift_threshold(g, -1);
  CHECK(oracle_solve(gneg).win_max[0] == 1);
}
