#include "doctest.h"

#include <map>
#include <vector>

#include "mpg/brim.hpp"
#include "mpg/families.hpp"
#include "mpg/io.hpp"
#include "mpg/oracle.hpp"

using namespace mpg;

namespace {

struct Replay {
  std::vector<TraceEvent> events;
  TraceSink sink() {
    return [this](const TraceEvent& e) { events.push_back(e); };
  }
  // measure snapshot at the end of the given pass
  MeasureFunction at_pass_end(const Game& g, uint64_t pass) const {
    MeasureFunction mu(g.size(), Measure::fin(0));
    for (const TraceEvent& e : events)
      if (e.pass <= pass) mu[e.position] = e.new_value;
    return mu;
  }
};

}  // namespace

TEST_CASE("single positive loop runs to the top in two lifts") {
  Game g = make_loop_game();
  Replay rep;
  auto [sol, st] = brim_solve_traced(g, rep.sink(), {});
  CHECK(st.lift_events == 2);
  CHECK(st.solver_passes == 2);
  CHECK(st.outer_iterations == 0);
  REQUIRE(rep.events.size() == 2);
  CHECK(rep.events[0].position == 0);
  CHECK(rep.events[0].old_value == Measure::fin(0));
  CHECK(rep.events[0].new_value == Measure::fin(1));  // S = 1 still allowed
  CHECK(rep.events[1].new_value.is_inf());            // next lift passes S
  CHECK(sol.win_max == std::vector<uint8_t>{1});
  CHECK(sol.witness_max == std::vector<int32_t>{0});
}

TEST_CASE("zero-sum cycle stabilizes finite") {
  auto [sol, st] = brim_solve(make_zero_cycle_game());
  CHECK(sol.win_max == std::vector<uint8_t>{0, 0});
  CHECK(st.lift_events == 1);  // only the +1 position rises once
  CHECK(sol.final_measure[0] == Measure::fin(1));
  CHECK(sol.final_measure[1] == Measure::fin(0));
}

TEST_CASE("ladder family costs the baseline 2k+2 lifts over 2k+1 passes") {
  for (int64_t k : {2, 3, 10, 100}) {
    Game g = make_fig1_family(k);
    Replay rep;
    auto [sol, st] = brim_solve_traced(g, rep.sink(), {});
    CHECK(st.lift_events == static_cast<uint64_t>(2 * k + 2));
    CHECK(st.solver_passes == static_cast<uint64_t>(2 * k + 1));
    CHECK(sol.max_count() == 0);

    // the first pass lifts exactly a and d
    std::vector<int32_t> first;
    for (const TraceEvent& e : rep.events)
      if (e.pass == 1) first.push_back(e.position);
    CHECK(first == std::vector<int32_t>{0, 3});

    // fixpoint values: a=k, b=0, c=k, d=k+1
    CHECK(sol.final_measure[0] == Measure::fin(k));
    CHECK(sol.final_measure[1] == Measure::fin(0));
    CHECK(sol.final_measure[2] == Measure::fin(k));
    CHECK(sol.final_measure[3] == Measure::fin(k + 1));
  }
}

TEST_CASE("simulation family hits the quoted pass-two snapshot and 5k+9 total") {
  for (int64_t k : {3, 7, 10, 50}) {
    Game g = make_sim_family(k);
    Replay rep;
    auto [sol, st] = brim_solve_traced(g, rep.sink(), {});
    CHECK(st.lift_events == static_cast<uint64_t>(5 * k + 9));

    MeasureFunction mu2 = rep.at_pass_end(g, 2);
    // quoted intermediate state: a=k, b=e=0, c=f=g=2, d=1
    CHECK(mu2[0] == Measure::fin(k));
    CHECK(mu2[1] == Measure::fin(0));
    CHECK(mu2[2] == Measure::fin(2));
    CHECK(mu2[3] == Measure::fin(1));
    CHECK(mu2[4] == Measure::fin(0));
    CHECK(mu2[5] == Measure::fin(2));
    CHECK(mu2[6] == Measure::fin(2));

    // Max dominion {c,d,g} ends on top, the rest stays finite
    CHECK(sol.win_max == std::vector<uint8_t>{0, 0, 1, 1, 0, 0, 1});
    CHECK(sol.final_measure[0] == Measure::fin(k));
    CHECK(sol.final_measure[4] == Measure::fin(0));
  }
}

TEST_CASE("small-step interface reaches the same fixpoint") {
  Game g = make_sim_family(5);
  BrimState st = brim_init(g);
  CHECK(st.worklist.size() == static_cast<size_t>(g.size()));
  int64_t steps = 0;
  while (brim_step(g, st)) {
    ++steps;
    REQUIRE(steps < 100000);
  }
  auto [sol, full] = brim_solve(g);
  CHECK(mf_eq(st.mu, sol.final_measure));
  CHECK(st.stats.lift_events == full.lift_events);
  CHECK(st.stats.solver_passes == full.solver_passes);
}

TEST_CASE("lift takes the best stretched successor per owner") {
  Game g = make_escape_demo();
  MeasureFunction mu(g.size(), Measure::fin(0));
  mu[0] = Measure::fin(3);  // a
  mu[3] = Measure::fin(1);  // d
  // c (Min, weight 1, moves to a and f): min over stretches = min(4, 1)
  CHECK(brim_lift_at(g, mu, 2) == Measure::fin(1));
  // f (Max, weight 0, moves to f and d): max over stretches = max(0, 1)
  CHECK(brim_lift_at(g, mu, 5) == Measure::fin(1));
  // b (Max, weight -1, move to a): max(0, 3-1)
  CHECK(brim_lift_at(g, mu, 1) == Measure::fin(2));
}

TEST_CASE("lift caps straight to the top above S") {
  Game g = make_loop_game();  // S = 1
  MeasureFunction mu{Measure::fin(1)};
  CHECK(brim_lift_at(g, mu, 0).is_inf());
}

TEST_CASE("fixpoint is a progress measure and matches the oracle") {
  RandomGameParams p;
  p.n = 7;
  p.max_outdeg = 3;
  p.weight_lo = -5;
  p.weight_hi = 5;
  for (uint64_t seed = 100; seed < 160; ++seed) {
    p.seed = seed;
    Game g = generate_random(p);
    auto [sol, st] = brim_solve(g);
    CHECK(is_progress_measure(g, sol.final_measure).ok);
    Solution truth = oracle_solve(g);
    REQUIRE(sol.win_max == truth.win_max);
    // finite measures stay within the positive-weight sum
    for (int32_t v = 0; v < g.size(); ++v)
      if (!sol.final_measure[v].is_inf())
        CHECK(sol.final_measure[v].value() <= stats(g).S);
  }
}

TEST_CASE("trace replays to the final measure") {
  Game g = make_sim_family(6);
  Replay rep;
  auto [sol, st] = brim_solve_traced(g, rep.sink(), {});
  CHECK(rep.events.size() == st.lift_events);
  MeasureFunction replayed = rep.at_pass_end(g, st.solver_passes);
  CHECK(mf_eq(replayed, sol.final_measure));
  // passes never decrease along the event stream
  for (size_t i = 1; i < rep.events.size(); ++i)
    CHECK(rep.events[i].pass >= rep.events[i - 1].pass);
  // every event strictly raises its position
  for (const TraceEvent& e : rep.events) CHECK(e.old_value < e.new_value);
}

TEST_CASE("deadline aborts a long run") {
  Game g = make_fig1_family(2000000);
  BrimOptions opt;
  opt.time_limit = std::chrono::nanoseconds(1);
  CHECK_THROWS_AS(brim_solve(g, opt), Timeout);
}

TEST_CASE("won Max positions carry a witness move into the won region") {
  Game g = make_sim_family(9);
  auto [sol, st] = brim_solve(g);
  for (int32_t v = 0; v < g.size(); ++v) {
    if (g.owner(v) == Owner::Max && sol.win_max[v]) {
      REQUIRE(sol.witness_max[v] >= 0);
      CHECK(g.has_move(v, sol.witness_max[v]));
      CHECK(sol.win_max[sol.witness_max[v]] == 1);
    } else {
      CHECK(sol.witness_max[v] == -1);
    }
  }
}
