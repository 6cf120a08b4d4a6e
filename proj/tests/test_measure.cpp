#include "doctest.h"

#include "mpg/arena.hpp"
#include "mpg/families.hpp"
#include "mpg/measure.hpp"

using namespace mpg;

namespace {

Game two_pos() {
  // 0(Max,+2) <-> 1(Min,-3)
  std::vector<RawPosition> raw;
  raw.push_back({0, 2, Owner::Max, {1}, ""});
  raw.push_back({1, -3, Owner::Min, {0}, ""});
  return build_game(raw);
}

}  // namespace

TEST_CASE("measure ordering with the absorbing top") {
  Measure a = Measure::fin(3), b = Measure::fin(5), t = Measure::inf();
  CHECK(a < b);
  CHECK(a <= a);
  CHECK(b > a);
  CHECK(a < t);
  CHECK(t <= t);
  CHECK(t == Measure::inf());
  CHECK(!(t < t));
  CHECK(!(t == b));
  CHECK(t > b);
  CHECK(Measure::fin(0) == Measure());
  CHECK(a.value() == 3);
  CHECK(a.str() == "3");
  CHECK(t.str() == "inf");
}

TEST_CASE("stretch clamps at zero and absorbs the top") {
  Game g = two_pos();
  // position 0 carries +2, position 1 carries -3
  CHECK(stretch(Measure::fin(0), 0, g) == Measure::fin(2));
  CHECK(stretch(Measure::fin(4), 1, g) == Measure::fin(1));
  CHECK(stretch(Measure::fin(2), 1, g) == Measure::fin(0));
  CHECK(stretch(Measure::fin(1), 1, g) == Measure::fin(0));
  CHECK(stretch(Measure::inf(), 1, g).is_inf());
}

TEST_CASE("pointwise measure-function comparisons") {
  MeasureFunction a{Measure::fin(1), Measure::fin(2)};
  MeasureFunction b{Measure::fin(1), Measure::fin(3)};
  MeasureFunction c{Measure::fin(1), Measure::inf()};
  CHECK(mf_leq(a, a));
  CHECK(mf_eq(a, a));
  CHECK(mf_leq(a, b));
  CHECK(!mf_leq(b, a));
  CHECK(mf_lt(a, b));
  CHECK(!mf_lt(a, a));
  CHECK(mf_leq(b, c));
  CHECK(!mf_leq(c, b));
}

TEST_CASE("progress condition on a hand-checked pair") {
  Game g = two_pos();
  // All cycles have sum -1, so the all-zero function is already progress:
  // Max position 0 needs every successor stretch at or below its value.
  // stretch(mu(1), 0) = max(0, 0+2) = 2 > 0, so all-zero is NOT progress at 0.
  MeasureFunction zero{Measure::fin(0), Measure::fin(0)};
  ProgressReport r0 = is_progress_measure(g, zero);
  CHECK(!r0.ok);
  REQUIRE(r0.violators.size() == 1);
  CHECK(r0.violators[0] == 0);

  // mu(0)=2, mu(1)=0 settles both: stretch(0->) via 1 is max(0,0+2)=2 <= 2,
  // and Min position 1 has stretch(mu(0),1)=max(0,2-3)=0 <= 0.
  MeasureFunction fix{Measure::fin(2), Measure::fin(0)};
  CHECK(is_progress_measure(g, fix).ok);

  // raising 1 above its supported value breaks nothing for 1 itself (Min
  // needs SOME successor at or below), but breaks 0's ceiling
  MeasureFunction high{Measure::fin(2), Measure::fin(1)};
  ProgressReport rh = is_progress_measure(g, high);
  CHECK(!rh.ok);
  CHECK(rh.violators == std::vector<int32_t>{0});

  // top positions pass vacuously
  MeasureFunction tops{Measure::inf(), Measure::inf()};
  CHECK(is_progress_measure(g, tops).ok);
}

TEST_CASE("progress check restricted to a subset") {
  Game g = two_pos();
  MeasureFunction zero{Measure::fin(0), Measure::fin(0)};
  std::vector<int32_t> only_min{1};
  CHECK(is_progress_measure(g, zero, only_min).ok);
  std::vector<int32_t> only_max{0};
  CHECK(!is_progress_measure(g, zero, only_max).ok);
}

TEST_CASE("finite and infinite position extraction") {
  MeasureFunction mu{Measure::fin(0), Measure::inf(), Measure::fin(9),
                     Measure::inf()};
  CHECK(finite_positions(mu) == std::vector<int32_t>{0, 2});
  CHECK(infinite_positions(mu) == std::vector<int32_t>{1, 3});
}

TEST_CASE("progress holds at the baseline fixpoint of a pinned family") {
  Game g = make_escape_demo();
  // final measures of the solved game, checked by hand
  MeasureFunction mu{Measure::fin(3), Measure::fin(2), Measure::fin(3),
                     Measure::fin(2), Measure::fin(0), Measure::fin(2)};
  CHECK(is_progress_measure(g, mu).ok);
}
