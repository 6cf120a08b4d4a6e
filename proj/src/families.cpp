#include "mpg/families.hpp"

#include <stdexcept>

namespace mpg {

namespace {

RawPosition pos(int64_t id, Int w, Owner o, std::vector<int64_t> succ,
                std::string label) {
  RawPosition r;
  r.id = id;
  r.weight = std::move(w);
  r.owner = o;
  r.succ = std::move(succ);
  r.label = std::move(label);
  return r;
}

}  // namespace

Game make_loop_game() {
  return build_game({pos(0, 1, Owner::Max, {0}, "")});
}

Game make_zero_cycle_game() {
  return build_game({
      pos(0, 1, Owner::Max, {1}, ""),
      pos(1, -1, Owner::Min, {0}, ""),
  });
}

Game make_fig1_family(const Int& k) {
  if (k <= 1) throw std::invalid_argument("fig1 family needs k > 1");
  return build_game({
      pos(0, k, Owner::Min, {0, 1, 3}, "a"),
      pos(1, 0, Owner::Min, {1}, "b"),
      pos(2, 0, Owner::Min, {0, 3}, "c"),
      pos(3, 1, Owner::Max, {2}, "d"),
  });
}

Game make_sim_family(const Int& k) {
  if (k <= 2) throw std::invalid_argument("sim family needs k > 2");
  return build_game({
      pos(0, k, Owner::Min, {4}, "a"),
      pos(1, -1, Owner::Min, {0, 2}, "b"),
      pos(2, 0, Owner::Max, {5, 3}, "c"),
      pos(3, -1, Owner::Min, {6}, "d"),
      pos(4, 0, Owner::Min, {4}, "e"),
      pos(5, 2, Owner::Min, {1}, "f"),
      pos(6, 2, Owner::Min, {2}, "g"),
  });
}

Game make_escape_demo() {
  return build_game({
      pos(0, 3, Owner::Min, {4}, "a"),
      pos(1, -1, Owner::Max, {0}, "b"),
      pos(2, 1, Owner::Min, {0, 5}, "c"),
      pos(3, 0, Owner::Min, {2, 1}, "d"),
      pos(4, 0, Owner::Min, {4}, "e"),
      pos(5, 0, Owner::Max, {5, 3}, "f"),
  });
}

Game make_nonmono_game() {
  return build_game({
      pos(0, 3, Owner::Min, {1}, "a"),
      pos(1, 0, Owner::Min, {1}, "b"),
      pos(2, 2, Owner::Min, {1}, "c"),
      pos(3, 1, Owner::Min, {0, 4}, "d"),
      pos(4, 0, Owner::Max, {2, 3}, "e"),
  });
}

Game make_twin_exit_game() {
  return build_game({
      pos(0, 3, Owner::Min, {0, 1, 4}, "a"),
      pos(1, 0, Owner::Min, {1}, "b"),
      pos(2, 0, Owner::Min, {0, 4}, "c1"),
      pos(3, 0, Owner::Min, {0, 4}, "c2"),
      pos(4, 1, Owner::Max, {2, 3}, "d"),
  });
}

}  // namespace mpg
