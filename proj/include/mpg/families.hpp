#pragma once

#include "mpg/arena.hpp"

namespace mpg {

// Small pinned games used by tests and the built-in bench suites.

// Single Max position, weight 1, self-loop.
Game make_loop_game();

// Two positions trading weight +1/-1 around a cycle of sum zero.
Game make_zero_cycle_game();

// Four-position family, k > 1: a slow ladder for the worklist baseline
// (its update count grows with k) that the quasi-dominion solver resolves
// in a constant number of updates. Bench suite name: fig1.
Game make_fig1_family(const Int& k);

// Seven-position family, k > 2, with a three-position Max dominion. The
// worklist baseline spends 5k+9 updates; the quasi-dominion solver always
// spends 13. Bench suite name: sim.
Game make_sim_family(const Int& k);

// Six-position playground exercising escape detection, forfeit values, and
// best-escape clustering.
Game make_escape_demo();

// Five-position game on which the escape phase is not order-preserving:
// comparable inputs can produce incomparable or reversed outputs.
Game make_nonmono_game();

// Two Min-owned gates over a shared positive loop, built so that two escape
// positions carry the same forfeit and must leave the set as one cluster.
Game make_twin_exit_game();

}  // namespace mpg
