#include <algorithm>
#include <string>

#include "mpg/families.hpp"
#include "mpg/io.hpp"
#include "mpg/oracle.hpp"
#include "mpg/qdpm.hpp"

namespace mpg {

namespace {

bool positive(const Measure& m) { return m.is_inf() || m.value() > 0; }

std::vector<uint8_t> mask_of(size_t n, std::span<const int32_t> s) {
  std::vector<uint8_t> m(n, 0);
  for (int32_t v : s) m[static_cast<size_t>(v)] = 1;
  return m;
}

void require_members(const Game& g, std::span<const int32_t> s,
                     const char* who) {
  int32_t prev = -1;
  for (int32_t v : s) {
    if (v < 0 || v >= static_cast<int32_t>(g.size()))
      throw std::invalid_argument(std::string(who) + ": position out of range");
    if (v <= prev)
      throw std::invalid_argument(std::string(who) +
                                  ": ids must be ascending and distinct");
    prev = v;
  }
}

}  // namespace

QDR qdr_init(const Game& g) {
  QDR r;
  r.mu.assign(g.size(), Measure::fin(0));
  r.sigma.assign(g.size(), -1);
  return r;
}

std::vector<int32_t> positive_region(const QDR& r) {
  std::vector<int32_t> out;
  for (size_t v = 0; v < r.mu.size(); ++v)
    if (positive(r.mu[v])) out.push_back(static_cast<int32_t>(v));
  return out;
}

bool qdr_leq(const Game& g, const QDR& a, const QDR& b) {
  size_t n = static_cast<size_t>(g.size());
  if (a.mu.size() != n || b.mu.size() != n) return false;
  if (!mf_leq(a.mu, b.mu)) return false;
  for (size_t v = 0; v < n; ++v) {
    if (g.owner(static_cast<int32_t>(v)) != Owner::Max) continue;
    if (!positive(a.mu[v])) continue;
    if (a.mu[v] == b.mu[v] && a.sigma[v] != b.sigma[v]) return false;
  }
  return true;
}

ValidationReport validate_qdr(const Game& g, const QDR& r, bool deep,
                              int32_t size_limit) {
  ValidationReport rep;
  auto push = [&](int32_t v, std::string what) {
    rep.ok = false;
    rep.issues.push_back({v, std::move(what)});
  };

  if (r.mu.size() != static_cast<size_t>(g.size()) ||
      r.sigma.size() != static_cast<size_t>(g.size())) {
    push(-1, "state size does not match the game");
    return rep;
  }

  for (int32_t v = 0; v < static_cast<int32_t>(g.size()); ++v) {
    bool pos = positive(r.mu[v]);
    if (g.owner(v) == Owner::Max) {
      if (!pos) {
        if (r.sigma[v] != -1)
          push(v, "zero-value Max position carries a strategy move");
        continue;
      }
      int32_t s = r.sigma[v];
      if (s < 0) {
        push(v, "positive Max position without a strategy move");
        continue;
      }
      auto succ = g.succ(v);
      if (std::find(succ.begin(), succ.end(), s) == succ.end()) {
        push(v, "strategy move is not a successor");
        continue;
      }
      if (!(r.mu[v] <= stretch(r.mu[s], v, g)))
        push(v, "value exceeds what the strategy move supports");
    } else {
      if (r.sigma[v] != -1) push(v, "Min position carries a strategy move");
      if (!pos) continue;
      for (int32_t u : g.succ(v)) {
        if (!(r.mu[v] <= stretch(r.mu[u], v, g))) {
          push(v, "value exceeds what the move to " + std::to_string(u) +
                      " supports");
          break;
        }
      }
    }
  }
  if (!deep || !rep.ok) return rep;

  if (static_cast<int32_t>(g.size()) > size_limit)
    throw SizeLimit("deep validation refused above " +
                    std::to_string(size_limit) + " positions");

  auto Q = positive_region(r);
  if (!check_quasi_dominion(g, Q, r.sigma, /*weak=*/false, size_limit))
    push(-1, "a play inside the positive region is not winning for Max");

  // Every path compatible with the state, while it stays in the positive
  // region, keeps mu(v) <= collected weight + mu(endpoint). Explored up to
  // an internal step budget, so on large inputs this is a spot check.
  {
    auto qmask = mask_of(g.size(), Q);
    size_t steps_left = size_t{1} << 20;
    size_t depth_cap = Q.size() + 1;
    for (int32_t v : Q) {
      if (r.mu[v].is_inf()) continue;
      bool bad = false;
      auto walk = [&](auto&& self, int32_t u, const Int& before,
                      size_t depth) -> void {
        if (bad || steps_left == 0) return;
        --steps_left;
        Int here = before + g.weight(u);
        auto visit = [&](int32_t t) {
          if (!r.mu[t].is_inf() && !(r.mu[v].value() <= here + r.mu[t].value())) {
            push(v, "a compatible path to " + std::to_string(t) +
                        " undercuts the value");
            bad = true;
            return;
          }
          if (qmask[t] && depth < depth_cap) self(self, t, here, depth + 1);
        };
        if (g.owner(u) == Owner::Max) {
          visit(r.sigma[u]);
        } else {
          for (int32_t t : g.succ(u)) {
            if (bad) break;
            visit(t);
          }
        }
      };
      walk(walk, v, Int(0), 1);
    }
  }

  // Positions able to leave the positive region sit exactly at their own
  // weight, which must be positive.
  for (int32_t v : esc(g, r, Q)) {
    if (r.mu[v].is_inf() || !(g.weight(v) > 0) ||
        r.mu[v].value() != g.weight(v))
      push(v, "exit position off its own weight");
  }

  // On brute-forceable games the top region must be genuinely won by Max.
  try {
    Solution truth = oracle_solve(g, 1u << 16);
    for (int32_t v = 0; v < static_cast<int32_t>(g.size()); ++v)
      if (r.mu[v].is_inf() && !truth.win_max[v])
        push(v, "top position not actually won by Max");
  } catch (const BudgetExceeded&) {
  }

  return rep;
}

bool check_quasi_dominion(const Game& g, std::span<const int32_t> Q,
                          const std::vector<int32_t>& sigma, bool weak,
                          int32_t size_limit) {
  if (static_cast<int32_t>(g.size()) > size_limit)
    throw SizeLimit("quasi-dominion check refused above " +
                    std::to_string(size_limit) + " positions");
  require_members(g, Q, "check_quasi_dominion");
  if (Q.empty()) return true;
  auto qmask = mask_of(g.size(), Q);
  for (int32_t v : Q) {
    if (g.owner(v) != Owner::Max) continue;
    if (sigma.size() != static_cast<size_t>(g.size()))
      throw std::invalid_argument("witness strategy has the wrong length");
    auto succ = g.succ(v);
    if (std::find(succ.begin(), succ.end(), sigma[v]) == succ.end())
      throw std::invalid_argument("witness strategy undefined at position " +
                                  std::to_string(v));
  }

  auto moves = [&](int32_t v, auto&& f) {
    if (g.owner(v) == Owner::Max) {
      f(sigma[v]);
    } else {
      for (int32_t u : g.succ(v)) f(u);
    }
  };

  // Cycle screen: scale position weights so that any compatible cycle with
  // sum <= 0 becomes a negative cycle, then look for one.
  {
    Int K = Int(Q.size()) + 1;
    std::vector<Int> dist(g.size(), Int(0));
    bool changed = true;
    for (size_t round = 0; round <= Q.size() && changed; ++round) {
      changed = false;
      for (int32_t v : Q) {
        Int base = dist[v] + K * g.weight(v) - 1;
        moves(v, [&](int32_t u) {
          if (qmask[u] && base < dist[u]) {
            dist[u] = base;
            changed = true;
          }
        });
      }
    }
    if (changed) return false;  // still relaxing after |Q| rounds
  }
  if (weak) return true;

  // Least total weight of a compatible play that leaves Q, per start. With
  // all internal cycles positive the minima are simple paths, so value
  // iteration settles within |Q| rounds.
  std::vector<uint8_t> has(g.size(), 0);
  std::vector<Int> m(g.size(), Int(0));
  for (size_t round = 0; round <= Q.size() + 1; ++round) {
    bool changed = false;
    for (int32_t v : Q) {
      bool best_has = false;
      Int best = 0;
      moves(v, [&](int32_t u) {
        bool cand_has;
        Int cand;
        if (!qmask[u]) {
          cand_has = true;
          cand = 0;
        } else {
          cand_has = has[u] != 0;
          cand = m[u];
        }
        if (!cand_has) return;
        if (!best_has || cand < best) {
          best_has = true;
          best = cand;
        }
      });
      if (!best_has) continue;
      Int val = g.weight(v) + best;
      if (!has[v] || val < m[v]) {
        has[v] = 1;
        m[v] = val;
        changed = true;
      }
    }
    if (!changed) break;
    if (round == Q.size() + 1)
      throw InvariantViolation("exit values failed to settle");
  }
  for (int32_t v : Q)
    if (has[v] && !(m[v] > 0)) return false;
  return true;
}

QDR controlled_lift(const Game& g, const QDR& r, std::span<const int32_t> src,
                    std::span<const int32_t> tgt) {
  require_members(g, src, "controlled_lift src");
  require_members(g, tgt, "controlled_lift tgt");
  auto tmask = mask_of(g.size(), tgt);
  QDR out = r;
  for (int32_t v : src) {
    bool found = false;
    Measure best;
    int32_t arg = -1;
    for (int32_t u : g.succ(v)) {
      if (!tmask[u]) continue;
      Measure st = stretch(r.mu[u], v, g);
      if (!found) {
        found = true;
        best = st;
        arg = u;
      } else if (g.owner(v) == Owner::Max ? st > best : st < best) {
        best = st;
        arg = u;
      }
    }
    if (!found) throw EmptyTargets(v);
    if (best == r.mu[v]) continue;
    if (best < r.mu[v])
      throw InvariantViolation("controlled lift lowered a value");
    out.mu[v] = best;
    if (g.owner(v) == Owner::Max) out.sigma[v] = arg;
  }
  return out;
}

QDR prg0(const Game& g, const QDR& r) {
  QDR out = r;
  for (int32_t v = 0; v < static_cast<int32_t>(g.size()); ++v) {
    if (positive(r.mu[v])) continue;
    bool first = true;
    Measure best;
    int32_t arg = -1;
    for (int32_t u : g.succ(v)) {
      Measure st = stretch(r.mu[u], v, g);
      if (first) {
        first = false;
        best = st;
        arg = u;
      } else if (g.owner(v) == Owner::Max ? st > best : st < best) {
        best = st;
        arg = u;
      }
    }
    if (!positive(best)) continue;
    out.mu[v] = best;
    if (g.owner(v) == Owner::Max) out.sigma[v] = arg;
  }
  return out;
}

std::vector<int32_t> npp(const Game& g, const QDR& r) {
  std::vector<int32_t> out;
  for (int32_t v = 0; v < static_cast<int32_t>(g.size()); ++v) {
    if (r.mu[v].is_inf() || !positive(r.mu[v])) continue;
    bool all = true, some = false;
    for (int32_t u : g.succ(v)) {
      if (stretch(r.mu[u], v, g) > r.mu[v])
        some = true;
      else
        all = false;
    }
    if (g.owner(v) == Owner::Max ? some : all) out.push_back(v);
  }
  return out;
}

std::vector<int32_t> compute_dmn(const Game& g, const QDR& r,
                                 std::span<const int32_t> seed) {
  require_members(g, seed, "compute_dmn seed");
  for (int32_t v : seed)
    if (r.mu[v].is_inf() || !positive(r.mu[v]))
      throw std::invalid_argument("seed position " + std::to_string(v) +
                                  " lacks a finite positive value");
  std::vector<uint8_t> in = mask_of(g.size(), seed);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int32_t v = 0; v < static_cast<int32_t>(g.size()); ++v) {
      if (in[v] || r.mu[v].is_inf() || !positive(r.mu[v])) continue;
      bool join;
      if (g.owner(v) == Owner::Max) {
        join = r.sigma[v] >= 0 && in[r.sigma[v]];
      } else {
        join = true;
        for (int32_t u : g.succ(v)) {
          if (!in[u] && stretch(r.mu[u], v, g) <= r.mu[v]) {
            join = false;
            break;
          }
        }
      }
      if (join) {
        in[v] = 1;
        changed = true;
      }
    }
  }
  std::vector<int32_t> out;
  for (int32_t v = 0; v < static_cast<int32_t>(g.size()); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

std::vector<int32_t> esc(const Game& g, const QDR& r,
                         std::span<const int32_t> Q) {
  require_members(g, Q, "esc");
  auto qmask = mask_of(g.size(), Q);
  std::vector<int32_t> out;
  for (int32_t v : Q) {
    if (g.owner(v) == Owner::Min) {
      for (int32_t u : g.succ(v)) {
        if (!qmask[u]) {
          out.push_back(v);
          break;
        }
      }
    } else {
      if (r.sigma[v] < 0)
        throw std::invalid_argument("Max member " + std::to_string(v) +
                                    " has no strategy move");
      if (qmask[r.sigma[v]]) continue;
      bool raising = false;
      for (int32_t u : g.succ(v)) {
        if (qmask[u] && stretch(r.mu[u], v, g) > r.mu[v]) {
          raising = true;
          break;
        }
      }
      if (!raising) out.push_back(v);
    }
  }
  return out;
}

Measure bef(const Game& g, const MeasureFunction& mu,
            std::span<const int32_t> Q, int32_t v) {
  require_members(g, Q, "bef");
  if (mu[v].is_inf())
    throw std::invalid_argument("escape price undefined at the top");
  auto qmask = mask_of(g.size(), Q);
  bool found = false;
  Measure best;
  for (int32_t u : g.succ(v)) {
    if (qmask[u]) continue;
    Measure st = stretch(mu[u], v, g);
    if (!found) {
      found = true;
      best = st;
    } else if (g.owner(v) == Owner::Max ? st > best : st < best) {
      best = st;
    }
  }
  if (!found) throw NoOutsideMove(v);
  if (best.is_inf()) return Measure::inf();
  if (best.value() < mu[v].value())
    throw std::invalid_argument("best outside move sits below the value");
  return Measure::fin(best.value() - mu[v].value());
}

std::vector<int32_t> bep(const Game& g, const QDR& r,
                         std::span<const int32_t> Q) {
  auto E = esc(g, r, Q);
  if (E.empty()) throw EmptyEscape();
  std::vector<Measure> price(E.size());
  size_t arg = 0;
  for (size_t i = 0; i < E.size(); ++i) {
    price[i] = bef(g, r.mu, Q, E[i]);
    if (price[i] < price[arg]) arg = i;
  }
  std::vector<int32_t> out;
  for (size_t i = 0; i < E.size(); ++i)
    if (price[i] == price[arg]) out.push_back(E[i]);
  return out;
}

QDR win_close(const Game& g, const QDR& r, std::span<const int32_t> Q) {
  auto E = esc(g, r, Q);
  if (!E.empty()) throw NotClosed(E.front());
  auto qmask = mask_of(g.size(), Q);
  QDR out = r;
  for (int32_t v : Q) {
    if (g.owner(v) != Owner::Max || qmask[r.sigma[v]]) continue;
    bool found = false;
    Measure best;
    int32_t arg = -1;
    for (int32_t u : g.succ(v)) {
      if (!qmask[u]) continue;
      Measure st = stretch(r.mu[u], v, g);
      if (!found || st > best) {
        found = true;
        best = st;
        arg = u;
      }
    }
    if (!found)
      throw InvariantViolation("closed-set Max member with no inside move");
    out.sigma[v] = arg;
  }
  for (int32_t v : Q) out.mu[v] = Measure::inf();
  return out;
}

QDR prg_plus(const Game& g, const QDR& r) {
  auto seeds = npp(g, r);
  std::vector<int32_t> Q = compute_dmn(g, r, seeds);
  QDR cur = r;
  bool have_prev = false;
  Measure prev;
  while (true) {
    std::vector<int32_t> E;
    try {
      E = bep(g, cur, Q);
    } catch (const EmptyEscape&) {
      break;
    }
    Measure f = bef(g, cur.mu, Q, E.front());
    if (have_prev && f < prev)
      throw InvariantViolation("escape prices decreased within one phase");
    have_prev = true;
    prev = f;
    std::vector<int32_t> comp;
    auto qmask = mask_of(g.size(), Q);
    for (int32_t v = 0; v < static_cast<int32_t>(g.size()); ++v)
      if (!qmask[v]) comp.push_back(v);
    cur = controlled_lift(g, cur, E, comp);
    std::vector<int32_t> rest;
    std::set_difference(Q.begin(), Q.end(), E.begin(), E.end(),
                        std::back_inserter(rest));
    Q = std::move(rest);
    if (Q.empty()) break;
  }
  return win_close(g, cur, Q);
}

NonMonotoneWitness frozen_nonmonotone_fixture() {
  NonMonotoneWitness w{make_nonmono_game(), {}, {}};
  w.r1.mu = {Measure::fin(3), Measure::fin(0), Measure::fin(2), Measure::fin(1),
             Measure::fin(1)};
  w.r1.sigma = {-1, -1, -1, -1, 3};
  w.r2.mu = {Measure::fin(3), Measure::fin(0), Measure::fin(2), Measure::fin(1),
             Measure::fin(2)};
  w.r2.sigma = {-1, -1, -1, -1, 2};
  return w;
}

std::optional<NonMonotoneWitness> find_nonmonotone_witness(uint64_t budget) {
  for (uint64_t game_idx = 0; budget > 0; ++game_idx) {
    Game g = game_idx == 0
                 ? make_nonmono_game()
                 : generate_random({5, 2, -2, 3, 0.35, game_idx});
    size_t n = g.size();
    int64_t bound = 4;
    if (stats(g).S < bound) bound = stats(g).S.convert_to<int64_t>();

    // Every state with values in 0..bound and any strategy choice on its
    // positive Max positions, kept when valid.
    std::vector<QDR> valid;
    std::vector<int64_t> digits(n, 0);
    bool more = true;
    while (more && valid.size() < 4000) {
      QDR base = qdr_init(g);
      for (size_t v = 0; v < n; ++v) base.mu[v] = Measure::fin(digits[v]);
      std::vector<int32_t> maxpos;
      for (int32_t v = 0; v < static_cast<int32_t>(n); ++v)
        if (g.owner(v) == Owner::Max && positive(base.mu[v]))
          maxpos.push_back(v);
      std::vector<size_t> choice(maxpos.size(), 0);
      bool smore = true;
      while (smore) {
        for (size_t i = 0; i < maxpos.size(); ++i)
          base.sigma[maxpos[i]] = g.succ(maxpos[i])[choice[i]];
        if (validate_qdr(g, base).ok &&
            check_quasi_dominion(g, positive_region(base), base.sigma, false))
          valid.push_back(base);
        smore = false;
        for (size_t i = 0; i < maxpos.size(); ++i) {
          if (++choice[i] < g.succ(maxpos[i]).size()) {
            smore = true;
            break;
          }
          choice[i] = 0;
        }
        if (maxpos.empty()) break;
      }
      more = false;
      for (size_t v = 0; v < n; ++v) {
        if (++digits[v] <= bound) {
          more = true;
          break;
        }
        digits[v] = 0;
      }
    }

    std::vector<QDR> images(valid.size());
    std::vector<uint8_t> have(valid.size(), 0);
    for (size_t i = 0; i < valid.size() && budget > 0; ++i) {
      for (size_t j = 0; j < valid.size() && budget > 0; ++j) {
        if (i == j) continue;
        if (!qdr_leq(g, valid[i], valid[j])) continue;
        if (!mf_lt(valid[i].mu, valid[j].mu)) continue;
        --budget;
        if (!have[i]) {
          images[i] = prg_plus(g, valid[i]);
          have[i] = 1;
        }
        if (!have[j]) {
          images[j] = prg_plus(g, valid[j]);
          have[j] = 1;
        }
        if (qdr_leq(g, images[j], images[i]) &&
            !qdr_leq(g, images[i], images[j]) &&
            validate_qdr(g, valid[i], true).ok &&
            validate_qdr(g, valid[j], true).ok)
          return NonMonotoneWitness{std::move(g), valid[i], valid[j]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace mpg
