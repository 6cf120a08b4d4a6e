#include "mpg/brim.hpp"

#include "engine.hpp"

namespace mpg {

using detail::is_top;
using detail::stretch_val;

Measure brim_lift_at(const Game& g, const MeasureFunction& mu, int32_t v) {
  const Int& S = g.stats().S;
  Measure best;
  bool first = true;
  for (int32_t u : g.succ(v)) {
    Measure s = stretch(mu[u], v, g);
    if (first) {
      best = s;
      first = false;
    } else if (g.owner(v) == Owner::Max ? (s > best) : (s < best)) {
      best = s;
    }
  }
  if (!best.is_inf() && best.value() > S) return Measure::inf();
  return best;
}

namespace {

int64_t count_satisfied(const Game& g, const MeasureFunction& mu, int32_t v) {
  int64_t c = 0;
  for (int32_t u : g.succ(v))
    if (stretch(mu[u], v, g) <= mu[v]) ++c;
  return c;
}

}  // namespace

BrimState brim_init(const Game& g) {
  const int32_t n = g.size();
  BrimState st;
  st.mu.assign(n, Measure::fin(0));
  st.counters.assign(n, 0);
  for (int32_t v = 0; v < n; ++v)
    if (g.owner(v) == Owner::Min)
      st.counters[v] = count_satisfied(g, st.mu, v);
  st.queued.assign(n, 1);
  for (int32_t v = 0; v < n; ++v) st.worklist.push_back(v);
  st.level_remaining = n;
  st.pass = 1;
  st.stats.solver_passes = n > 0 ? 1 : 0;
  return st;
}

bool brim_step(const Game& g, BrimState& st) {
  if (st.worklist.empty()) return false;
  int32_t v = st.worklist.front();
  st.worklist.pop_front();
  st.queued[v] = 0;
  st.level_remaining--;

  if (!st.mu[v].is_inf()) {
    Measure lifted = brim_lift_at(g, st.mu, v);
    if (!(st.mu[v] <= lifted))
      throw InvariantViolation("lift below current measure");
    if (st.mu[v] < lifted) {
      Measure old = st.mu[v];
      st.mu[v] = lifted;
      st.stats.lift_events++;

      auto enqueue = [&](int32_t p) {
        if (!st.queued[p]) {
          st.queued[p] = 1;
          st.worklist.push_back(p);
        }
      };

      if (g.owner(v) == Owner::Min && !lifted.is_inf()) {
        st.counters[v] = count_satisfied(g, st.mu, v);
        if (st.counters[v] == 0) enqueue(v);
      }
      for (int32_t p : g.pred(v)) {
        if (st.mu[p].is_inf()) continue;
        if (g.owner(p) == Owner::Max) {
          if (stretch(st.mu[v], p, g) > st.mu[p]) enqueue(p);
        } else if (p != v) {
          bool was = stretch(old, p, g) <= st.mu[p];
          bool now = stretch(st.mu[v], p, g) <= st.mu[p];
          if (was && !now) {
            if (--st.counters[p] < 0)
              throw InvariantViolation("negative satisfied-move counter");
            if (st.counters[p] == 0) enqueue(p);
          }
        }
      }
    }
  }

  if (st.level_remaining == 0 && !st.worklist.empty()) {
    st.pass++;
    st.stats.solver_passes++;
    st.level_remaining = st.worklist.size();
  }
  return true;
}

namespace {

template <class I>
std::pair<Solution, UpdateStats> brim_run(const Game& g, const TraceSink& sink,
                                          const BrimOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto V = detail::make_view<I>(g);
  const int32_t n = V.n;
  const detail::Deadline dl = detail::Deadline::from_limit(opt.time_limit);

  std::vector<I> mu(n, I(0));
  std::vector<int64_t> cnt(n, 0);
  for (int32_t v = 0; v < n; ++v)
    if (g.owner(v) == Owner::Min && V.w[v] <= 0)
      cnt[v] = static_cast<int64_t>(g.succ(v).size());

  std::vector<int32_t> queue;
  queue.reserve(n);
  std::vector<uint8_t> queued(n, 1);
  for (int32_t v = 0; v < n; ++v) queue.push_back(v);
  size_t head = 0;
  size_t level_end = queue.size();
  uint64_t pass = 1;

  UpdateStats stats;
  stats.solver_passes = n > 0 ? 1 : 0;
  uint64_t steps = 0;

  I lift{}, st{};
  while (head < queue.size()) {
    if ((++steps & 8191) == 0 && dl.expired()) throw Timeout();
    int32_t v = queue[head++];
    queued[v] = 0;

    if (!is_top(mu[v])) {
      const bool vmax = g.owner(v) == Owner::Max;
      bool first = true;
      for (int32_t u : g.succ(v)) {
        st = stretch_val(mu[u], V.w[v]);
        if (first) {
          lift = st;
          first = false;
        } else if (is_top(lift)) {
          if (!vmax && !is_top(st)) lift = st;
        } else if (is_top(st)) {
          if (vmax) lift = st;
        } else if (vmax ? st > lift : st < lift) {
          lift = st;
        }
      }
      if (!is_top(lift) && lift > V.S) lift = detail::top_val<I>();

      bool higher = is_top(lift) ? !is_top(mu[v]) : lift > mu[v];
      if (!higher && !is_top(lift) && lift < mu[v])
        throw InvariantViolation("lift below current measure");
      if (higher) {
        I old = mu[v];
        mu[v] = lift;
        stats.lift_events++;
        if (sink)
          sink(TraceEvent{v, detail::to_measure(old), detail::to_measure(lift),
                          pass});

        auto enqueue = [&](int32_t p) {
          if (!queued[p]) {
            queued[p] = 1;
            queue.push_back(p);
          }
        };

        if (!vmax && !is_top(mu[v])) {
          int64_t c = 0;
          for (int32_t u : g.succ(v)) {
            st = stretch_val(mu[u], V.w[v]);
            if (!is_top(st) && st <= mu[v]) ++c;
          }
          cnt[v] = c;
          if (c == 0) enqueue(v);
        }
        for (int32_t p : g.pred(v)) {
          if (is_top(mu[p])) continue;
          if (g.owner(p) == Owner::Max) {
            st = stretch_val(mu[v], V.w[p]);
            if (is_top(st) || st > mu[p]) enqueue(p);
          } else if (p != v) {
            bool was, now;
            st = stretch_val(old, V.w[p]);
            was = !is_top(st) && st <= mu[p];
            st = stretch_val(mu[v], V.w[p]);
            now = !is_top(st) && st <= mu[p];
            if (was && !now) {
              if (--cnt[p] < 0)
                throw InvariantViolation("negative satisfied-move counter");
              if (cnt[p] == 0) enqueue(p);
            }
          }
        }
      }
    }

    if (head == level_end && head < queue.size()) {
      pass++;
      stats.solver_passes++;
      level_end = queue.size();
    }
    if (head >= (1u << 20) && head * 2 >= queue.size()) {
      queue.erase(queue.begin(), queue.begin() + static_cast<int64_t>(head));
      level_end -= head;
      head = 0;
    }
  }

  Solution sol = detail::extract_solution(g, mu);
  stats.time_ns = static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return {std::move(sol), stats};
}

}  // namespace

std::pair<Solution, UpdateStats> brim_solve_traced(const Game& g,
                                                   const TraceSink& sink,
                                                   const BrimOptions& opt) {
  if (detail::fits_int64(g)) return brim_run<int64_t>(g, sink, opt);
  return brim_run<Int>(g, sink, opt);
}

std::pair<Solution, UpdateStats> brim_solve(const Game& g,
                                            const BrimOptions& opt) {
  return brim_solve_traced(g, nullptr, opt);
}

}  // namespace mpg
