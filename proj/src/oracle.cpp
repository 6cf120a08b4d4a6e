#include "mpg/oracle.hpp"

namespace mpg {

PlayOutcome play_from(const Game& g, const PositionalStrategy& smax,
                      const PositionalStrategy& smin, int32_t start) {
  const int32_t n = g.size();
  std::vector<int32_t> step(n, -1);
  std::vector<int32_t> walk;
  int32_t v = start;
  while (step[v] < 0) {
    step[v] = static_cast<int32_t>(walk.size());
    walk.push_back(v);
    v = g.owner(v) == Owner::Max ? smax[v] : smin[v];
  }
  PlayOutcome out;
  out.length = static_cast<int32_t>(walk.size());
  for (size_t i = step[v]; i < walk.size(); ++i) {
    out.cycle.push_back(walk[i]);
    out.cycle_sum += g.weight(walk[i]);
  }
  return out;
}

namespace {

// Cycle sums in a functional graph: every position maps to the sum of the
// unique cycle its trajectory falls into.
void functional_cycle_sums(const Game& g, const std::vector<int32_t>& next,
                           std::vector<Int>& sum, std::vector<int8_t>& color,
                           std::vector<int32_t>& path) {
  const int32_t n = g.size();
  std::fill(color.begin(), color.end(), 0);
  for (int32_t s = 0; s < n; ++s) {
    if (color[s]) continue;
    path.clear();
    int32_t u = s;
    while (color[u] == 0) {
      color[u] = 1;
      path.push_back(u);
      u = next[u];
    }
    if (color[u] == 1) {
      // Found a fresh cycle ending the path at u.
      Int cs = 0;
      size_t b = path.size();
      while (b > 0 && path[b - 1] != u) --b;
      --b;
      for (size_t i = b; i < path.size(); ++i) cs += g.weight(path[i]);
      for (size_t i = b; i < path.size(); ++i) sum[path[i]] = cs;
      for (size_t i = b; i < path.size(); ++i) color[path[i]] = 2;
      path.resize(b);
    }
    for (size_t i = path.size(); i > 0; --i) {
      int32_t w = path[i - 1];
      sum[w] = sum[next[w]];
      color[w] = 2;
    }
  }
}

}  // namespace

Solution oracle_solve(const Game& g, uint64_t budget) {
  const int32_t n = g.size();

  uint64_t pairs = 1;
  for (int32_t v = 0; v < n; ++v) {
    uint64_t d = g.succ(v).size();
    if (pairs > budget / d + 1) pairs = budget + 1;
    else pairs *= d;
    if (pairs > budget) throw BudgetExceeded(pairs, budget);
  }

  std::vector<int32_t> maxpos, minpos;
  for (int32_t v = 0; v < n; ++v)
    (g.owner(v) == Owner::Max ? maxpos : minpos).push_back(v);

  std::vector<int32_t> next(n, -1);
  std::vector<size_t> ci(maxpos.size(), 0), cj(minpos.size(), 0);
  std::vector<Int> sum(n);
  std::vector<int8_t> color(n);
  std::vector<int32_t> path;

  std::vector<uint8_t> win(n, 0), good(n), best_good;
  std::vector<int32_t> best_sigma;
  size_t best_count = 0;
  bool have_best = false;

  bool more_max = true;
  while (more_max) {
    for (size_t i = 0; i < maxpos.size(); ++i)
      next[maxpos[i]] = g.succ(maxpos[i])[ci[i]];
    std::fill(good.begin(), good.end(), 1);

    bool more_min = true;
    while (more_min) {
      for (size_t j = 0; j < minpos.size(); ++j)
        next[minpos[j]] = g.succ(minpos[j])[cj[j]];
      functional_cycle_sums(g, next, sum, color, path);
      for (int32_t v = 0; v < n; ++v)
        if (good[v] && !(sum[v] > 0)) good[v] = 0;

      more_min = false;
      for (size_t j = 0; j < minpos.size(); ++j) {
        if (++cj[j] < g.succ(minpos[j]).size()) {
          more_min = true;
          break;
        }
        cj[j] = 0;
      }
    }

    size_t count = 0;
    for (int32_t v = 0; v < n; ++v) {
      if (good[v]) {
        win[v] = 1;
        ++count;
      }
    }
    if (!have_best || count > best_count) {
      have_best = true;
      best_count = count;
      best_good = good;
      best_sigma.assign(n, -1);
      for (size_t i = 0; i < maxpos.size(); ++i)
        best_sigma[maxpos[i]] = g.succ(maxpos[i])[ci[i]];
    }

    more_max = false;
    for (size_t i = 0; i < maxpos.size(); ++i) {
      if (++ci[i] < g.succ(maxpos[i]).size()) {
        more_max = true;
        break;
      }
      ci[i] = 0;
    }
  }

  // Positional determinacy: one Max strategy must be optimal everywhere at
  // once, i.e. the best single strategy's region is the whole union.
  for (int32_t v = 0; v < n; ++v)
    if (win[v] != best_good[v])
      throw InvariantViolation(
          "no single strategy covers the union of won positions");

  Solution sol;
  sol.win_max = std::move(win);
  sol.witness_max.assign(n, -1);
  for (int32_t v : maxpos)
    if (sol.win_max[v]) sol.witness_max[v] = best_sigma[v];
  return sol;
}

}  // namespace mpg
