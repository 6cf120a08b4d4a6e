#pragma once

// Internal machinery shared by the two solvers: an integer-typed snapshot of
// the game and the -1-as-top measure encoding. The solvers run on int64
// when the weight scale provably fits, otherwise on arbitrary precision.

#include <chrono>
#include <cstdint>
#include <vector>

#include "mpg/arena.hpp"
#include "mpg/measure.hpp"
#include "mpg/result.hpp"

namespace mpg::detail {

template <class I>
struct View {
  const Game* g = nullptr;
  int32_t n = 0;
  std::vector<I> w;
  I S{};
};

inline bool fits_int64(const Game& g) {
  static const Int lim = Int(1) << 60;
  if (g.stats().S >= lim) return false;
  for (int32_t v = 0; v < g.size(); ++v) {
    const Int& w = g.weight(v);
    if (w >= lim || -w >= lim) return false;
  }
  return true;
}

template <class I>
View<I> make_view(const Game& g) {
  View<I> V;
  V.g = &g;
  V.n = g.size();
  V.w.resize(V.n);
  for (int32_t v = 0; v < V.n; ++v) {
    if constexpr (std::is_same_v<I, int64_t>)
      V.w[v] = g.weight(v).convert_to<int64_t>();
    else
      V.w[v] = g.weight(v);
  }
  if constexpr (std::is_same_v<I, int64_t>)
    V.S = g.stats().S.convert_to<int64_t>();
  else
    V.S = g.stats().S;
  return V;
}

// Measure values: >= 0 finite, -1 the absorbing top.
template <class I>
inline bool is_top(const I& x) {
  return x < 0;
}

template <class I>
inline I top_val() {
  return I(-1);
}

// max(0, eta + w); top absorbs.
template <class I>
inline I stretch_val(const I& eta, const I& w) {
  if (is_top(eta)) return eta;
  I t = eta + w;
  if (t < 0) return I(0);
  return t;
}

template <class I>
Measure to_measure(const I& x) {
  if (is_top(x)) return Measure::inf();
  return Measure::fin(Int(x));
}

template <class I>
MeasureFunction to_mf(const std::vector<I>& mu) {
  MeasureFunction out;
  out.reserve(mu.size());
  for (const I& x : mu) out.push_back(to_measure(x));
  return out;
}

struct Deadline {
  bool armed = false;
  std::chrono::steady_clock::time_point at{};

  static Deadline from_limit(std::chrono::nanoseconds limit) {
    Deadline d;
    if (limit.count() > 0) {
      d.armed = true;
      d.at = std::chrono::steady_clock::now() + limit;
    }
    return d;
  }
  bool expired() const {
    return armed && std::chrono::steady_clock::now() >= at;
  }
};

// win_max, witness and public measure from a final engine measure vector.
template <class I>
Solution extract_solution(const Game& g, const std::vector<I>& mu) {
  const int32_t n = g.size();
  Solution sol;
  sol.win_max.assign(n, 0);
  sol.witness_max.assign(n, -1);
  for (int32_t v = 0; v < n; ++v) sol.win_max[v] = is_top(mu[v]) ? 1 : 0;
  for (int32_t v = 0; v < n; ++v) {
    if (!sol.win_max[v] || g.owner(v) != Owner::Max) continue;
    for (int32_t u : g.succ(v)) {
      if (is_top(mu[u])) {
        sol.witness_max[v] = u;
        break;
      }
    }
    if (sol.witness_max[v] < 0)
      throw InvariantViolation("won Max position lacks a winning move");
  }
  sol.final_measure = to_mf(mu);
  return sol;
}

}  // namespace mpg::detail
