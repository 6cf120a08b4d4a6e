#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "engine.hpp"
#include "mpg/qdpm.hpp"

// Event-driven realization of the zero-lift / escape-resolution alternation.
// Measures use the -1-as-top integer encoding. Between its own lifts a Min
// position keeps a count of its satisfying moves, so non-progress detection
// is a counter hitting zero rather than a rescan. During one escape phase
// the current set is epoch-stamped, Max members count their strictly raising
// moves into the set, and pending escapes wait in a bucket map keyed by
// their forfeit, popped cheapest-first a whole tie-cluster at a time.

namespace mpg {

namespace {

using detail::is_top;
using detail::stretch_val;
using detail::top_val;

template <class I>
bool key_less(const I& a, const I& b) {
  bool ta = is_top(a), tb = is_top(b);
  if (ta || tb) return !ta && tb;
  return a < b;
}

template <class I>
struct KeyLess {
  bool operator()(const I& a, const I& b) const { return key_less(a, b); }
};

template <class I>
class Engine {
 public:
  Engine(const Game& g, const QdpmOptions& opt)
      : g_(g), opt_(opt), V_(detail::make_view<I>(g)), n_(V_.n) {}

  std::pair<Solution, UpdateStats> run() {
    auto t0 = std::chrono::steady_clock::now();
    deadline_ = detail::Deadline::from_limit(opt_.time_limit);
    init();
    Int outer_bound = Int(n_) * (g_.stats().S + 1);
    while (!n0_.empty() || !np_.empty()) {
      ++stats_.outer_iterations;
      if (Int(stats_.outer_iterations) > outer_bound)
        throw InvariantViolation("outer iteration count left its bound");
      if (!n0_.empty()) {
        ++stats_.solver_passes;
        zero_phase();
        phase_hooks(Phase::InitialLift);
      }
      if (!np_.empty()) {
        ++stats_.solver_passes;
        escape_phase();
        phase_hooks(Phase::EscapeResolution);
      }
    }
    stats_.time_ns = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    Solution sol = detail::extract_solution(g_, mu_);
    for (int32_t v = 0; v < n_; ++v) {
      if (!is_top(mu_[v]) || g_.owner(v) != Owner::Max) continue;
      if (sig_[v] < 0 || !is_top(mu_[sig_[v]]))
        throw InvariantViolation("kept strategy leaks out of the won region");
      sol.witness_max[v] = sig_[v];
    }
    sol.sigma = sig_;
    return {std::move(sol), stats_};
  }

 private:
  const Game& g_;
  const QdpmOptions& opt_;
  detail::View<I> V_;
  int32_t n_;
  detail::Deadline deadline_;

  std::vector<I> mu_;
  std::vector<int32_t> sig_;
  std::vector<int64_t> cnt_;  // finite Min positions: satisfying moves

  std::vector<int32_t> n0_, np_;
  std::vector<uint8_t> in_n0_, in_np_;

  uint64_t epoch_ = 0;
  std::vector<uint64_t> qep_;   // == epoch_ while the position sits in Q
  std::vector<int64_t> gcnt_;   // Max in Q: strictly raising moves into Q
  std::vector<uint64_t> dep_;   // stamp for dcnt_
  std::vector<int64_t> dcnt_;   // Min during growth: satisfying moves kept
  uint64_t batch_ = 0;
  std::vector<uint64_t> fresh_;  // batch stamp: counters already recomputed

  std::map<I, std::vector<int32_t>, KeyLess<I>> T_;
  std::vector<I> tkey_;
  std::vector<uint8_t> in_t_;

  UpdateStats stats_;
  uint64_t steps_ = 0;

  // scratch reused across batches
  std::vector<int32_t> members_;
  std::vector<I> olds_, news_;
  std::vector<int32_t> args_;

  void poll() {
    if ((++steps_ & 4095) == 0 && deadline_.expired()) throw Timeout();
  }

  void init() {
    mu_.assign(n_, I(0));
    sig_.assign(n_, -1);
    cnt_.assign(n_, 0);
    in_n0_.assign(n_, 0);
    in_np_.assign(n_, 0);
    qep_.assign(n_, 0);
    gcnt_.assign(n_, 0);
    dep_.assign(n_, 0);
    dcnt_.assign(n_, 0);
    fresh_.assign(n_, 0);
    tkey_.assign(n_, I(0));
    in_t_.assign(n_, 0);
    epoch_ = 1;
    for (int32_t v = 0; v < n_; ++v) {
      if (g_.owner(v) == Owner::Min && !(V_.w[v] > 0))
        cnt_[v] = static_cast<int64_t>(g_.succ(v).size());
      if (V_.w[v] > 0) {
        in_n0_[v] = 1;
        n0_.push_back(v);
      }
    }
  }

  void pend(int32_t p) {
    if (is_top(mu_[p])) return;
    if (mu_[p] == 0) {
      if (!in_n0_[p]) {
        in_n0_[p] = 1;
        n0_.push_back(p);
      }
    } else {
      if (!in_np_[p]) {
        in_np_[p] = 1;
        np_.push_back(p);
      }
    }
  }

  void recompute_cnt(int32_t v) {
    int64_t c = 0;
    for (int32_t u : g_.succ(v)) {
      I st = stretch_val(mu_[u], V_.w[v]);
      if (!is_top(st) && st <= mu_[v]) ++c;
    }
    cnt_[v] = c;
  }

  void check_sum_bound(const I& val) {
    if (!is_top(val) && val > V_.S)
      throw InvariantViolation("finite value left the positive-weight sum");
  }

  void emit(int32_t v, const I& oldv, const I& newv) {
    ++stats_.lift_events;
    if (opt_.trace)
      opt_.trace(TraceEvent{v, detail::to_measure(oldv),
                            detail::to_measure(newv), stats_.solver_passes});
  }

  bool in_q(int32_t v) const { return qep_[v] == epoch_; }

  // Updates flowing to the predecessors of a freshly raised position u.
  // Min positions whose counters were rebuilt in the same batch are skipped;
  // Max positions always re-check, including self-loops.
  void scan_preds(int32_t u, const I& old_u) {
    const I& new_u = mu_[u];
    for (int32_t p : g_.pred(u)) {
      if (is_top(mu_[p])) continue;
      const I& wp = V_.w[p];
      if (in_q(p)) {
        if (g_.owner(p) == Owner::Min) {
          I st = stretch_val(new_u, wp);
          I key = is_top(st) ? top_val<I>() : I(st - mu_[p]);
          t_touch(p, key);
        } else {
          I st_old = stretch_val(old_u, wp);
          if (!is_top(st_old) && st_old > mu_[p]) {
            if (--gcnt_[p] < 0)
              throw InvariantViolation("raising-move counter underflow");
          }
          maybe_escape(p);
        }
        continue;
      }
      if (g_.owner(p) == Owner::Max) {
        I st = stretch_val(new_u, wp);
        if (is_top(st) || st > mu_[p]) pend(p);
      } else {
        if (fresh_[p] == batch_) continue;
        I st_old = stretch_val(old_u, wp);
        I st_new = stretch_val(new_u, wp);
        bool was = !is_top(st_old) && st_old <= mu_[p];
        bool now = !is_top(st_new) && st_new <= mu_[p];
        if (was && !now) {
          if (--cnt_[p] < 0)
            throw InvariantViolation("satisfying-move counter underflow");
          if (cnt_[p] == 0) pend(p);
        }
      }
    }
  }

  void zero_phase() {
    members_.clear();
    members_.swap(n0_);
    for (int32_t v : members_) in_n0_[v] = 0;
    size_t k = members_.size();
    olds_.assign(k, I(0));
    news_.assign(k, I(0));
    args_.assign(k, -1);
    for (size_t i = 0; i < k; ++i) {
      poll();
      int32_t v = members_[i];
      if (mu_[v] != 0)
        throw InvariantViolation("zero-lift queue holds a positive position");
      bool first = true;
      I best{};
      int32_t arg = -1;
      bool mx = g_.owner(v) == Owner::Max;
      for (int32_t u : g_.succ(v)) {
        I st = stretch_val(mu_[u], V_.w[v]);
        if (first || (mx ? key_less(best, st) : key_less(st, best))) {
          best = st;
          arg = u;
          first = false;
        }
      }
      if (!is_top(best) && !(best > 0))
        throw InvariantViolation("pending zero lift came out flat");
      check_sum_bound(best);
      news_[i] = best;
      args_[i] = arg;
    }
    ++batch_;
    for (size_t i = 0; i < k; ++i) {
      int32_t v = members_[i];
      olds_[i] = mu_[v];
      mu_[v] = news_[i];
      if (g_.owner(v) == Owner::Max) sig_[v] = args_[i];
      fresh_[v] = batch_;
      emit(v, olds_[i], news_[i]);
    }
    for (size_t i = 0; i < k; ++i) {
      int32_t v = members_[i];
      if (g_.owner(v) == Owner::Min && !is_top(mu_[v])) {
        recompute_cnt(v);
        if (cnt_[v] == 0) pend(v);
      }
    }
    for (size_t i = 0; i < k; ++i) scan_preds(members_[i], olds_[i]);
  }

  void t_touch(int32_t p, const I& key) {
    if (in_t_[p] && !key_less(key, tkey_[p])) return;
    in_t_[p] = 1;
    tkey_[p] = key;
    T_[key].push_back(p);
  }

  void maybe_escape(int32_t p) {
    if (in_t_[p] || gcnt_[p] != 0) return;
    int32_t s = sig_[p];
    if (s < 0)
      throw InvariantViolation("set member without a kept strategy move");
    if (in_q(s)) return;
    bool first = true;
    I best{};
    for (int32_t u : g_.succ(p)) {
      if (in_q(u)) continue;
      I st = stretch_val(mu_[u], V_.w[p]);
      if (first || key_less(best, st)) {
        best = st;
        first = false;
      }
    }
    if (first)
      throw InvariantViolation("escape candidate with no outside move");
    I key = is_top(best) ? top_val<I>() : I(best - mu_[p]);
    t_touch(p, key);
  }

  void grow_set(std::vector<int32_t>& Q) {
    members_.clear();
    members_.swap(np_);
    for (int32_t v : members_) in_np_[v] = 0;
    Q.clear();
    for (int32_t v : members_) {
      if (is_top(mu_[v]) || !(mu_[v] > 0))
        throw InvariantViolation("stale non-progress entry");
      if (opt_.check_strict) check_seed(v);
      qep_[v] = epoch_;
      Q.push_back(v);
    }
    for (size_t qi = 0; qi < Q.size(); ++qi) {
      poll();
      int32_t x = Q[qi];
      for (int32_t p : g_.pred(x)) {
        if (is_top(mu_[p]) || in_q(p) || !(mu_[p] > 0)) continue;
        if (g_.owner(p) == Owner::Max) {
          if (sig_[p] == x) {
            qep_[p] = epoch_;
            Q.push_back(p);
          }
          continue;
        }
        if (dep_[p] != epoch_) {
          dep_[p] = epoch_;
          dcnt_[p] = cnt_[p];
          if (dcnt_[p] == 0)
            throw InvariantViolation("non-progress position missed the queue");
        }
        I st = stretch_val(mu_[x], V_.w[p]);
        if (!is_top(st) && st <= mu_[p]) {
          if (--dcnt_[p] == 0) {
            qep_[p] = epoch_;
            Q.push_back(p);
          }
        }
      }
    }
  }

  void check_seed(int32_t v) {
    bool mx = g_.owner(v) == Owner::Max;
    bool some = false, all = true;
    for (int32_t u : g_.succ(v)) {
      I st = stretch_val(mu_[u], V_.w[v]);
      if (is_top(st) || st > mu_[v])
        some = true;
      else
        all = false;
    }
    if (mx ? !some : !all)
      throw InvariantViolation("seed position is already progress");
  }

  void seed_escapes(const std::vector<int32_t>& Q) {
    for (int32_t v : Q) {
      poll();
      if (g_.owner(v) == Owner::Min) {
        bool first = true;
        I best{};
        for (int32_t u : g_.succ(v)) {
          if (in_q(u)) continue;
          I st = stretch_val(mu_[u], V_.w[v]);
          if (first || key_less(st, best)) {
            best = st;
            first = false;
          }
        }
        if (first) continue;  // no move leaves the set
        if (!is_top(best) && !(best > mu_[v]))
          throw InvariantViolation("set member keeps a non-raising exit");
        I key = is_top(best) ? top_val<I>() : I(best - mu_[v]);
        t_touch(v, key);
      } else {
        int64_t c = 0;
        for (int32_t u : g_.succ(v)) {
          if (!in_q(u)) continue;
          I st = stretch_val(mu_[u], V_.w[v]);
          if (is_top(st) || st > mu_[v]) ++c;
        }
        gcnt_[v] = c;
        maybe_escape(v);
      }
    }
  }

  void lift_cluster(const std::vector<int32_t>& E, const I& key) {
    size_t k = E.size();
    olds_.assign(k, I(0));
    news_.assign(k, I(0));
    args_.assign(k, -1);
    for (size_t i = 0; i < k; ++i) {
      int32_t v = E[i];
      bool mx = g_.owner(v) == Owner::Max;
      bool first = true;
      I best{};
      int32_t arg = -1;
      for (int32_t u : g_.succ(v)) {
        if (in_q(u)) continue;
        I st = stretch_val(mu_[u], V_.w[v]);
        if (first || (mx ? key_less(best, st) : key_less(st, best))) {
          best = st;
          arg = u;
          first = false;
        }
      }
      if (first)
        throw InvariantViolation("popped escape has no outside move");
      I expect = is_top(key) ? top_val<I>() : I(mu_[v] + key);
      if (best != expect)
        throw InvariantViolation("escape lift does not match its price");
      if (!is_top(best) && !(best > mu_[v]))
        throw InvariantViolation("escape lift failed to raise the value");
      check_sum_bound(best);
      news_[i] = best;
      args_[i] = arg;
    }
    ++batch_;
    for (size_t i = 0; i < k; ++i) {
      int32_t v = E[i];
      olds_[i] = mu_[v];
      mu_[v] = news_[i];
      if (g_.owner(v) == Owner::Max) sig_[v] = args_[i];
      qep_[v] = 0;
      in_t_[v] = 0;
      fresh_[v] = batch_;
      emit(v, olds_[i], news_[i]);
    }
    for (size_t i = 0; i < k; ++i) {
      int32_t v = E[i];
      if (g_.owner(v) == Owner::Min && !is_top(mu_[v])) {
        recompute_cnt(v);
        if (cnt_[v] == 0)
          throw InvariantViolation("lifted escape still below its moves");
      }
    }
    for (size_t i = 0; i < k; ++i) scan_preds(E[i], olds_[i]);
  }

  void close_set(const std::vector<int32_t>& Q) {
    members_.clear();
    for (int32_t v : Q)
      if (in_q(v)) members_.push_back(v);
    if (members_.empty()) return;
    // redirect kept moves inward before any value moves to the top
    for (int32_t v : members_) {
      if (g_.owner(v) != Owner::Max) continue;
      if (sig_[v] < 0)
        throw InvariantViolation("set member without a kept strategy move");
      if (in_q(sig_[v])) continue;
      bool first = true;
      I best{};
      int32_t arg = -1;
      for (int32_t u : g_.succ(v)) {
        if (!in_q(u)) continue;
        I st = stretch_val(mu_[u], V_.w[v]);
        if (first || key_less(best, st)) {
          best = st;
          arg = u;
          first = false;
        }
      }
      if (first)
        throw InvariantViolation("closed-set member with no inside move");
      sig_[v] = arg;
    }
    size_t k = members_.size();
    olds_.assign(k, I(0));
    ++batch_;
    for (size_t i = 0; i < k; ++i) {
      int32_t v = members_[i];
      olds_[i] = mu_[v];
      mu_[v] = top_val<I>();
      qep_[v] = 0;
      in_t_[v] = 0;
      fresh_[v] = batch_;
      emit(v, olds_[i], mu_[v]);
    }
    for (size_t i = 0; i < k; ++i) scan_preds(members_[i], olds_[i]);
  }

  void escape_phase() {
    ++epoch_;
    std::vector<int32_t> Q;
    grow_set(Q);
    std::vector<int32_t> snapshot;
    std::vector<I> snapshot_mu;
    if (opt_.check_strict) {
      snapshot = Q;
      for (int32_t v : Q) snapshot_mu.push_back(mu_[v]);
    }
    seed_escapes(Q);
    bool have_prev = false;
    I prev{};
    std::vector<int32_t> E;
    while (!T_.empty()) {
      poll();
      auto it = T_.begin();
      I key = it->first;
      E.clear();
      for (int32_t v : it->second)
        if (in_t_[v] && in_q(v) && tkey_[v] == key) E.push_back(v);
      T_.erase(it);
      if (E.empty()) continue;
      if (have_prev && key_less(key, prev))
        throw InvariantViolation("escape prices decreased within one phase");
      have_prev = true;
      prev = key;
      lift_cluster(E, key);
    }
    close_set(Q);
    if (opt_.check_strict) {
      for (size_t i = 0; i < snapshot.size(); ++i) {
        int32_t v = snapshot[i];
        if (!is_top(mu_[v]) && !(mu_[v] > snapshot_mu[i]))
          throw InvariantViolation("set member failed to strictly rise");
      }
    }
    ++epoch_;  // retire the membership stamps outside escape phases
  }

  void phase_hooks(Phase ph) {
    bool want = static_cast<bool>(opt_.observer) || opt_.validate_each_phase ||
                opt_.check_strict;
    if (!want) return;
    QDR snap{detail::to_mf(mu_), sig_};
    if (opt_.observer) opt_.observer(ph, snap);
    if (opt_.validate_each_phase) {
      ValidationReport rep = validate_qdr(g_, snap, opt_.deep_validation);
      if (!rep.ok)
        throw InvariantViolation(
            "state failed validation at position " +
            std::to_string(rep.issues.front().position) + ": " +
            rep.issues.front().what);
    }
    if (opt_.check_strict) {
      auto expect = npp(g_, snap);
      std::vector<int32_t> have = np_;
      std::sort(have.begin(), have.end());
      if (have != expect)
        throw InvariantViolation("pending set drifted from the recomputation");
      std::vector<int32_t> zeros;
      QDR next = prg0(g_, snap);
      for (int32_t v = 0; v < n_; ++v)
        if (!(snap.mu[v].is_inf() || snap.mu[v].value() > 0) &&
            (next.mu[v].is_inf() || next.mu[v].value() > 0))
          zeros.push_back(v);
      std::vector<int32_t> have0 = n0_;
      std::sort(have0.begin(), have0.end());
      if (have0 != zeros)
        throw InvariantViolation("zero queue drifted from the recomputation");
    }
  }
};

}  // namespace

std::pair<Solution, UpdateStats> qdpm_solve(const Game& g,
                                            const QdpmOptions& opt) {
  if (detail::fits_int64(g)) return Engine<int64_t>(g, opt).run();
  return Engine<Int>(g, opt).run();
}

}  // namespace mpg
