#include "mpg/arena.hpp"

#include <algorithm>
#include <limits>

namespace mpg {

namespace {

[[noreturn]] void fail(BuildError::Kind k, int64_t id, int64_t succ,
                       const std::string& msg) {
  throw BuildError(k, id, succ, msg);
}

}  // namespace

Game build_game(const std::vector<RawPosition>& raw) {
  const size_t nraw = raw.size();
  if (nraw > static_cast<size_t>(std::numeric_limits<int32_t>::max()))
    fail(BuildError::Kind::TooLarge, -1, -1, "too many positions");
  const int32_t n = static_cast<int32_t>(nraw);

  std::vector<int32_t> slot(n, -1);
  for (size_t i = 0; i < nraw; ++i) {
    int64_t id = raw[i].id;
    if (id < 0 || id >= n)
      fail(BuildError::Kind::NonDenseIds, id, -1,
           "position id " + std::to_string(id) + " outside 0.." +
               std::to_string(n - 1));
    if (slot[id] != -1)
      fail(BuildError::Kind::DuplicateId, id, -1,
           "duplicate position id " + std::to_string(id));
    slot[id] = static_cast<int32_t>(i);
  }

  Game g;
  g.owner_.resize(n);
  g.weight_.resize(n);
  g.label_.resize(n);
  g.succ_off_.assign(n + 1, 0);

  int64_t m = 0;
  for (int32_t v = 0; v < n; ++v) {
    const RawPosition& r = raw[slot[v]];
    if (r.succ.empty())
      fail(BuildError::Kind::SinkPosition, v, -1,
           "position " + std::to_string(v) + " has no moves");
    m += static_cast<int64_t>(r.succ.size());
  }

  g.succ_.reserve(m);
  std::vector<char> mark(n, 0);
  for (int32_t v = 0; v < n; ++v) {
    const RawPosition& r = raw[slot[v]];
    g.owner_[v] = r.owner;
    g.weight_[v] = r.weight;
    g.label_[v] = r.label;
    if (!r.label.empty()) g.labeled_ = true;
    for (int64_t u : r.succ) {
      if (u < 0 || u >= n)
        fail(BuildError::Kind::DanglingEdge, v, u,
             "move from " + std::to_string(v) + " to unknown position " +
                 std::to_string(u));
      if (mark[u])
        fail(BuildError::Kind::DuplicateEdge, v, u,
             "parallel move from " + std::to_string(v) + " to " +
                 std::to_string(u));
      mark[u] = 1;
      g.succ_.push_back(static_cast<int32_t>(u));
    }
    for (int64_t u : r.succ) mark[u] = 0;
    g.succ_off_[v + 1] = static_cast<int32_t>(g.succ_.size());
  }

  // Transpose. Scanning sources in ascending order keeps each predecessor
  // list sorted by source id.
  g.pred_off_.assign(n + 1, 0);
  for (int32_t u : g.succ_) g.pred_off_[u + 1]++;
  for (int32_t v = 0; v < n; ++v) g.pred_off_[v + 1] += g.pred_off_[v];
  g.pred_.resize(g.succ_.size());
  std::vector<int32_t> cursor(g.pred_off_.begin(), g.pred_off_.end() - 1);
  for (int32_t v = 0; v < n; ++v)
    for (int32_t u : g.succ(v)) g.pred_[cursor[u]++] = v;

  g.stats_.n = n;
  g.stats_.m = m;
  g.stats_.W = 0;
  g.stats_.S = 0;
  for (int32_t v = 0; v < n; ++v) {
    if (g.weight_[v] > 0) {
      g.stats_.S += g.weight_[v];
      if (g.weight_[v] > g.stats_.W) g.stats_.W = g.weight_[v];
    }
  }
  return g;
}

Game shift_threshold(const Game& g, const Int& nu) {
  std::vector<RawPosition> raw(g.size());
  for (int32_t v = 0; v < g.size(); ++v) {
    raw[v].id = v;
    raw[v].weight = g.weight(v) - nu;
    raw[v].owner = g.owner(v);
    raw[v].succ.assign(g.succ(v).begin(), g.succ(v).end());
    raw[v].label = g.label(v);
  }
  return build_game(raw);
}

}  // namespace mpg
