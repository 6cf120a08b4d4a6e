#include "mpg/measure.hpp"

#include <stdexcept>

namespace mpg {

std::string Measure::str() const {
  if (inf_) return "inf";
  return v_.str();
}

Measure stretch(const Measure& eta, int32_t v, const Game& g) {
  if (eta.is_inf()) return eta;
  Int t = eta.value() + g.weight(v);
  if (t < 0) t = 0;
  return Measure::fin(std::move(t));
}

static void check_len(const MeasureFunction& a, const MeasureFunction& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("measure functions differ in length: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

bool mf_leq(const MeasureFunction& a, const MeasureFunction& b) {
  check_len(a, b);
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

bool mf_eq(const MeasureFunction& a, const MeasureFunction& b) {
  check_len(a, b);
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool mf_lt(const MeasureFunction& a, const MeasureFunction& b) {
  return mf_leq(a, b) && !mf_eq(a, b);
}

static bool progress_at(const Game& g, const MeasureFunction& mu, int32_t v) {
  if (mu[v].is_inf()) return true;
  if (g.owner(v) == Owner::Max) {
    for (int32_t u : g.succ(v))
      if (!(stretch(mu[u], v, g) <= mu[v])) return false;
    return true;
  }
  for (int32_t u : g.succ(v))
    if (stretch(mu[u], v, g) <= mu[v]) return true;
  return false;
}

ProgressReport is_progress_measure(const Game& g, const MeasureFunction& mu,
                                   std::span<const int32_t> over) {
  if (mu.size() != static_cast<size_t>(g.size()))
    throw std::invalid_argument("measure function length does not match game");
  ProgressReport rep;
  for (int32_t v : over) {
    if (!progress_at(g, mu, v)) {
      rep.ok = false;
      rep.violators.push_back(v);
    }
  }
  return rep;
}

ProgressReport is_progress_measure(const Game& g, const MeasureFunction& mu) {
  std::vector<int32_t> all(g.size());
  for (int32_t v = 0; v < g.size(); ++v) all[v] = v;
  return is_progress_measure(g, mu, all);
}

std::vector<int32_t> finite_positions(const MeasureFunction& mu) {
  std::vector<int32_t> out;
  for (size_t v = 0; v < mu.size(); ++v)
    if (!mu[v].is_inf()) out.push_back(static_cast<int32_t>(v));
  return out;
}

std::vector<int32_t> infinite_positions(const MeasureFunction& mu) {
  std::vector<int32_t> out;
  for (size_t v = 0; v < mu.size(); ++v)
    if (mu[v].is_inf()) out.push_back(static_cast<int32_t>(v));
  return out;
}

}  // namespace mpg
