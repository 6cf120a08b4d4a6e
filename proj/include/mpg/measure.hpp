#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mpg/arena.hpp"

namespace mpg {

// Extended natural: a finite non-negative value or the absorbing top.
class Measure {
 public:
  Measure() : inf_(false), v_(0) {}

  static Measure fin(Int v) {
    Measure m;
    m.v_ = std::move(v);
    return m;
  }
  static Measure inf() {
    Measure m;
    m.inf_ = true;
    return m;
  }

  bool is_inf() const { return inf_; }
  // Finite value; must not be called on the top element.
  const Int& value() const { return v_; }

  bool operator==(const Measure& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || v_ == o.v_;
  }
  bool operator<(const Measure& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const Measure& o) const { return *this == o || *this < o; }
  bool operator>(const Measure& o) const { return o < *this; }
  bool operator>=(const Measure& o) const { return o <= *this; }

  std::string str() const;

 private:
  bool inf_;
  Int v_;
};

using MeasureFunction = std::vector<Measure>;

// max(0, eta + w(v)), with the top element absorbing.
Measure stretch(const Measure& eta, int32_t v, const Game& g);

// Pointwise order on equal-length measure functions.
bool mf_leq(const MeasureFunction& a, const MeasureFunction& b);
bool mf_eq(const MeasureFunction& a, const MeasureFunction& b);
bool mf_lt(const MeasureFunction& a, const MeasureFunction& b);

struct ProgressReport {
  bool ok = true;
  std::vector<int32_t> violators;  // ascending
};

// A measure function is progress at v when the stretched successor values
// stay at or below mu(v): under every move for Max positions, under some
// move for Min positions. Top-valued positions satisfy this vacuously.
ProgressReport is_progress_measure(const Game& g, const MeasureFunction& mu);
ProgressReport is_progress_measure(const Game& g, const MeasureFunction& mu,
                                   std::span<const int32_t> over);

std::vector<int32_t> finite_positions(const MeasureFunction& mu);
std::vector<int32_t> infinite_positions(const MeasureFunction& mu);

}  // namespace mpg
