#pragma once

#include "polyinc/rational.hpp"

#include <string>

namespace polyinc {

/// Exact point of the plane.
struct PlanarPoint {
  Rat x, y;

  friend PlanarPoint operator+(const PlanarPoint& a, const PlanarPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend PlanarPoint operator-(const PlanarPoint& a, const PlanarPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(const PlanarPoint& a, const PlanarPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const PlanarPoint& a, const PlanarPoint& b) { return a.x == b.x ? a.y < b.y : a.x < b.x; }

  std::string to_string() const { return "(" + polyinc::to_string(x) + ", " + polyinc::to_string(y) + ")"; }
};

inline Rat squared_distance(const PlanarPoint& a, const PlanarPoint& b) {
  Rat dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Line a·x + b·y = c of the plane, scaled so the first nonzero of (a, b) is 1.
class PlanarLine {
 public:
  PlanarLine(Rat a, Rat b, Rat c);
  /// y = slope·x + intercept.
  static PlanarLine graph(const Rat& slope, const Rat& intercept) { return PlanarLine(-slope, Rat(1), intercept); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  bool contains(const PlanarPoint& p) const { return a_ * p.x + b_ * p.y == c_; }

  friend bool operator==(const PlanarLine& l, const PlanarLine& m) { return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_; }
  friend bool operator<(const PlanarLine& l, const PlanarLine& m) {
    if (l.a_ != m.a_) return l.a_ < m.a_;
    if (l.b_ != m.b_) return l.b_ < m.b_;
    return l.c_ < m.c_;
  }
  std::string to_string() const;

 private:
  Rat a_, b_, c_;
};

}  // namespace polyinc
