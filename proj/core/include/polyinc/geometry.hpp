#pragma once

#include "polyinc/multipoly.hpp"
#include "polyinc/unipoly.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>

namespace polyinc {

/// Exact point (or vector) in 3-space.
struct Point3 {
  std::array<Rat, 3> c;

  Point3() = default;
  Point3(Rat x, Rat y, Rat z) : c{std::move(x), std::move(y), std::move(z)} {}

  const Rat& operator[](std::size_t i) const { return c[i]; }
  Rat& operator[](std::size_t i) { return c[i]; }
  std::span<const Rat> span() const { return c; }
  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

  friend Point3 operator+(const Point3& a, const Point3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
  friend Point3 operator-(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
  friend Point3 operator*(const Rat& s, const Point3& a) { return {s * a[0], s * a[1], s * a[2]}; }
  friend bool operator==(const Point3& a, const Point3& b) { return a.c == b.c; }
  friend bool operator<(const Point3& a, const Point3& b) { return a.c < b.c; }

  std::string to_string() const;
};

using Vec3 = Point3;

Rat dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Rat det3(const Vec3& a, const Vec3& b, const Vec3& c);

/// Affine line base + t·dir in canonical form: dir is scaled so its first
/// nonzero coordinate is 1, and base is the line's unique point whose
/// coordinate in that same axis is 0. Equal point sets give identical fields.
class Line3 {
 public:
  /// Throws std::invalid_argument for a zero direction.
  Line3(const Point3& base, const Vec3& dir);
  static Line3 through(const Point3& a, const Point3& b);

  const Point3& base() const { return base_; }
  const Vec3& dir() const { return dir_; }
  Point3 at(const Rat& t) const { return base_ + t * dir_; }
  bool contains(const Point3& w) const;
  bool parallel_to(const Line3& o) const { return cross(dir_, o.dir_).is_zero(); }

  friend bool operator==(const Line3& a, const Line3& b) { return a.base_ == b.base_ && a.dir_ == b.dir_; }
  friend bool operator<(const Line3& a, const Line3& b) {
    return a.dir_ == b.dir_ ? a.base_ < b.base_ : a.dir_ < b.dir_;
  }

  std::string to_string() const;

 private:
  Point3 base_;
  Vec3 dir_;
};

/// Plane a·x + b·y + c·z = e with the first nonzero of (a, b, c) equal to 1.
class Plane {
 public:
  Plane(Rat a, Rat b, Rat c, Rat e);
  /// nullopt when the three points are collinear.
  static std::optional<Plane> through(const Point3& p, const Point3& q, const Point3& r);
  /// Plane spanned by two distinct coplanar lines; nullopt if they are skew.
  static std::optional<Plane> spanned_by(const Line3& l1, const Line3& l2);

  const Vec3& normal() const { return normal_; }
  const Rat& offset() const { return offset_; }
  bool contains(const Point3& w) const { return dot(normal_, w) == offset_; }
  bool contains(const Line3& l) const { return contains(l.base()) && dot(normal_, l.dir()) == 0; }
  /// The linear polynomial a x + b y + c z - e.
  MultiPoly polynomial() const;

  friend bool operator==(const Plane& a, const Plane& b) { return a.normal_ == b.normal_ && a.offset_ == b.offset_; }
  friend bool operator<(const Plane& a, const Plane& b) {
    return a.normal_ == b.normal_ ? a.offset_ < b.offset_ : a.normal_ < b.normal_;
  }
  std::string to_string() const;

 private:
  Vec3 normal_;
  Rat offset_;
};

/// The unique common point of two distinct lines; nullopt for parallel or
/// skew pairs. Throws std::invalid_argument when the lines are identical.
std::optional<Point3> line_intersection(const Line3& l1, const Line3& l2);

/// True iff one plane contains all three lines.
bool are_coplanar(const Line3& l1, const Line3& l2, const Line3& l3);

/// True iff all three lines pass through w with linearly independent directions.
bool is_joint(const Line3& l1, const Line3& l2, const Line3& l3, const Point3& w);

/// q(t) = p(base + t·dir). Precondition: p has arity 3.
UniPoly restrict_to_line(const MultiPoly& p, const Line3& l);

/// True iff p vanishes identically along l.
bool line_on_surface(const Line3& l, const MultiPoly& p);

}  // namespace polyinc
