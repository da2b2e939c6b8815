#include "polyinc/geometry.hpp"

#include <stdexcept>

namespace polyinc {

std::string Point3::to_string() const {
  return "(" + polyinc::to_string(c[0]) + ", " + polyinc::to_string(c[1]) + ", " + polyinc::to_string(c[2]) + ")";
}

Rat dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

Line3::Line3(const Point3& base, const Vec3& dir) {
  std::size_t lead = 0;
  while (lead < 3 && dir[lead] == 0) ++lead;
  if (lead == 3) throw std::invalid_argument("Line3: zero direction vector");
  Rat scale = 1 / dir[lead];
  dir_ = scale * dir;
  base_ = base - base[lead] * dir_;
}

Line3 Line3::through(const Point3& a, const Point3& b) { return Line3(a, b - a); }

bool Line3::contains(const Point3& w) const { return cross(w - base_, dir_).is_zero(); }

std::string Line3::to_string() const { return "{base " + base_.to_string() + ", dir " + dir_.to_string() + "}"; }

Plane::Plane(Rat a, Rat b, Rat c, Rat e) : normal_(std::move(a), std::move(b), std::move(c)), offset_(std::move(e)) {
  std::size_t lead = 0;
  while (lead < 3 && normal_[lead] == 0) ++lead;
  if (lead == 3) throw std::invalid_argument("Plane: zero normal");
  Rat scale = 1 / normal_[lead];
  normal_ = scale * normal_;
  offset_ *= scale;
}

std::optional<Plane> Plane::through(const Point3& p, const Point3& q, const Point3& r) {
  Vec3 n = cross(q - p, r - p);
  if (n.is_zero()) return std::nullopt;
  return Plane(n[0], n[1], n[2], dot(n, p));
}

std::optional<Plane> Plane::spanned_by(const Line3& l1, const Line3& l2) {
  if (l1 == l2) throw std::invalid_argument("Plane::spanned_by: identical lines");
  Vec3 n = cross(l1.dir(), l2.dir());
  if (n.is_zero()) n = cross(l1.dir(), l2.base() - l1.base());  // parallel lines
  else if (dot(n, l2.base() - l1.base()) != 0) return std::nullopt;  // skew
  return Plane(n[0], n[1], n[2], dot(n, l1.base()));
}

MultiPoly Plane::polynomial() const {
  MultiPoly p = MultiPoly::constant(3, -offset_);
  for (std::size_t i = 0; i < 3; ++i) p += normal_[i] * MultiPoly::variable(3, i);
  return p;
}

std::string Plane::to_string() const {
  return polynomial().to_string() + " = 0";
}

std::optional<Point3> line_intersection(const Line3& l1, const Line3& l2) {
  if (l1 == l2) throw std::invalid_argument("line_intersection: identical lines");
  Vec3 n = cross(l1.dir(), l2.dir());
  if (n.is_zero()) return std::nullopt;
  Vec3 w = l2.base() - l1.base();
  if (dot(w, n) != 0) return std::nullopt;
  // base1 + s·d1 = base2 + t·d2  =>  s = ((w × d2)·n) / |n|²
  Rat s = dot(cross(w, l2.dir()), n) / dot(n, n);
  return l1.at(s);
}

bool are_coplanar(const Line3& l1, const Line3& l2, const Line3& l3) {
  // Affine span of two points per line has dimension <= 2.
  const Point3& o = l1.base();
  Vec3 vs[5] = {l1.dir(), l2.base() - o, l2.dir(), l3.base() - o, l3.dir()};
  std::optional<Vec3> normal;
  for (std::size_t i = 0; i < 5 && !normal; ++i)
    for (std::size_t j = i + 1; j < 5 && !normal; ++j) {
      Vec3 n = cross(vs[i], vs[j]);
      if (!n.is_zero()) normal = n;
    }
  if (!normal) return true;  // everything on one line
  for (const auto& v : vs)
    if (dot(*normal, v) != 0) return false;
  return true;
}

bool is_joint(const Line3& l1, const Line3& l2, const Line3& l3, const Point3& w) {
  return l1.contains(w) && l2.contains(w) && l3.contains(w) && det3(l1.dir(), l2.dir(), l3.dir()) != 0;
}

UniPoly restrict_to_line(const MultiPoly& p, const Line3& l) {
  if (p.arity() != 3) throw std::invalid_argument("restrict_to_line: polynomial must have arity 3");
  UniPoly coords[3];
  for (std::size_t i = 0; i < 3; ++i) coords[i] = UniPoly({l.base()[i], l.dir()[i]});
  std::vector<UniPoly> powers[3];
  for (std::size_t i = 0; i < 3; ++i) {
    powers[i].push_back(UniPoly::constant(Rat(1)));
    for (int k = 1; k <= p.degree_in(i); ++k) powers[i].push_back(powers[i].back() * coords[i]);
  }
  UniPoly out;
  for (const auto& [m, c] : p.terms()) {
    UniPoly term = UniPoly::constant(c);
    for (std::size_t i = 0; i < 3; ++i)
      if (m.exp[i] != 0) term = term * powers[i][m.exp[i]];
    out = out + term;
  }
  return out;
}

bool line_on_surface(const Line3& l, const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("line_on_surface: zero polynomial");
  return restrict_to_line(p, l).is_zero();
}

}  // namespace polyinc
