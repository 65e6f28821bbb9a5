#include "quadriline/geometry.hpp"

#include "quadriline/error.hpp"

namespace quadriline {

Point midpoint(const Point& p, const Point& q) {
  const Scalar half = p.x.field().of(2).inverse();
  return {(p.x + q.x) * half, (p.y + q.y) * half};
}

Line Line::make(const Scalar& a, const Scalar& b, const Scalar& c) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("line with a = b = 0");
  return Line{a, b, c};
}

Line Line::from_slope_intercept(const Scalar& m, const Scalar& k) {
  return Line{-m, m.field().one(), k};
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw PreconditionError("a line needs two distinct points");
  const Scalar a = q.y - p.y;
  const Scalar b = p.x - q.x;
  return Line{a, b, a * p.x + b * p.y}.canonical();
}

Line Line::canonical() const {
  const Scalar& lead = a.is_zero() ? b : a;
  const Scalar inv = lead.inverse();
  return Line{a * inv, b * inv, c * inv};
}

bool parallel(const Line& l1, const Line& l2) { return (l1.a * l2.b - l2.a * l1.b).is_zero(); }

bool same_line(const Line& l1, const Line& l2) { return l1.canonical() == l2.canonical(); }

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  const Scalar det = l1.a * l2.b - l2.a * l1.b;
  if (det.is_zero()) return std::nullopt;
  return Point{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

}  // namespace quadriline
