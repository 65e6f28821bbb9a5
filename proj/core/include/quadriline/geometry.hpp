#pragma once

#include <optional>
#include <string>

#include "quadriline/ratio.hpp"
#include "quadriline/scalar.hpp"

namespace quadriline {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

Point midpoint(const Point& p, const Point& q);

/// The affine line a·x + b·y = c with (a, b) ≠ (0, 0).
struct Line {
  Scalar a;
  Scalar b;
  Scalar c;

  /// Throws PreconditionError when a = b = 0.
  static Line make(const Scalar& a, const Scalar& b, const Scalar& c);
  /// y = m·x + k.
  static Line from_slope_intercept(const Scalar& m, const Scalar& k);
  /// Throws PreconditionError when p = q.
  static Line through(const Point& p, const Point& q);

  Field field() const { return a.field(); }
  bool contains(const Point& p) const { return a * p.x + b * p.y == c; }
  bool is_vertical() const { return b.is_zero(); }
  /// dy/dx as a projective ratio; 1/0 for vertical lines.
  Ratio slope() const { return Ratio(-a, b); }
  /// Scaled so the first nonzero of (a, b) is 1.
  Line canonical() const;

  friend bool operator==(const Line& lhs, const Line& rhs) = default;
};

bool parallel(const Line& l1, const Line& l2);
bool same_line(const Line& l1, const Line& l2);
/// The unique common point, or nullopt for parallel or equal lines.
std::optional<Point> intersect(const Line& l1, const Line& l2);

}  // namespace quadriline
