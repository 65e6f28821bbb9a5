#include "quadriline/configuration.hpp"

#include "quadriline/error.hpp"

namespace quadriline {
namespace {

struct Reflection {
  Scalar r11, r12, r22;  // symmetric: r21 = r12
};

Reflection reflection_matrix(const Scalar& t) {
  const Field f = t.field();
  const Scalar denom = (f.one() + t * t).inverse();
  return {(f.one() - t * t) * denom, f.of(2) * t * denom, (t * t - f.one()) * denom};
}

Line reflect(const Line& l, const Reflection& r) {
  return Line{r.r11 * l.a + r.r12 * l.b, r.r12 * l.a + r.r22 * l.b, l.c};
}

// Original side vector P_j − P_i for adjacent roles, written as ±d1 or ±d2
// with d1 = P_B − P_A and d2 = P_C − P_B.
struct SideVector {
  int family;  // 0: d1, 1: d2
  int sign;
};

SideVector side_between(Role from, Role to) {
  const int i = static_cast<int>(from);
  const int j = static_cast<int>(to);
  auto forward = [](int k) { return SideVector{k % 2, k < 2 ? 1 : -1}; };
  if (j == (i + 1) % 4) return forward(i);
  if (i == (j + 1) % 4) {
    SideVector s = forward(j);
    s.sign = -s.sign;
    return s;
  }
  throw InvariantViolation("relabeling broke the cyclic order of the configuration");
}

}  // namespace

char role_name(Role r) { return "ABCD"[static_cast<int>(r)]; }

const Line& ConfigurationInput::line(Role r) const {
  switch (r) {
    case Role::A: return pair1[0];
    case Role::B: return pair2[0];
    case Role::C: return pair1[1];
    case Role::D: return pair2[1];
  }
  return pair1[0];
}

bool all_parallel(const ConfigurationInput& input) {
  const auto ls = input.lines();
  for (std::size_t i = 1; i < 4; ++i) {
    if (!parallel(ls[0], ls[i])) return false;
  }
  return true;
}

bool all_concurrent(const ConfigurationInput& input) {
  const auto ls = input.lines();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (auto p = intersect(ls[i], ls[j])) {
        for (const auto& l : ls) {
          if (!l.contains(*p)) return false;
        }
        return true;
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------- NormalizedConfig

NormalizedConfig NormalizedConfig::make(const Scalar& mA, const Scalar& mB, const Scalar& mC, const Scalar& mD,
                                        const Scalar& bA) {
  NormalizedConfig c;
  c.field_ = mA.field();
  for (const Scalar* s : {&mB, &mC, &mD, &bA}) {
    if (!(s->field() == c.field_)) throw FieldMismatch();
  }
  if (mC == mD) throw PreconditionError("standing form needs m_C != m_D");
  c.m_ = {mA, mB, mC, mD};
  c.b_ = {bA, c.field_.one(), c.field_.zero(), c.field_.zero()};
  c.e1_ = bA * mB - mA;
  c.e2_ = bA - c.field_.one();
  c.f1_ = bA * (mB - mC) * mD + (mD - mA) * mC;
  c.f2_ = (mD - mA) + bA * (mB - mC);
  return c;
}

NormalizedConfig NormalizedConfig::rational(long mA, long mB, long mC, long mD, long bA) {
  return make(Scalar::rational(mA), Scalar::rational(mB), Scalar::rational(mC), Scalar::rational(mD),
              Scalar::rational(bA));
}

// ---------------------------------------------------------------- PlaneMap

Point PlaneMap::apply(const Point& p) const {
  Point r = p;
  if (reflection) {
    const auto m = reflection_matrix(*reflection);
    r = {m.r11 * p.x + m.r12 * p.y, m.r12 * p.x + m.r22 * p.y};
  }
  return {scale * (r.x - shift.x), scale * (r.y - shift.y)};
}

Point PlaneMap::invert(const Point& p) const {
  const Scalar inv = scale.inverse();
  const Point u{p.x * inv + shift.x, p.y * inv + shift.y};
  if (!reflection) return u;
  const auto m = reflection_matrix(*reflection);
  return {m.r11 * u.x + m.r12 * u.y, m.r12 * u.x + m.r22 * u.y};
}

std::array<Scalar, 2> PlaneMap::invert_homogeneous(const Scalar& x, const Scalar& y, const Scalar& w) const {
  const Scalar inv = scale.inverse();
  const Scalar ux = x * inv + shift.x * w;
  const Scalar uy = y * inv + shift.y * w;
  if (!reflection) return {ux, uy};
  const auto m = reflection_matrix(*reflection);
  return {m.r11 * ux + m.r12 * uy, m.r12 * ux + m.r22 * uy};
}

Line PlaneMap::apply(const Line& l) const {
  const Line r = reflection ? reflect(l, reflection_matrix(*reflection)) : l;
  return Line{r.a, r.b, scale * (r.c - r.a * shift.x - r.b * shift.y)};
}

Line PlaneMap::invert(const Line& l) const {
  const Line r = reflection ? reflect(l, reflection_matrix(*reflection)) : l;
  return Line::make(scale * r.a, scale * r.b, l.c + scale * (l.a * shift.x + l.b * shift.y)).canonical();
}

TernaryQuadratic PlaneMap::invert(const TernaryQuadratic& q) const {
  const Field f = scale.field();
  Scalar r11 = f.one(), r12 = f.zero(), r22 = f.one();
  if (reflection) {
    const auto m = reflection_matrix(*reflection);
    r11 = m.r11;
    r12 = m.r12;
    r22 = m.r22;
  }
  return q
      .substitute({{{scale * r11, scale * r12, -scale * shift.x},
                    {scale * r12, scale * r22, -scale * shift.y},
                    {f.zero(), f.zero(), f.one()}}})
      .normalized();
}

Ratio PlaneMap::slope_to_normalized(const Ratio& r) const {
  const Field f = r.field();
  Scalar r11 = f.one(), r12 = f.zero(), r22 = f.one();
  if (reflection) {
    const auto m = reflection_matrix(*reflection);
    r11 = m.r11;
    r12 = m.r12;
    r22 = m.r22;
  }
  const Scalar& s = r.numer();
  const Scalar& t = r.denom();
  const SideVector d1 = side_between(source[0], source[1]);
  if (d1.family == 0) return Ratio(r12 * t + r22 * s, r11 * t + r12 * s);
  // The normalized first side runs along the input second side, which is
  // perpendicular to the input slope direction (t, s).
  return Ratio(-r12 * s + r22 * t, -r11 * s + r12 * t);
}

Ratio PlaneMap::aspect_to_normalized(const Ratio& r) const {
  const SideVector d1 = side_between(source[0], source[1]);
  const SideVector d2 = side_between(source[1], source[2]);
  const int eps = reflection ? -1 : 1;
  const Field f = r.field();
  const Scalar sign = f.of(d1.sign * d2.sign * eps);
  if (d1.family == 0) return Ratio(r.numer(), sign * r.denom());
  return Ratio(r.denom(), -sign * r.numer());
}

bool PlaneMap::is_identity() const {
  return labeling == 0 && !reflection && shift.x.is_zero() && shift.y.is_zero() && scale.is_one();
}

// ---------------------------------------------------------------- normalize

Normalization normalize(const ConfigurationInput& input) {
  const Field field = input.field;
  if (all_parallel(input)) throw AllParallelLines();
  if (all_concurrent(input)) throw PreconditionError("all four lines pass through one point");

  std::array<Line, 4> lines = input.lines();
  PlaneMap map;
  map.scale = field.one();
  map.shift = {field.zero(), field.zero()};

  bool any_vertical = false;
  for (const auto& l : lines) any_vertical = any_vertical || l.is_vertical();
  if (any_vertical) {
    const long limit = field.is_prime() ? static_cast<long>(field.modulus()) : 64;
    for (long tv = 1; tv < limit && !map.reflection; ++tv) {
      const Scalar t = field.of(tv);
      if ((field.one() + t * t).is_zero()) continue;
      const auto m = reflection_matrix(t);
      bool ok = true;
      for (const auto& l : lines) ok = ok && !reflect(l, m).is_vertical();
      if (ok) map.reflection = t;
    }
    if (!map.reflection) {
      throw PreconditionError("no reflection y = t*x removes the vertical lines in " + field.name());
    }
    const auto m = reflection_matrix(*map.reflection);
    for (auto& l : lines) l = reflect(l, m);
  }

  // Lines indexed by input role: A, B, C, D.
  for (int labeling = 0; labeling < 8; ++labeling) {
    std::array<Role, 2> p1{Role::A, Role::C};
    std::array<Role, 2> p2{Role::B, Role::D};
    if (labeling & 4) std::swap(p1[0], p1[1]);
    if (labeling & 2) std::swap(p2[0], p2[1]);
    if (labeling & 1) std::swap(p1, p2);
    const std::array<Role, 4> source{p1[0], p2[0], p1[1], p2[1]};
    auto line_of = [&](Role normalized) -> const Line& {
      return lines[static_cast<std::size_t>(source[static_cast<std::size_t>(normalized)])];
    };
    const Line& C = line_of(Role::C);
    const Line& D = line_of(Role::D);
    const Line& B = line_of(Role::B);
    if (parallel(C, D) || same_line(B, D)) continue;
    const Point q = *intersect(C, D);
    if (B.contains(q)) continue;

    map.labeling = labeling;
    map.source = source;
    map.shift = q;
    // Slope-intercept form of B after translating q to the origin.
    const Scalar b_intercept = (B.c - B.a * q.x - B.b * q.y) / B.b;
    map.scale = b_intercept.inverse();

    std::array<Scalar, 4> slopes;
    std::array<Scalar, 4> intercepts;
    for (Role r : kRoles) {
      const Line& original = line_of(r);
      const Line moved{original.a, original.b,
                       map.scale * (original.c - original.a * q.x - original.b * q.y)};
      slopes[static_cast<std::size_t>(r)] = -moved.a / moved.b;
      intercepts[static_cast<std::size_t>(r)] = moved.c / moved.b;
    }
    if (!intercepts[1].is_one() || !intercepts[2].is_zero() || !intercepts[3].is_zero()) {
      throw InvariantViolation("normalization did not reach standing form");
    }
    return {NormalizedConfig::make(slopes[0], slopes[1], slopes[2], slopes[3], intercepts[0]), map};
  }
  throw PreconditionError("no labeling of the pairs satisfies the standing assumptions");
}

// ---------------------------------------------------------------- diagonals and classes

std::string to_string(const Diagonal& d) {
  if (const auto* r = std::get_if<Ratio>(&d)) return r->to_string();
  switch (std::get<DiagonalMarker>(d)) {
    case DiagonalMarker::ACoincidesWithB: return "A=B";
    case DiagonalMarker::ACoincidesWithD: return "A=D";
    case DiagonalMarker::AtInfinity: return "at-infinity";
  }
  return "";
}

DiagonalSlopes diagonal_slopes(const NormalizedConfig& cfg) {
  DiagonalSlopes out{DiagonalMarker::ACoincidesWithB, DiagonalMarker::AtInfinity};
  if (!cfg.e1().is_zero() || !cfg.e2().is_zero()) out.E = Ratio(cfg.e1(), cfg.e2());
  if (!cfg.f1().is_zero() || !cfg.f2().is_zero()) {
    out.F = Ratio(cfg.f1(), cfg.f2());
  } else {
    out.F = cfg.bA().is_zero() ? DiagonalMarker::ACoincidesWithD : DiagonalMarker::AtInfinity;
  }
  return out;
}

std::string to_string(LocusShape s) {
  switch (s) {
    case LocusShape::NonDegenerateConic: return "NonDegenerateConic";
    case LocusShape::TwoLines: return "TwoLines";
    case LocusShape::LinePlusInfinity: return "LinePlusInfinity";
  }
  return "";
}

ConfigClass classify(const NormalizedConfig& cfg) {
  const Scalar minus_one = -cfg.field().one();
  const auto &mA = cfg.mA(), &mB = cfg.mB(), &mC = cfg.mC(), &mD = cfg.mD();
  ConfigClass c;
  c.degenerate = cfg.degeneracy().is_zero();
  c.twin_pairs = (mA == mD && mB == mC) || (mA * mC == minus_one && mB * mD == minus_one);
  c.dual_pairs = mA * mA == minus_one && mA == mB && (mB == mC || mB == mD);
  c.slope_path_at_infinity = c.twin_pairs;
  c.aspect_path_at_infinity = c.dual_pairs;
  if (c.slope_path_at_infinity || c.aspect_path_at_infinity) {
    c.locus_shape = LocusShape::LinePlusInfinity;
  } else if (c.degenerate) {
    c.locus_shape = LocusShape::TwoLines;
  }
  return c;
}

DegeneratingIntercepts degenerating_intercepts(const Scalar& mA, const Scalar& mB, const Scalar& mC,
                                               const Scalar& mD) {
  const Field f = mA.field();
  const Scalar one = f.one();
  const Scalar a = (mB - mC) * (mB * mD + one);
  const Scalar delta = (mA * mC + one) * (mB - mD) + (mB * mD + one) * (mA - mC);
  const Scalar c = (mA - mD) * (mA * mC + one);
  DegeneratingIntercepts out;
  if (a.is_zero() && delta.is_zero() && c.is_zero()) {
    out.all = true;
    return out;
  }
  out.values = solve_quadratic(a, -delta, c).roots;
  return out;
}

}  // namespace quadriline
