#include "quadriline/rectangle.hpp"

#include "quadriline/error.hpp"
#include "quadriline/linalg.hpp"

namespace quadriline {
namespace {

// Linear form in (X_A, X_B, X).
using Lin3 = std::array<Scalar, 3>;

Lin3 operator+(const Lin3& a, const Lin3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Lin3 operator-(const Lin3& a, const Lin3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Lin3 operator*(const Scalar& k, const Lin3& a) { return {k * a[0], k * a[1], k * a[2]}; }

TernaryQuadratic product(const Lin3& p, const Lin3& q) {
  return {{p[0] * q[0], p[1] * q[1], p[2] * q[2], p[0] * q[1] + p[1] * q[0], p[0] * q[2] + p[2] * q[0],
           p[1] * q[2] + p[2] * q[1]}};
}

TernaryQuadratic operator+(const TernaryQuadratic& a, const TernaryQuadratic& b) {
  TernaryQuadratic out = a;
  for (std::size_t i = 0; i < 6; ++i) out.c[i] += b.c[i];
  return out;
}

// Kernel of a 2×2 matrix [[a, b], [c, d]] as a ratio; nullopt when the matrix is zero.
std::optional<Ratio> kernel_ratio(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  if (!(a * d - b * c).is_zero()) {
    throw PreconditionError("slope/aspect equations are independent: the points do not form a rectangle");
  }
  if (!a.is_zero() || !b.is_zero()) return Ratio(-b, a);
  if (!c.is_zero() || !d.is_zero()) return Ratio(-d, c);
  return std::nullopt;
}

// Solves M·(x_A, x_B) = w·U for the given 2×2 system.
RectangleSet solve_system(const NormalizedConfig& cfg, const std::array<Scalar, 4>& M,
                          const std::array<Scalar, 2>& U, const Scalar& w) {
  const Field& f = cfg.field();
  RectangleSet out;
  auto emit = [&](const Scalar& xA, const Scalar& xB, const Scalar& ww) {
    out.rectangles.push_back(complete_parallelogram(cfg, xA, xB, ww));
  };
  if (w.is_zero()) {
    Matrix m{{M[0], M[1]}, {M[2], M[3]}};
    const auto kernel = nullspace(m, 2, f);
    for (const auto& v : kernel) emit(v[0], v[1], f.zero());
    out.is_pencil = kernel.size() == 2;
    return out;
  }
  Matrix m{{M[0], M[1], -U[0]}, {M[2], M[3], -U[1]}};
  auto kernel = nullspace(m, 3, f);
  // Bring a vector with nonzero w to the front.
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (!kernel[i][2].is_zero()) {
      std::swap(kernel[0], kernel[i]);
      break;
    }
  }
  if (kernel.empty() || kernel[0][2].is_zero()) return out;
  const Scalar k = w / kernel[0][2];
  const Vector base{k * kernel[0][0], k * kernel[0][1], w};
  emit(base[0], base[1], base[2]);
  for (std::size_t i = 1; i < kernel.size(); ++i) {
    const Scalar r = kernel[i][2] / kernel[0][2];
    emit(base[0] + kernel[i][0] - r * kernel[0][0], base[1] + kernel[i][1] - r * kernel[0][1], w);
  }
  out.is_pencil = kernel.size() > 1;
  return out;
}

}  // namespace

// ---------------------------------------------------------------- ProjectiveRectangle

ProjectiveRectangle::ProjectiveRectangle(std::array<Scalar, 9> coords) : coords_(std::move(coords)) {
  const bool rational = coords_[0].field().is_rational();
  const Scalar* pivot = nullptr;
  if (rational) {
    for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) {
      if (!it->is_zero()) {
        pivot = &*it;
        break;
      }
    }
  } else {
    for (const auto& c : coords_) {
      if (!c.is_zero()) {
        pivot = &c;
        break;
      }
    }
  }
  if (pivot == nullptr) throw PreconditionError("all nine projective coordinates are zero");
  const Scalar inv = pivot->inverse();
  for (auto& c : coords_) c *= inv;
}

std::array<Point, 4> ProjectiveRectangle::affine_vertices() const {
  if (at_infinity()) throw AtInfinityRectangle();
  const Scalar inv = w().inverse();
  std::array<Point, 4> out;
  for (Role r : kRoles) out[static_cast<std::size_t>(r)] = {x(r) * inv, y(r) * inv};
  return out;
}

std::array<Point, 4> ProjectiveRectangle::homogeneous_vertices() const {
  std::array<Point, 4> out;
  for (Role r : kRoles) out[static_cast<std::size_t>(r)] = {x(r), y(r)};
  return out;
}

std::string ProjectiveRectangle::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < 9; ++i) {
    if (i > 0) out += ":";
    out += coords_[i].to_string();
  }
  return out + "]";
}

bool in_configuration(const NormalizedConfig& cfg, const ProjectiveRectangle& p) {
  for (Role r : kRoles) {
    if (!(p.y(r) == cfg.m(r) * p.x(r) + cfg.b(r) * p.w())) return false;
  }
  return true;
}

bool is_parallelogram(const ProjectiveRectangle& p) {
  return p.x(Role::A) - p.x(Role::B) == p.x(Role::D) - p.x(Role::C) &&
         p.y(Role::A) - p.y(Role::B) == p.y(Role::D) - p.y(Role::C);
}

bool is_rectangle(const ProjectiveRectangle& p) {
  const auto [A, B, C, D] = p.homogeneous_vertices();
  (void)D;
  return ((C.x - B.x) * (B.x - A.x) + (C.y - B.y) * (B.y - A.y)).is_zero();
}

ProjectiveRectangle complete_parallelogram(const NormalizedConfig& cfg, const Scalar& xA, const Scalar& xB,
                                           const Scalar& w) {
  const Scalar one = cfg.field().one();
  const Scalar xC = (cfg.m(Role::A, Role::D) * xA + cfg.m(Role::D, Role::B) * xB + (cfg.bA() - one) * w) /
                    cfg.m(Role::D, Role::C);
  const Scalar xD = xA - xB + xC;
  const std::array<Scalar, 4> xs{xA, xB, xC, xD};
  std::array<Scalar, 9> coords;
  for (Role r : kRoles) {
    const auto i = static_cast<std::size_t>(r);
    coords[2 * i] = xs[i];
    coords[2 * i + 1] = cfg.m(r) * xs[i] + cfg.b(r) * w;
  }
  coords[8] = w;
  return ProjectiveRectangle(coords);
}

TernaryQuadratic quadric_h(const NormalizedConfig& cfg) {
  const Field& f = cfg.field();
  const Scalar zero = f.zero();
  const Scalar one = f.one();
  const Lin3 XA{one, zero, zero};
  const Lin3 XB{zero, one, zero};
  const Lin3 X{zero, zero, one};
  const Scalar inv = cfg.m(Role::D, Role::C).inverse();
  const Lin3 xC = inv * (cfg.m(Role::A, Role::D) * XA + cfg.m(Role::D, Role::B) * XB + (cfg.bA() - one) * X);
  const Lin3 yB_minus_yA = cfg.mB() * XB - cfg.mA() * XA + (one - cfg.bA()) * X;
  const Lin3 yC_minus_yB = cfg.mC() * xC - cfg.mB() * XB - X;
  return product(yB_minus_yA, yC_minus_yB) + product(XB - XA, xC - XB);
}

BinaryForm sigma(const NormalizedConfig& cfg) {
  const Scalar one = cfg.field().one();
  const auto &mA = cfg.mA(), &mB = cfg.mB(), &mC = cfg.mC(), &mD = cfg.mD();
  const Scalar lead = mA * mC - mB * mD;
  const Scalar beta = (mA * mC + one) * (mB + mD) - (mB * mD + one) * (mA + mC);
  return BinaryForm::quadratic(lead, -beta, -lead);
}

BinaryForm alpha(const NormalizedConfig& cfg) {
  const Scalar one = cfg.field().one();
  const auto &mA = cfg.mA(), &mB = cfg.mB(), &mC = cfg.mC(), &mD = cfg.mD();
  const Scalar gamma = (mA * mC - one) * (mB + mD) - (mB * mD - one) * (mA + mC);
  return BinaryForm::quadratic(cfg.m(Role::B, Role::C) * cfg.m(Role::A, Role::D), -gamma,
                               cfg.m(Role::A, Role::B) * cfg.m(Role::C, Role::D));
}

std::optional<Ratio> slope_of(const std::array<Point, 4>& v) {
  const auto& [A, B, C, D] = v;
  (void)D;
  return kernel_ratio(B.x - A.x, -(B.y - A.y), C.y - B.y, C.x - B.x);
}

std::optional<Ratio> aspect_of(const std::array<Point, 4>& v) {
  const auto& [A, B, C, D] = v;
  (void)D;
  return kernel_ratio(B.x - C.x, -(A.y - B.y), B.y - C.y, A.x - B.x);
}

ProjectiveRoots slopes_at_infinity(const NormalizedConfig& cfg) { return projective_roots(sigma(cfg)); }

ProjectiveRoots aspects_at_infinity(const NormalizedConfig& cfg) { return projective_roots(alpha(cfg)); }

RectangleSet rectangle_from_slope(const NormalizedConfig& cfg, const Ratio& r, const Scalar& w) {
  const Scalar& s = r.numer();
  const Scalar& t = r.denom();
  const auto &mA = cfg.mA(), &mB = cfg.mB(), &mC = cfg.mC(), &mD = cfg.mD();
  const Scalar one = cfg.field().one();
  const std::array<Scalar, 4> M{s - mA * t, mB * t - s, cfg.m(Role::A, Role::D) * (mC * s + t),
                                cfg.m(Role::C, Role::B) * (mD * s + t)};
  const std::array<Scalar, 2> U{(cfg.bA() - one) * t, (mD * s + t) - cfg.bA() * (mC * s + t)};
  return solve_system(cfg, M, U, w);
}

RectangleSet rectangle_from_aspect(const NormalizedConfig& cfg, const Ratio& r, const Scalar& w) {
  const Scalar& u = r.numer();
  const Scalar& v = r.denom();
  const auto &mA = cfg.mA(), &mB = cfg.mB(), &mC = cfg.mC(), &mD = cfg.mD();
  const Scalar one = cfg.field().one();
  const Scalar mDA = cfg.m(Role::D, Role::A);
  const Scalar mBC = cfg.m(Role::B, Role::C);
  const Scalar mCD = cfg.m(Role::C, Role::D);
  const std::array<Scalar, 4> M{mDA * u + mA * mCD * v, mBC * u - mB * mCD * v, mC * mDA * u - mCD * v,
                                mD * mBC * u + mCD * v};
  const std::array<Scalar, 2> U{(cfg.bA() - one) * (u - mCD * v), (cfg.bA() * mC - mD) * u};
  return solve_system(cfg, M, U, w);
}

}  // namespace quadriline
