#include "quadriline/paths.hpp"

#include "quadriline/error.hpp"

namespace quadriline {
namespace {

BinaryForm lin(const Scalar& a, const Scalar& b) { return BinaryForm::linear(a, b); }
BinaryForm cst(const Scalar& c) { return BinaryForm::constant(c); }

void fill_lines(const NormalizedConfig& cfg, PathPolynomials& p) {
  for (Role r : kRoles) {
    const auto i = static_cast<std::size_t>(r);
    p.y[i] = cfg.m(r) * p.x[i] + cfg.b(r) * p.w;
  }
}

}  // namespace

std::string to_string(PathKind k) { return k == PathKind::Slope ? "slope" : "aspect"; }

std::string to_string(PathCase c) {
  switch (c) {
    case PathCase::BothZero: return "BothZero";
    case PathCase::Generic: return "Generic";
    case PathCase::Orthogonal: return "Orthogonal";
  }
  return "";
}

std::array<BinaryForm, 9> PathPolynomials::coordinates() const {
  return {x[0], y[0], x[1], y[1], x[2], y[2], x[3], y[3], w};
}

ProjectiveRectangle PathPolynomials::eval(const Ratio& r) const {
  const auto forms = coordinates();
  std::array<Scalar, 9> coords;
  for (std::size_t i = 0; i < 9; ++i) coords[i] = forms[i].eval(r);
  return ProjectiveRectangle(coords);
}

bool PathPolynomials::has_common_zero() const {
  const auto forms = coordinates();
  return have_common_projective_zero({forms.begin(), forms.end()});
}

PathPolynomials slope_path_polys(const NormalizedConfig& cfg) {
  const Field& f = cfg.field();
  const Scalar zero = f.zero();
  const Scalar one = f.one();
  PathPolynomials p{PathKind::Slope, PathCase::Generic, cst(zero), cst(one), {cst(zero), cst(zero), cst(zero), cst(zero)},
                    {cst(zero), cst(zero), cst(zero), cst(zero)}, cst(zero)};
  if (cfg.e1().is_zero() && cfg.e2().is_zero()) {
    p.path_case = PathCase::BothZero;
  } else if (!cfg.degeneracy().is_zero()) {
    p.lead = lin(cfg.e1(), cfg.e2());
    p.partner = lin(cfg.f2(), -cfg.f1());
  } else {
    p.path_case = PathCase::Orthogonal;
    p.lead = cst(one);
    p.partner = cst(!cfg.e1().is_zero() ? cfg.f2() / cfg.e1() : -cfg.f1() / cfg.e2());
  }
  const BinaryForm S = lin(one, zero);
  const BinaryForm& E = p.lead;
  const BinaryForm& F = p.partner;
  const BinaryForm cT_minus_S = lin(-one, cfg.mC());
  const BinaryForm dT_minus_S = lin(-one, cfg.mD());
  p.x[0] = cT_minus_S * E + S * F;
  p.x[1] = dT_minus_S * E + S * F;
  p.x[2] = dT_minus_S * E;
  p.x[3] = cT_minus_S * E;
  p.w = cfg.m(Role::B, Role::C) * (lin(one, -cfg.mD()) * E) - lin(cfg.mB(), one) * F;
  fill_lines(cfg, p);
  return p;
}

PathPolynomials aspect_path_polys(const NormalizedConfig& cfg) {
  const Field& f = cfg.field();
  const Scalar zero = f.zero();
  const Scalar one = f.one();
  const Scalar mCD = cfg.m(Role::C, Role::D);
  const Scalar mBC = cfg.m(Role::B, Role::C);
  PathPolynomials p{PathKind::Aspect, PathCase::Generic, cst(zero), cst(one), {cst(zero), cst(zero), cst(zero), cst(zero)},
                    {cst(zero), cst(zero), cst(zero), cst(zero)}, cst(zero)};
  if (cfg.f1().is_zero() && cfg.e2().is_zero()) {
    p.path_case = PathCase::BothZero;
  } else if (!cfg.degeneracy().is_zero()) {
    const Scalar inv = mCD.inverse();
    p.lead = lin(cfg.f1() * inv, cfg.e2());
    p.partner = lin(cfg.f2() * inv, -cfg.e1());
  } else {
    p.path_case = PathCase::Orthogonal;
    p.lead = cst(one);
    p.partner = cst(!cfg.e2().is_zero() ? -cfg.e1() / cfg.e2() : cfg.f2() / cfg.f1());
  }
  const BinaryForm U = lin(one, zero);
  const BinaryForm& M = p.lead;
  const BinaryForm& N = p.partner;
  const BinaryForm U_minus_cdV = lin(one, -mCD);
  p.x[0] = U_minus_cdV * M - cfg.mC() * (U * N);
  p.x[1] = U_minus_cdV * M - cfg.mD() * (U * N);
  p.x[2] = U * M - cfg.mD() * (U * N);
  p.x[3] = U * M - cfg.mC() * (U * N);
  p.w = lin(-mBC, mCD * cfg.mB()) * M + lin(mBC * cfg.mD(), mCD) * N;
  fill_lines(cfg, p);
  return p;
}

ProjectiveRectangle slope_path_eval(const NormalizedConfig& cfg, const Ratio& r) {
  return slope_path_polys(cfg).eval(r);
}

ProjectiveRectangle aspect_path_eval(const NormalizedConfig& cfg, const Ratio& r) {
  return aspect_path_polys(cfg).eval(r);
}

namespace {

PathRectangle with_vertices(const NormalizedConfig& cfg, ProjectiveRectangle p) {
  PathRectangle out{std::move(p), std::nullopt};
  if (out.projective.at_infinity()) return out;
  const auto v = out.projective.affine_vertices();
  for (Role r : kRoles) {
    if (!cfg.line(r).contains(v[static_cast<std::size_t>(r)])) {
      throw InvariantViolation(std::string("path vertex off line ") + role_name(r));
    }
  }
  out.vertices = v;
  return out;
}

}  // namespace

PathRectangle affine_vertices_for_slope(const NormalizedConfig& cfg, const Ratio& r) {
  return with_vertices(cfg, slope_path_eval(cfg, r));
}

PathRectangle affine_vertices_for_aspect(const NormalizedConfig& cfg, const Ratio& r) {
  return with_vertices(cfg, aspect_path_eval(cfg, r));
}

PathHomography homography(const NormalizedConfig& cfg) {
  if (cfg.degeneracy().is_zero()) throw DegenerateConfiguration();
  const Scalar mCD = cfg.m(Role::C, Role::D);
  const Scalar inv = mCD.inverse();
  PathHomography h{Homography{{mCD * cfg.e1(), mCD * cfg.e2(), cfg.f2(), -cfg.f1()}},
                   Homography{{cfg.f1() * inv, cfg.e2(), cfg.f2() * inv, -cfg.e1()}}};
  if (!(h.psi * h.phi).is_scalar_identity()) throw InvariantViolation("path homographies are not inverse");
  return h;
}

}  // namespace quadriline
