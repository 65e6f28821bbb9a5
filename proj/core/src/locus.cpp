#include "quadriline/locus.hpp"

#include "quadriline/error.hpp"
#include "quadriline/linalg.hpp"

namespace quadriline {
namespace {

Point meet(const NormalizedConfig& cfg, Role a, Role b) {
  if (auto p = intersect(cfg.line(a), cfg.line(b))) return *p;
  throw ParallelPairObstruction(std::string{role_name(a), role_name(b)});
}

// The common zero of two linear forms, if it is unique.
std::optional<Ratio> common_root(const BinaryForm& f, const BinaryForm& g) {
  const Field& field = f.field();
  Matrix m{{f.coeff(0), f.coeff(1)}, {g.coeff(0), g.coeff(1)}};
  const auto kernel = nullspace(m, 2, field);
  if (kernel.size() != 1) return std::nullopt;
  return Ratio(kernel[0][0], kernel[0][1]);
}

ProjectiveRectangle rectangle_centered_at(const PathPolynomials& path, const Point& c, const char* what) {
  const CenterImage img = center_image(path);
  const auto& F = img.center_map;
  if (F[0].degree() != 1) throw PreconditionError("center search needs a path of degree one");
  const auto r = common_root(F[0] - c.x * F[2], F[1] - c.y * F[2]);
  if (!r) throw InvariantViolation(std::string("no unique rectangle for the ") + what);
  ProjectiveRectangle p = path.eval(*r);
  if (p.at_infinity() || !(center_of(p) == c)) {
    throw InvariantViolation(std::string("the ") + what + " rectangle has the wrong center");
  }
  return p;
}

std::optional<ProjectiveRectangle> infinity_point(const PathPolynomials& path) {
  if (path.w.is_zero() || path.w.degree() != 1) return std::nullopt;
  const auto roots = projective_roots(path.w);
  if (roots.roots.empty()) return std::nullopt;
  return path.eval(roots.roots.front());
}

Line midline(const Line& l1, const Line& l2) {
  const Scalar k = !l2.a.is_zero() ? l1.a / l2.a : l1.b / l2.b;
  const Scalar half = l1.field().of(2).inverse();
  return Line{l1.a, l1.b, (l1.c + k * l2.c) * half}.canonical();
}

}  // namespace

std::string to_string(LineTag t) {
  switch (t) {
    case LineTag::GaussNewton: return "GaussNewton";
    case LineTag::SlopeCenters: return "SlopeCenters";
    case LineTag::AspectCenters: return "AspectCenters";
    case LineTag::DiagonalG: return "DiagonalG";
  }
  return "";
}

std::string to_string(CenterImage::Kind k) {
  switch (k) {
    case CenterImage::Kind::AtInfinity: return "at-infinity";
    case CenterImage::Kind::Point: return "point";
    case CenterImage::Kind::Line: return "line";
    case CenterImage::Kind::Conic: return "conic";
  }
  return "";
}

Point center_of(const ProjectiveRectangle& p) {
  if (p.at_infinity()) throw AtInfinityRectangle();
  const Scalar inv = (p.field().of(2) * p.w()).inverse();
  const Point ac{(p.x(Role::A) + p.x(Role::C)) * inv, (p.y(Role::A) + p.y(Role::C)) * inv};
  const Point bd{(p.x(Role::B) + p.x(Role::D)) * inv, (p.y(Role::B) + p.y(Role::D)) * inv};
  if (!(ac == bd)) throw InvariantViolation("diagonals of a parallelogram do not bisect each other");
  return ac;
}

AffineLineDescription gauss_newton_line(const NormalizedConfig& cfg) {
  // Sequenced so the first missing intersection in A∩B, C∩D, A∩D, B∩C, A∩C, B∩D is reported.
  auto mid = [&](Role a, Role b, Role c, Role d) {
    const Point p = meet(cfg, a, b);
    const Point q = meet(cfg, c, d);
    return midpoint(p, q);
  };
  const std::array<Point, 3> mids{mid(Role::A, Role::B, Role::C, Role::D), mid(Role::A, Role::D, Role::B, Role::C),
                                  mid(Role::A, Role::C, Role::B, Role::D)};
  std::optional<Line> line;
  for (std::size_t i = 0; i < 3 && !line; ++i) {
    for (std::size_t j = i + 1; j < 3 && !line; ++j) {
      if (!(mids[i] == mids[j])) line = Line::through(mids[i], mids[j]);
    }
  }
  if (!line) throw PreconditionError("the three diagonal midpoints coincide");
  for (const auto& m : mids) {
    if (!line->contains(m)) throw InvariantViolation("diagonal midpoints are not collinear");
  }
  return {*line, LineTag::GaussNewton};
}

AffineLineDescription diagonal_g(const NormalizedConfig& cfg) {
  const Point ac = meet(cfg, Role::A, Role::C);
  const Point bd = meet(cfg, Role::B, Role::D);
  if (ac == bd) throw PreconditionError("A∩C and B∩D coincide");
  return {Line::through(ac, bd), LineTag::DiagonalG};
}

// ---------------------------------------------------------------- center images

bool CenterImage::contains(const Point& p) const {
  const Scalar one = p.x.field().one();
  switch (kind) {
    case Kind::AtInfinity: return false;
    case Kind::Point: return *point == p;
    case Kind::Line: return line->contains(p);
    case Kind::Conic: return conic->eval(p.x, p.y, one).is_zero();
  }
  return false;
}

CenterImage center_image(const PathPolynomials& path) {
  const Field& f = path.w.field();
  CenterImage img;
  img.center_map = {path.x[0] + path.x[2], path.y[0] + path.y[2], f.of(2) * path.w};
  const auto& F = img.center_map;
  if (F[2].is_zero()) return img;

  const int d = F[2].degree();
  auto coeff = [&](const BinaryForm& g, int i) { return g.degree() == d ? g.coeff(i) : f.zero(); };

  Matrix linear(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) linear[static_cast<std::size_t>(i)] = {coeff(F[0], i), coeff(F[1], i), coeff(F[2], i)};
  const auto relations = nullspace(linear, 3, f);
  if (relations.size() >= 2) {
    img.kind = CenterImage::Kind::Point;
    // F0 = λ·F2 and F1 = μ·F2; read λ, μ off a nonzero coefficient of F2.
    for (int i = 0; i <= d; ++i) {
      if (coeff(F[2], i).is_zero()) continue;
      img.point = Point{coeff(F[0], i) / coeff(F[2], i), coeff(F[1], i) / coeff(F[2], i)};
      break;
    }
    return img;
  }
  if (relations.size() == 1) {
    const auto& r = relations[0];
    img.kind = CenterImage::Kind::Line;
    img.line = Line::make(r[0], r[1], -r[2]).canonical();
    return img;
  }

  std::array<TernaryQuadratic, 6> monomials;
  for (std::size_t k = 0; k < 6; ++k) {
    monomials[k].c.fill(f.zero());
    monomials[k].c[k] = f.one();
  }
  Matrix quad(static_cast<std::size_t>(2 * d + 1), Vector(6, f.zero()));
  for (std::size_t k = 0; k < 6; ++k) {
    const BinaryForm composed = monomials[k].compose(F[0], F[1], F[2]);
    for (int i = 0; i <= 2 * d; ++i) quad[static_cast<std::size_t>(i)][k] = composed.coeff(i);
  }
  const auto conics = nullspace(quad, 6, f);
  if (conics.size() != 1) throw InvariantViolation("center image is not a unique conic");
  TernaryQuadratic q;
  for (std::size_t k = 0; k < 6; ++k) q.c[k] = conics[0][k];
  img.kind = CenterImage::Kind::Conic;
  img.conic = q.normalized();
  return img;
}

LocusReport centers_paths(const NormalizedConfig& cfg, std::size_t samples) {
  LocusReport report;
  report.classification = classify(cfg);
  const PathPolynomials slope = slope_path_polys(cfg);
  const PathPolynomials aspect = aspect_path_polys(cfg);
  report.slope_centers = center_image(slope);
  report.aspect_centers = center_image(aspect);
  try {
    report.gauss_newton = gauss_newton_line(cfg);
  } catch (const ParallelPairObstruction&) {
  }
  try {
    report.diagonal_g = diagonal_g(cfg);
  } catch (const ParallelPairObstruction&) {
  }
  for (const Ratio& r : sample_ratios(cfg.field(), samples)) {
    for (const auto* pair : {&slope, &aspect}) {
      const ProjectiveRectangle p = pair->eval(r);
      if (p.at_infinity()) continue;
      const CenterImage& img = pair == &slope ? report.slope_centers : report.aspect_centers;
      if (!img.contains(center_of(p))) {
        throw InvariantViolation("sampled center at " + r.to_string() + " is off the " + to_string(pair->kind) +
                                 " locus");
      }
      ++report.verified_samples;
    }
  }
  return report;
}

SpecialRectangles special_rectangles(const NormalizedConfig& cfg) {
  if (!cfg.degeneracy().is_zero()) throw PreconditionError("special rectangles need a degenerate configuration");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (cfg.m(kRoles[i]) == cfg.m(kRoles[j])) {
        throw ParallelPairObstruction(std::string{role_name(kRoles[i]), role_name(kRoles[j])});
      }
    }
  }
  const Scalar minus_one = -cfg.field().one();
  if (cfg.mA() * cfg.mC() == minus_one && cfg.mB() * cfg.mD() == minus_one) {
    throw PreconditionError("both pairs are orthogonal");
  }
  const PathPolynomials slope = slope_path_polys(cfg);
  const PathPolynomials aspect = aspect_path_polys(cfg);
  const CenterImage s_img = center_image(slope);
  const CenterImage a_img = center_image(aspect);
  if (s_img.kind != CenterImage::Kind::Line || a_img.kind != CenterImage::Kind::Line) {
    throw InvariantViolation("degenerate configuration without two center lines");
  }
  const auto center_point = intersect(*s_img.line, *a_img.line);
  if (!center_point) throw InvariantViolation("the two center lines are parallel");

  const Point pAB = meet(cfg, Role::A, Role::B);
  const Point pBC = meet(cfg, Role::B, Role::C);
  const Point pCD = meet(cfg, Role::C, Role::D);
  const Point pAD = meet(cfg, Role::A, Role::D);
  const Scalar quarter = cfg.field().of(4).inverse();
  const Point centroid{(pAB.x + pBC.x + pCD.x + pAD.x) * quarter, (pAB.y + pBC.y + pCD.y + pAD.y) * quarter};

  return SpecialRectangles{rectangle_centered_at(slope, *center_point, "center"), *center_point,
                           rectangle_centered_at(aspect, centroid, "centroid"), centroid,
                           infinity_point(slope), infinity_point(aspect)};
}

AllParallelReport all_parallel_analysis(const ConfigurationInput& input) {
  if (!all_parallel(input)) throw PreconditionError("the four lines are not all parallel");
  AllParallelReport report;
  report.ac_midline = midline(input.line(Role::A), input.line(Role::C));
  report.bd_midline = midline(input.line(Role::B), input.line(Role::D));
  report.midline_shared = report.ac_midline == report.bd_midline;
  report.description = report.midline_shared
                           ? "rectangle locus is the shared midline; rectangles form a two-parameter family "
                             "indexed by x_A != x_B"
                           : "no inscribed rectangles";
  return report;
}

}  // namespace quadriline
