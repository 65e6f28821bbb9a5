#include "quadriline/census.hpp"

#include "quadriline/error.hpp"
#include "quadriline/paths.hpp"

namespace quadriline {
namespace {

std::string key(const std::optional<Ratio>& r) { return r ? r->to_string() : "indeterminate"; }

template <typename F>
void for_each_parameter(const Field& field, F&& visit) {
  const long p = static_cast<long>(field.modulus());
  for (long xa = 0; xa < p; ++xa) {
    for (long xb = 0; xb < p; ++xb) visit(field.of(xa), field.of(xb), field.one());
  }
  for (long xa = 0; xa < p; ++xa) visit(field.of(xa), field.one(), field.zero());
  visit(field.one(), field.zero(), field.zero());
}

}  // namespace

std::set<ProjectiveRectangle> enumerate_rectangles(const NormalizedConfig& cfg) {
  if (!cfg.field().is_prime()) throw PreconditionError("census needs a prime field");
  std::set<ProjectiveRectangle> out;
  for_each_parameter(cfg.field(), [&](const Scalar& xa, const Scalar& xb, const Scalar& w) {
    ProjectiveRectangle p = complete_parallelogram(cfg, xa, xb, w);
    if (is_rectangle(p)) out.insert(std::move(p));
  });
  return out;
}

CensusReport verify_against_paths(const NormalizedConfig& cfg) {
  const Field& field = cfg.field();
  const std::set<ProjectiveRectangle> census = enumerate_rectangles(cfg);
  const ConfigClass cls = classify(cfg);

  CensusReport report;
  report.modulus = field.modulus();
  report.degenerate = cls.degenerate;
  report.twin_pairs = cls.twin_pairs;
  report.dual_pairs = cls.dual_pairs;
  report.total = census.size();
  for (const auto& p : census) {
    if (p.at_infinity()) ++report.at_infinity;
    ++report.by_slope[key(slope_of(p))];
    ++report.by_aspect[key(aspect_of(p))];
  }

  const TernaryQuadratic h = quadric_h(cfg);
  for_each_parameter(field, [&](const Scalar& xa, const Scalar& xb, const Scalar& w) {
    if (h.eval(xa, xb, w).is_zero()) ++report.quadric_points;
  });
  report.quadric_count_ok = report.quadric_points == report.total;
  if (!report.quadric_count_ok) {
    report.failures.push_back("quadric h has " + std::to_string(report.quadric_points) + " points, census " +
                              std::to_string(report.total));
  }

  const PathPolynomials slope = slope_path_polys(cfg);
  const PathPolynomials aspect = aspect_path_polys(cfg);
  std::map<ProjectiveRectangle, Ratio> slope_image;
  std::map<ProjectiveRectangle, Ratio> aspect_image;
  const auto ratios = all_ratios(field);
  for (const Ratio& r : ratios) {
    slope_image.emplace(slope.eval(r), r);
    aspect_image.emplace(aspect.eval(r), r);
  }
  report.slope_path_image = slope_image.size();
  report.aspect_path_image = aspect_image.size();

  std::set<ProjectiveRectangle> path_union;
  for (const auto& [p, r] : slope_image) {
    path_union.insert(p);
    if (aspect_image.count(p) != 0) ++report.path_intersection;
  }
  for (const auto& [p, r] : aspect_image) path_union.insert(p);

  report.union_covered = path_union == census;
  if (!report.union_covered) {
    for (const auto& p : census) {
      if (path_union.count(p) == 0) report.failures.push_back("census rectangle off both paths: " + p.to_string());
    }
    for (const auto& p : path_union) {
      if (census.count(p) == 0) report.failures.push_back("path point is not a rectangle: " + p.to_string());
    }
  }

  report.at_infinity_bound_ok = cls.twin_pairs || cls.dual_pairs || report.at_infinity <= 2;
  if (!report.at_infinity_bound_ok) {
    report.failures.push_back(std::to_string(report.at_infinity) + " rectangles at infinity without twin or dual pairs");
  }

  bool consistent = true;
  auto fail = [&](const std::string& why) {
    consistent = false;
    report.failures.push_back(why);
  };
  if (cls.degenerate) {
    std::optional<Ratio> aspect_const;
    for (const auto& [p, r] : slope_image) {
      const auto a = aspect_of(p);
      if (!a) continue;
      if (!aspect_const) aspect_const = a;
      if (!(*a == *aspect_const)) fail("slope path aspect varies at " + p.to_string());
    }
    const DiagonalSlopes diag = diagonal_slopes(cfg);
    std::optional<Ratio> expected;
    if (const auto* F = std::get_if<Ratio>(&diag.F)) {
      expected = *F;
    } else if (const auto* E = std::get_if<Ratio>(&diag.E)) {
      expected = E->perpendicular();
    }
    for (const auto& [p, r] : aspect_image) {
      const auto s = slope_of(p);
      if (!s) continue;
      if (expected && !(*s == *expected)) fail("aspect path slope " + s->to_string() + " differs from F at " + p.to_string());
      if (!expected) expected = s;
    }
  } else {
    if (slope_image.size() != aspect_image.size() || report.path_intersection != slope_image.size()) {
      fail("slope and aspect path images differ");
    }
    if (slope_image.size() != ratios.size()) fail("slope path is not injective");
    for (const auto& [p, r] : slope_image) {
      const auto s = slope_of(p);
      if (!s || !(*s == r)) fail("slope path rectangle " + p.to_string() + " does not have slope " + r.to_string());
    }
  }
  report.degenerate_consistency_ok = consistent;
  return report;
}

RandomConfig random_config(const Field& field, std::mt19937_64& rng) {
  if (!field.is_prime()) throw PreconditionError("random configurations are drawn over F_p");
  std::uniform_int_distribution<long> dist(0, static_cast<long>(field.modulus()) - 1);
  std::size_t rejected = 0;
  for (;;) {
    const Scalar mA = field.of(dist(rng)), mB = field.of(dist(rng)), mC = field.of(dist(rng)),
                 mD = field.of(dist(rng)), bA = field.of(dist(rng));
    if (mC == mD) {
      ++rejected;
      continue;
    }
    return {NormalizedConfig::make(mA, mB, mC, mD, bA), rejected};
  }
}

}  // namespace quadriline
