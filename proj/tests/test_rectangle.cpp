#include <doctest.h>

#include "quadriline/error.hpp"
#include "quadriline/census.hpp"
#include "support.hpp"

using namespace qtest;

namespace {

ProjectiveRectangle worked() {
  return rect({Q(-1, 3), Q(1, 3), Q(-1, 3), Q(0), Q(1, 3), Q(0), Q(1, 3), Q(1, 3), Q(1)});
}

std::array<Point, 4> pts(std::initializer_list<Point> l) {
  std::array<Point, 4> a;
  std::copy(l.begin(), l.end(), a.begin());
  return a;
}

}  // namespace

TEST_CASE("projective rectangles are canonical") {
  const auto a = rect({Q(-1), Q(1), Q(-1), Q(0), Q(1), Q(0), Q(1), Q(1), Q(3)});
  CHECK(a == worked());
  CHECK(a.w() == Q(1));
  const auto inf = rect({Q(2), Q(4), Q(2), Q(6), Q(-2), Q(0), Q(-2), Q(-2), Q(0)});
  CHECK(inf.coords()[7] == Q(1));
  CHECK(inf.at_infinity());
  CHECK_THROWS_AS(inf.affine_vertices(), AtInfinityRectangle);
  const Field f = Field::prime(7);
  std::array<Scalar, 9> c;
  c.fill(f.zero());
  c[2] = f.of(3);
  c[8] = f.of(5);
  const ProjectiveRectangle pf(c);
  CHECK(pf.coords()[2].is_one());
  std::array<Scalar, 9> zero;
  zero.fill(Q(0));
  CHECK_THROWS_AS(ProjectiveRectangle{zero}, PreconditionError);
}

TEST_CASE("complete_parallelogram") {
  const auto c = cfg1();
  const auto e = complete_parallelogram(c, Q(0), Q(0), Q(1));
  CHECK(e.affine_vertices() == pts({P(0, 1, 1, 1), P(0, 1, 1, 1), P(0, 1, 0, 1), P(0, 1, 0, 1)}));
  const auto inf = complete_parallelogram(c, Q(1), Q(1), Q(0));
  CHECK(inf == rect({Q(1), Q(2), Q(1), Q(3), Q(-1), Q(0), Q(-1), Q(-1), Q(0)}));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto cfg = random_rational_config(rng);
    const Scalar x = random_rational(rng);
    if (x.is_zero()) continue;
    const auto p = complete_parallelogram(cfg, x, x, Q(0));
    CHECK(in_configuration(cfg, p));
    CHECK(is_parallelogram(p));
  }
}

TEST_CASE("is_rectangle") {
  const auto c = cfg1();
  CHECK(in_configuration(c, worked()));
  CHECK(is_parallelogram(worked()));
  CHECK(is_rectangle(worked()));
  const auto p = complete_parallelogram(c, Q(1), Q(0), Q(1));
  CHECK(is_rectangle(p) == quadric_h(c).eval(Q(1), Q(0), Q(1)).is_zero());
  // Point pair p_AB, p_AB, p_CD, p_CD.
  CHECK(is_rectangle(rect({Q(0), Q(1), Q(0), Q(1), Q(0), Q(0), Q(0), Q(0), Q(1)})));
}

TEST_CASE("quadric h") {
  const auto h1 = quadric_h(cfg1());
  CHECK(h1.eval(Q(-1), Q(-1), Q(3)).is_zero());
  // h(X_A, X_B, 0) ∝ X_A² − 10·X_A·X_B + 12·X_B².
  const auto n = h1.normalized();
  CHECK(n.c[0] == Q(1));
  CHECK(n.c[1] == Q(12));
  CHECK(n.c[3] == Q(-10));
  const auto h3 = quadric_h(cfg3());
  CHECK(h3.c[0].is_zero());
  CHECK(h3.c[1].is_zero());
  CHECK(h3.c[3].is_zero());
}

TEST_CASE("h vanishes exactly on rectangles") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto cfg = random_rational_config(rng);
    const auto h = quadric_h(cfg);
    for (int k = 0; k < 10; ++k) {
      const Scalar xa = random_rational(rng), xb = random_rational(rng), w = Q(k % 3 == 0 ? 0 : 1);
      if (xa.is_zero() && xb.is_zero() && w.is_zero()) continue;
      CHECK(is_rectangle(complete_parallelogram(cfg, xa, xb, w)) == h.eval(xa, xb, w).is_zero());
    }
    // A point on the quadric: the slope path at some slope.
    const auto sol = rectangle_from_slope(cfg, R("1"), Q(1));
    for (const auto& r : sol.rectangles) CHECK(h.eval(r.x(Role::A), r.x(Role::B), r.w()).is_zero());
  }
}

TEST_CASE("slope_of and aspect_of") {
  CHECK(slope_of(worked()) == R("1/0"));
  CHECK(aspect_of(worked()) == R("-1/2"));
  const auto onE = rect({Q(0), Q(1), Q(0), Q(1), Q(0), Q(0), Q(0), Q(0), Q(1)});
  CHECK(slope_of(onE) == R("0"));
  CHECK(aspect_of(onE) == R("0"));
  CHECK(slope_of(pts({P(0, 1, 1, 1), P(0, 1, 0, 1), P(1, 1, 0, 1), P(1, 1, 1, 1)})) == R("1/0"));
  // B = C collapses the BC side.
  CHECK(aspect_of(pts({P(0, 1, 1, 1), P(1, 1, 0, 1), P(1, 1, 0, 1), P(0, 1, 1, 1)})) == R("1/0"));
  const Point o = P(0, 1, 0, 1);
  CHECK_FALSE(slope_of(pts({o, o, o, o})).has_value());
  CHECK_FALSE(aspect_of(pts({o, o, o, o})).has_value());
  CHECK_THROWS_AS(slope_of(pts({P(0, 1, 0, 1), P(1, 1, 0, 1), P(2, 1, 1, 1), P(1, 1, 1, 1)})), PreconditionError);
}

TEST_CASE("sigma and alpha") {
  CHECK(sigma(cfg1()) == BinaryForm::quadratic(Q(-3), Q(4), Q(3)));
  CHECK(sigma(cfg3()).is_zero());
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto cfg = random_rational_config(rng);
    const auto lhs = BinaryForm::quadratic(Q(1), Q(0), Q(1)) * sigma(cfg);
    const auto rhs = oracle::sigma_times_norm(to_oracle(cfg));
    for (int k = 0; k <= 4; ++k) CHECK(lhs.coeff(k).as_rational() == rhs[static_cast<std::size_t>(k)]);
    const auto cls = classify(cfg);
    CHECK(sigma(cfg).is_zero() == cls.twin_pairs);
    CHECK(alpha(cfg).is_zero() == cls.dual_pairs);
  }
  const Field f = Field::prime(5);
  const auto dual = NormalizedConfig::make(f.of(2), f.of(2), f.of(2), f.of(0), f.of(3));
  CHECK(alpha(dual).is_zero());
}

TEST_CASE("rectangles at infinity") {
  CHECK(slopes_at_infinity(cfg1()).roots.empty());
  CHECK(slopes_at_infinity(cfg3()).all);
  const auto three = aspects_at_infinity(NormalizedConfig::rational(2, 2, 2, 0, 5));
  CHECK(std::set<Ratio>(three.roots.begin(), three.roots.end()) == std::set<Ratio>{R("0"), R("1/0")});
  const Field f13 = Field::prime(13);
  const auto c13 = NormalizedConfig::make(f13.of(2), f13.of(3), f13.of(0), f13.of(1), f13.of(1));
  const auto roots = slopes_at_infinity(c13).roots;
  REQUIRE(roots.size() == 1);
  CHECK(sigma(c13).eval(roots[0]).is_zero());
  for (const Ratio& r : all_ratios(f13)) {
    CHECK(sigma(c13).eval(r).is_zero() == (r == roots[0]));
  }
}

TEST_CASE("slopes at infinity pair up as s/t and −t/s") {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    std::mt19937_64 rng(p);
    const Field f = Field::prime(p);
    for (int i = 0; i < 30; ++i) {
      const auto cfg = random_config(f, rng).config;
      const auto s = slopes_at_infinity(cfg);
      if (s.all) continue;
      for (const Ratio& r : s.roots) {
        CHECK(std::find(s.roots.begin(), s.roots.end(), r.perpendicular()) != s.roots.end());
      }
      const auto a = aspects_at_infinity(cfg);
      if (a.all) continue;
      const Scalar k = cfg.m(Role::A, Role::B) * cfg.m(Role::C, Role::D);
      const Scalar l = cfg.m(Role::B, Role::C) * cfg.m(Role::A, Role::D);
      for (const Ratio& r : a.roots) {
        if (l.is_zero() || k.is_zero()) continue;
        const Ratio partner(k * r.denom(), l * r.numer());
        CHECK(std::find(a.roots.begin(), a.roots.end(), partner) != a.roots.end());
      }
    }
  }
}

TEST_CASE("rectangle_from_slope") {
  const auto c = cfg1();
  const auto w3 = rectangle_from_slope(c, R("1/0"), Q(3));
  REQUIRE(w3.rectangles.size() == 1);
  CHECK(w3.rectangles[0] == worked());
  CHECK(w3.rectangles[0].x(Role::A) * Q(3) == Q(-1));
  const auto flat = rectangle_from_slope(c, R("0"), Q(1));
  REQUIRE(flat.rectangles.size() == 1);
  CHECK(flat.rectangles[0].affine_vertices() == pts({P(0, 1, 1, 1), P(0, 1, 1, 1), P(0, 1, 0, 1), P(0, 1, 0, 1)}));
  for (const char* s : {"0", "1", "2/3", "1/0"}) {
    const auto inf = rectangle_from_slope(cfg3(), R(s), Q(0));
    REQUIRE_FALSE(inf.rectangles.empty());
    for (const auto& r : inf.rectangles) {
      CHECK(r.at_infinity());
      CHECK(is_rectangle(r));
    }
  }
}

TEST_CASE("rectangle_from_aspect") {
  const auto c = cfg1();
  const auto a = rectangle_from_aspect(c, R("-1/2"), Q(5));
  REQUIRE(a.rectangles.size() == 1);
  CHECK(a.rectangles[0] == worked());
  const auto e = rectangle_from_aspect(c, R("0"), Q(1));
  REQUIRE(e.rectangles.size() == 1);
  CHECK(e.rectangles[0].affine_vertices()[0] == P(0, 1, 1, 1));
  CHECK(e.rectangles[0].affine_vertices()[1] == P(0, 1, 1, 1));
  const auto fdeg = rectangle_from_aspect(c, R("1/0"), Q(1));
  REQUIRE(fdeg.rectangles.size() == 1);
  const auto v = fdeg.rectangles[0].affine_vertices();
  CHECK(v[1] == v[2]);
  CHECK(v[1] == *intersect(c.line(Role::B), c.line(Role::C)));
  CHECK(v[0] == *intersect(c.line(Role::A), c.line(Role::D)));
}

TEST_CASE("both linear systems agree with the definitional equations") {
  std::mt19937_64 rng(14);
  int compared = 0;
  for (int i = 0; i < 100; ++i) {
    const auto cfg = random_rational_config(rng);
    const auto oc = to_oracle(cfg);
    for (const Ratio& r : sample_ratios(Field::rational(), 8)) {
      const auto s = r.numer().as_rational(), t = r.denom().as_rational();
      if (const auto v = oracle::rectangle_with_slope(oc, s, t)) {
        const auto got = rectangle_from_slope(cfg, r, Q(1));
        REQUIRE(got.rectangles.size() == 1);
        CHECK(got.rectangles[0].affine_vertices() == to_points(*v));
        ++compared;
      }
      if (const auto v = oracle::rectangle_with_aspect(oc, s, t)) {
        const auto got = rectangle_from_aspect(cfg, r, Q(1));
        REQUIRE(got.rectangles.size() == 1);
        CHECK(got.rectangles[0].affine_vertices() == to_points(*v));
        ++compared;
      }
    }
  }
  CHECK(compared > 1000);
}
