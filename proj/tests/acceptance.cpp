// Acceptance criteria: one PASS/FAIL line each, with wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quadriline/census.hpp"
#include "quadriline/error.hpp"
#include "quadriline/io.hpp"
#include "quadriline/locus.hpp"
#include "quadriline/paths.hpp"
#include "support.hpp"

using namespace qtest;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string info;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && elapsed >= budget_s) {
    out.ok = false;
    out.detail = "over budget";
  }
  if (!out.ok) ++failures;
  const std::string& note = out.ok ? out.info : out.detail;
  std::printf("%s %d %s (%.3f s, budget %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), elapsed, budget_s,
              note.empty() ? "" : ": ", note.c_str());
}

// Exact collinearity of points given as rationals.
bool collinear(const std::vector<Point>& pts) {
  std::vector<Point> distinct;
  for (const auto& p : pts)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  if (distinct.size() < 3) return true;
  const Point& a = distinct[0];
  const Point& b = distinct[1];
  for (std::size_t i = 2; i < distinct.size(); ++i) {
    const Point& c = distinct[i];
    if (!((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).is_zero()) return false;
  }
  return true;
}

oracle::Q q(const Scalar& s) { return s.as_rational(); }

void worked_rectangle(Outcome& out) {
  const auto in = load_config(data_file("cfg1.json"));
  const auto j = rect_report(in, PathKind::Slope, R("1/0"));
  const auto v = oracle::rectangle_with_slope(to_oracle(cfg1()), 1, 0);
  out.require(v.has_value(), "oracle system singular");
  const std::array<std::string, 4> names{"A", "B", "C", "D"};
  for (std::size_t i = 0; i < 4 && v; ++i) {
    const json expected = json::array({Scalar::rational((*v)[2 * i]).to_string(), Scalar::rational((*v)[2 * i + 1]).to_string()});
    out.require(j["vertices"][names[i]] == expected, "vertex " + names[i] + " differs from the oracle");
  }
  out.require(j["vertices"]["A"] == json::array({"-1/3", "1/3"}), "vertex A");
  out.require(j["vertices"]["B"] == json::array({"-1/3", "0"}), "vertex B");
  out.require(j["vertices"]["C"] == json::array({"1/3", "0"}), "vertex C");
  out.require(j["vertices"]["D"] == json::array({"1/3", "1/3"}), "vertex D");
  out.require(j["aspect"] == "-1/2", "aspect");
  out.require(j["center"] == json::array({"0", "1/6"}), "center");
}

void homography_round_trip(Outcome& out) {
  const auto c = cfg1();
  const auto h = homography(c);
  const auto ratios = sample_ratios(Field::rational(), 50);
  out.require(ratios.size() == 50, "sample size");
  for (const Ratio& r : ratios) {
    out.require(slope_path_eval(c, r) == aspect_path_eval(c, h.psi.apply(r)), "pi(r) != phi(Psi(r)) at " + r.to_string());
    out.require(h.phi.apply(h.psi.apply(r)) == r, "Phi(Psi(r)) != r at " + r.to_string());
  }
}

void degenerate_geometry(Outcome& out) {
  const auto c = cfg2();
  const auto cls = classify_report(load_config(data_file("cfg2.json")));
  out.require(cls["degenerate"] == true, "classify does not report degenerate");
  out.require(c.degeneracy().is_zero(), "e1f1+e2f2 != 0");
  // Gauss-Newton line from the three diagonal midpoints, computed by hand.
  const std::vector<Point> mids{P(1, 3, 1, 6), P(3, 4, 1, 2), P(13, 24, 1, 3)};
  std::vector<Point> aspect_centers = mids;
  std::vector<Point> slope_centers;
  for (const Ratio& r : sample_ratios(Field::rational(), 30)) {
    const auto a = aspect_path_eval(c, r);
    if (!a.at_infinity()) aspect_centers.push_back(center_of(a));
    const auto s = slope_path_eval(c, r);
    if (!s.at_infinity()) slope_centers.push_back(center_of(s));
  }
  out.require(collinear(aspect_centers), "aspect-path centers leave the Gauss-Newton line");
  const Line gn = Line::through(mids[0], mids[1]);
  out.require(gn.slope() == R("4/5"), "Gauss-Newton slope " + gn.slope().to_string());
  out.require(collinear(slope_centers), "slope-path centers are not collinear");
  const Line sl = Line::through(slope_centers.at(0), slope_centers.at(1));
  const Line g = Line::through(P(3, 4, 0, 1), P(1, 3, 2, 3));
  out.require(sl.slope() == R("-8/5"), "slope-path center line slope " + sl.slope().to_string());
  out.require(g.slope() == sl.slope(), "diagonal G not parallel");
  out.require(same_line(diagonal_g(c).line, g), "library diagonal G");
  out.require(same_line(gauss_newton_line(c).line, gn), "library Gauss-Newton line");
}

void identity_suite(Outcome& out) {
  std::mt19937_64 rng(424242);
  int degenerate = 0;
  for (int i = 0; i < 120; ++i) {
    const auto c = random_rational_config(rng);
    const std::string tag = "config #" + std::to_string(i);
    const Field f = c.field();
    const BinaryForm S = BinaryForm::linear(f.one(), f.zero());
    const BinaryForm T = BinaryForm::linear(f.zero(), f.one());
    const auto lhs = BinaryForm::quadratic(Q(1), Q(0), Q(1)) * sigma(c);
    const auto rhs = oracle::sigma_times_norm(to_oracle(c));
    for (int k = 0; k <= 4; ++k) out.require(q(lhs.coeff(k)) == rhs[static_cast<std::size_t>(k)], tag + ": factorization");
    const Scalar mCD = c.m(Role::C, Role::D);
    const auto sp = slope_path_polys(c);
    const auto ap = aspect_path_polys(c);
    out.require(sp.y[0] - sp.y[1] == mCD * (S * sp.lead), tag + ": Y_A-Y_B");
    out.require(sp.x[0] - sp.x[1] == mCD * (T * sp.lead), tag + ": X_A-X_B");
    out.require(sp.y[1] - sp.y[2] == -(T * sp.partner), tag + ": Y_B-Y_C");
    out.require(sp.x[1] - sp.x[2] == S * sp.partner, tag + ": X_B-X_C");
    out.require(ap.x[0] - ap.x[1] == -mCD * (S * ap.partner), tag + ": P_A-P_B");
    out.require(ap.y[0] - ap.y[1] == -mCD * (S * ap.lead), tag + ": Q_A-Q_B");
    out.require(ap.y[1] - ap.y[2] == mCD * (T * ap.partner), tag + ": Q_B-Q_C");
    out.require(ap.x[1] - ap.x[2] == -mCD * (T * ap.lead), tag + ": P_B-P_C");
    for (const auto* p : {&sp, &ap}) {
      out.require(p->x[0] + p->x[2] == p->x[1] + p->x[3], tag + ": x parallelogram closure");
      out.require(p->y[0] + p->y[2] == p->y[1] + p->y[3], tag + ": y parallelogram closure");
      out.require((p->x[0] - p->x[1]) * (p->x[1] - p->x[2]) == -((p->y[0] - p->y[1]) * (p->y[1] - p->y[2])),
                  tag + ": rectangle closure");
    }
    const bool generic = !c.degeneracy().is_zero();
    degenerate += generic ? 0 : 1;
    const auto sig = sigma(c);
    if (sp.w.is_zero()) {
      out.require(sig.is_zero(), tag + ": X = 0 but sigma != 0");
    } else {
      out.require(divide_exact(sig, sp.w).has_value(), tag + ": X does not divide sigma");
    }
    // Twin pairs make both X and sigma vanish identically; equality means equal nonzero forms.
    out.require((sp.w == sig && !sig.is_zero()) == generic, tag + ": X = sigma iff non-degenerate");
    const auto malpha = mCD * alpha(c);
    if (ap.w.is_zero()) {
      out.require(malpha.is_zero(), tag + ": P = 0 but alpha != 0");
    } else {
      const auto quot = divide_exact(malpha, ap.w);
      out.require(quot.has_value(), tag + ": P does not divide m_CD*alpha");
      if (quot) out.require((*quot == BinaryForm::constant(mCD)) == generic, tag + ": P = alpha iff non-degenerate");
    }
  }
  out.require(degenerate >= 10, "too few degenerate samples: " + std::to_string(degenerate));
  out.info = std::to_string(degenerate) + " degenerate";
}

void census_equivalence(Outcome& out) {
  std::size_t configs = 0, degenerate = 0, special = 0, rectangles = 0;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const Field f = Field::prime(p);
    std::mt19937_64 rng(9000 + p);
    for (int i = 0; i < 24; ++i) {
      const auto c = random_config(f, rng).config;
      const std::string tag = "F_" + std::to_string(p) + " config #" + std::to_string(i);
      auto res = [](const Scalar& s) { return static_cast<std::int64_t>(s.as_residue()); };
      const auto brute =
          oracle::brute_force_rectangles({res(c.mA()), res(c.mB()), res(c.mC()), res(c.mD())}, res(c.bA()),
                                         static_cast<std::int64_t>(p));
      std::set<ProjectiveRectangle> pi_image, phi_image;
      std::map<Ratio, ProjectiveRectangle> pi_of;
      for (const Ratio& r : all_ratios(f)) {
        pi_of.emplace(r, slope_path_eval(c, r));
        pi_image.insert(pi_of.at(r));
        phi_image.insert(aspect_path_eval(c, r));
      }
      std::set<oracle::Residues> images;
      for (const auto* s : {&pi_image, &phi_image})
        for (const auto& r : *s) {
          oracle::Residues v;
          for (std::size_t k = 0; k < 9; ++k) v[k] = res(r.coords()[k]);
          images.insert(v);
        }
      out.require(images == brute, tag + ": brute force != pi-image U phi-image");
      const auto cls = classify(c);
      ++configs;
      degenerate += cls.degenerate ? 1 : 0;
      special += cls.twin_pairs || cls.dual_pairs ? 1 : 0;
      rectangles += brute.size();
      std::size_t at_inf = 0;
      for (const auto& v : brute) at_inf += v[8] == 0 ? 1 : 0;
      if (!cls.twin_pairs && !cls.dual_pairs) out.require(at_inf <= 2, tag + ": more than two at infinity");
      if (cls.degenerate) {
        std::set<Ratio> aspects, slopes;
        for (const auto& [r, x] : pi_of)
          if (const auto a = aspect_of(x)) aspects.insert(*a);
        for (const auto& x : phi_image)
          if (const auto s = slope_of(x)) slopes.insert(*s);
        out.require(aspects.size() <= 1, tag + ": aspect not constant on the slope path");
        out.require(slopes.size() <= 1, tag + ": slope not constant on the aspect path");
        const auto d = diagonal_slopes(c);
        const Ratio expected =
            std::holds_alternative<Ratio>(d.F) ? std::get<Ratio>(d.F) : std::get<Ratio>(d.E).perpendicular();
        if (!slopes.empty()) out.require(*slopes.begin() == expected, tag + ": aspect-path slope is not F's slope");
      } else {
        out.require(pi_image == phi_image, tag + ": pi-image != phi-image");
        out.require(pi_image.size() == p + 1, tag + ": slope path not injective");
        for (const auto& [r, x] : pi_of) out.require(slope_of(x) == r, tag + ": slope of pi(r) != r");
      }
      out.require(verify_against_paths(c).ok(), tag + ": library census reports failures");
    }
  }
  out.info = std::to_string(configs) + " configs, " + std::to_string(degenerate) + " degenerate, " +
             std::to_string(special) + " twin/dual, " + std::to_string(rectangles) + " rectangles";
}

void twin_pairs(Outcome& out) {
  const auto c = cfg3();
  out.require(sigma(c).is_zero(), "sigma is not identically zero");
  const auto sp = slope_path_polys(c);
  out.require(sp.w.is_zero(), "slope path has nonzero w");
  for (const Ratio& r : sample_ratios(Field::rational(), 20)) {
    const auto x = slope_path_eval(c, r);
    out.require(x.at_infinity() && is_rectangle(x), "pi(" + r.to_string() + ") is not an at-infinity rectangle");
  }
  std::vector<Point> centers;
  for (const Ratio& r : sample_ratios(Field::rational(), 30)) {
    const auto a = aspect_path_eval(c, r);
    if (!a.at_infinity()) centers.push_back(center_of(a));
  }
  out.require(centers.size() >= 2, "too few affine rectangles");
  out.require(collinear(centers), "affine centers are not collinear");
  const auto rep = centers_paths(c);
  out.require(rep.slope_centers.kind == CenterImage::Kind::AtInfinity, "slope centers not at infinity");
  out.require(rep.aspect_centers.kind == CenterImage::Kind::Line, "aspect centers are not a line");
  if (rep.aspect_centers.line)
    for (const auto& p : centers) out.require(rep.aspect_centers.line->contains(p), "center off the reported line");
}

void all_parallel_lines(Outcome& out) {
  const auto shared = locus_report(load_config(data_file("parallel_shared.json")));
  out.require(shared["midline_shared"] == true, "y=1,-1,2,-2 should share a midline");
  out.require(shared["locus"] == to_json(Line::make(Q(0), Q(1), Q(0))), "shared midline is y=0");
  const auto split = locus_report(load_config(data_file("parallel_split.json")));
  out.require(split["midline_shared"] == false, "y=1,-1,3,0 should not share a midline");
  out.require(split["description"] == "no inscribed rectangles", "no-rectangle verdict");
  const auto f7 = locus_report(load_config(data_file("parallel_f7.json")));
  out.require(f7["midline_shared"] == true, "F_7 example should share a midline");
  const Field f = Field::prime(7);
  out.require(f7["locus"] == to_json(Line::make(f.zero(), f.one(), f.zero())), "F_7 midline is y=0");
}

}  // namespace

int main() {
  criterion(1, "worked rectangle for CFG1 at slope 1/0", 1, worked_rectangle);
  criterion(2, "homography round trip on 50 ratios", 1, homography_round_trip);
  criterion(3, "degenerate geometry of CFG2", 10, degenerate_geometry);
  criterion(4, "identity suite over 120 random rational configurations", 10, identity_suite);
  criterion(5, "census equivalence over F_5, F_7, F_11, F_13", 60, census_equivalence);
  criterion(6, "twin-pair behaviour of CFG3", 10, twin_pairs);
  criterion(7, "all-parallel configurations", 10, all_parallel_lines);
  return failures == 0 ? 0 : 1;
}
