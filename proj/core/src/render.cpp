#include "quadriline/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "quadriline/error.hpp"
#include "quadriline/locus.hpp"
#include "quadriline/paths.hpp"

namespace quadriline {
namespace {

struct P2 {
  double x;
  double y;
};

P2 to_p2(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Box {
  double minx = std::numeric_limits<double>::infinity();
  double miny = std::numeric_limits<double>::infinity();
  double maxx = -std::numeric_limits<double>::infinity();
  double maxy = -std::numeric_limits<double>::infinity();

  void add(const P2& p) {
    minx = std::min(minx, p.x);
    miny = std::min(miny, p.y);
    maxx = std::max(maxx, p.x);
    maxy = std::max(maxy, p.y);
  }
  bool empty() const { return minx > maxx; }
  bool inside(const P2& p) const { return p.x >= minx && p.x <= maxx && p.y >= miny && p.y <= maxy; }
};

// The part of the line a·x + b·y = c inside the box, if any.
std::optional<std::pair<P2, P2>> clip(const Line& l, const Box& box) {
  const double a = l.a.to_double(), b = l.b.to_double(), c = l.c.to_double();
  const double n2 = a * a + b * b;
  const P2 p0{a * c / n2, b * c / n2};
  const P2 dir{b, -a};
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  auto slab = [&](double p, double d, double mn, double mx) {
    if (std::abs(d) < 1e-300) return p >= mn && p <= mx;
    double t1 = (mn - p) / d, t2 = (mx - p) / d;
    if (t1 > t2) std::swap(t1, t2);
    lo = std::max(lo, t1);
    hi = std::min(hi, t2);
    return lo <= hi;
  };
  if (!slab(p0.x, dir.x, box.minx, box.maxx) || !slab(p0.y, dir.y, box.miny, box.maxy)) return std::nullopt;
  return std::make_pair(P2{p0.x + lo * dir.x, p0.y + lo * dir.y}, P2{p0.x + hi * dir.x, p0.y + hi * dir.y});
}

class Canvas {
 public:
  explicit Canvas(Box box) : box_(box) {
    const double w = box.maxx - box.minx;
    const double h = box.maxy - box.miny;
    scale_ = 800.0 / w;
    height_ = h * scale_;
  }

  std::string xy(const P2& p) const { return num((p.x - box_.minx) * scale_) + "," + num((box_.maxy - p.y) * scale_); }

  void segment(const std::pair<P2, P2>& s, const std::string& style) {
    out_ << "  <polyline points=\"" << xy(s.first) << " " << xy(s.second) << "\" " << style << "/>\n";
  }
  void polygon(const std::vector<P2>& pts, const std::string& style) {
    out_ << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << xy(pts[i]);
    out_ << "\" " << style << "/>\n";
  }
  void polyline(const std::vector<P2>& pts, const std::string& style) {
    if (pts.size() < 2) return;
    out_ << "  <polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << xy(pts[i]);
    out_ << "\" " << style << "/>\n";
  }
  void dot(const P2& p, const std::string& style) {
    const auto s = xy(p);
    const auto comma = s.find(',');
    out_ << "  <circle cx=\"" << s.substr(0, comma) << "\" cy=\"" << s.substr(comma + 1) << "\" r=\"4\" " << style
         << "/>\n";
  }

  std::string finish() const {
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"" << num(height_)
        << "\" viewBox=\"0 0 800 " << num(height_) << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << out_.str() << "</svg>\n";
    return svg.str();
  }

 private:
  Box box_;
  double scale_ = 1;
  double height_ = 800;
  std::ostringstream out_;
};

constexpr const char* kLineStyle = "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
constexpr const char* kRectStyle = "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"";
constexpr const char* kLocusStyle = "class=\"locus\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" stroke-dasharray=\"2,4\"";
constexpr const char* kDiagonalStyle = "class=\"diagonal\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1\" stroke-dasharray=\"8,4\"";

// Curve of centers of a path, evaluated at rational points spread over the
// projective line and split wherever the path crosses infinity.
std::vector<std::vector<P2>> trace_centers(const CenterImage& img, const PlaneMap& map) {
  std::vector<std::vector<P2>> pieces(1);
  const Field f = Field::rational();
  int last_sign = 0;
  constexpr int kSteps = 720;
  for (int k = 0; k <= kSteps; ++k) {
    const double theta = std::numbers::pi * k / kSteps;
    const Ratio r(f.of(std::lround(10000 * std::sin(theta))), f.of(std::lround(10000 * std::cos(theta))));
    const Scalar w = img.center_map[2].eval(r);
    const int sign = w.is_zero() ? 0 : (w.as_rational() > 0 ? 1 : -1);
    if (sign == 0 || (last_sign != 0 && sign != last_sign)) pieces.emplace_back();
    last_sign = sign;
    if (sign == 0) continue;
    const Point c{img.center_map[0].eval(r) / w, img.center_map[1].eval(r) / w};
    pieces.back().push_back(to_p2(map.invert(c)));
  }
  return pieces;
}

}  // namespace

std::string render_svg(const ConfigurationInput& input, const RenderOptions& options) {
  if (!input.field.is_rational()) throw PreconditionError("rendering needs a rational configuration");
  const auto lines = input.lines();

  Box box;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (auto p = intersect(lines[i], lines[j])) box.add(to_p2(*p));
    }
  }

  std::vector<std::vector<P2>> rectangles;
  std::vector<std::pair<Line, bool>> locus_lines;
  std::vector<std::vector<P2>> locus_curves;
  std::vector<P2> locus_points;

  const bool parallel_case = all_parallel(input);
  if (parallel_case) {
    const AllParallelReport rep = all_parallel_analysis(input);
    if (rep.midline_shared) locus_lines.emplace_back(rep.ac_midline, true);
    for (const auto& l : lines) {
      // Give the drawing some extent along the common direction.
      const Point p = l.b.is_zero() ? Point{l.c / l.a, l.b} : Point{l.a, (l.c - l.a * l.a) / l.b};
      box.add(to_p2(p));
    }
  } else {
    const Normalization n = normalize(input);
    const LocusReport rep = centers_paths(n.config);
    std::vector<const PathPolynomials*> paths;
    const PathPolynomials slope = slope_path_polys(n.config);
    const PathPolynomials aspect = aspect_path_polys(n.config);
    paths.push_back(&slope);
    if (rep.classification.degenerate) paths.push_back(&aspect);
    for (const auto* path : paths) {
      for (const Ratio& r : sample_ratios(input.field, options.samples)) {
        const ProjectiveRectangle p = path->eval(r);
        if (p.at_infinity()) continue;
        std::vector<P2> poly;
        for (const Point& v : p.affine_vertices()) poly.push_back(to_p2(n.map.invert(v)));
        for (const auto& q : poly) box.add(q);
        rectangles.push_back(std::move(poly));
      }
    }
    for (const CenterImage* img : {&rep.slope_centers, &rep.aspect_centers}) {
      switch (img->kind) {
        case CenterImage::Kind::Line: locus_lines.emplace_back(n.map.invert(*img->line), true); break;
        case CenterImage::Kind::Point: locus_points.push_back(to_p2(n.map.invert(*img->point))); break;
        case CenterImage::Kind::Conic:
          if (img == &rep.slope_centers || !rep.slope_centers.conic) {
            for (auto& piece : trace_centers(*img, n.map)) locus_curves.push_back(std::move(piece));
          }
          break;
        case CenterImage::Kind::AtInfinity: break;
      }
    }
  }

  if (box.empty()) box.add({0, 0});
  if (box.maxx - box.minx < 1e-9) {
    box.minx -= 1;
    box.maxx += 1;
  }
  if (box.maxy - box.miny < 1e-9) {
    box.miny -= 1;
    box.maxy += 1;
  }
  const double mx = 0.1 * (box.maxx - box.minx);
  const double my = 0.1 * (box.maxy - box.miny);
  box.minx -= mx;
  box.maxx += mx;
  box.miny -= my;
  box.maxy += my;

  Canvas canvas(box);
  for (const auto& l : lines) {
    if (auto s = clip(l, box)) canvas.segment(*s, kLineStyle);
  }
  for (const auto& r : rectangles) canvas.polygon(r, kRectStyle);
  for (const auto& [l, dotted] : locus_lines) {
    if (auto s = clip(l, box)) canvas.segment(*s, kLocusStyle);
  }
  for (const auto& curve : locus_curves) {
    std::vector<P2> visible;
    for (const auto& p : curve) {
      if (box.inside(p)) {
        visible.push_back(p);
      } else {
        canvas.polyline(visible, kLocusStyle);
        visible.clear();
      }
    }
    canvas.polyline(visible, kLocusStyle);
  }
  for (const auto& p : locus_points) canvas.dot(p, "class=\"locus\" fill=\"#d62728\"");

  if (options.diagonals && !parallel_case) {
    const std::array<std::array<Role, 4>, 3> diagonals{{{Role::A, Role::B, Role::C, Role::D},
                                                        {Role::A, Role::D, Role::B, Role::C},
                                                        {Role::A, Role::C, Role::B, Role::D}}};
    for (const auto& d : diagonals) {
      const auto p = intersect(input.line(d[0]), input.line(d[1]));
      const auto q = intersect(input.line(d[2]), input.line(d[3]));
      if (!p || !q || *p == *q) continue;
      if (auto s = clip(Line::through(*p, *q), box)) canvas.segment(*s, kDiagonalStyle);
    }
  }
  return canvas.finish();
}

}  // namespace quadriline
