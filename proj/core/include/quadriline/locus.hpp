#pragma once

#include <array>
#include <optional>
#include <string>

#include "quadriline/configuration.hpp"
#include "quadriline/forms.hpp"
#include "quadriline/paths.hpp"
#include "quadriline/rectangle.hpp"

namespace quadriline {

enum class LineTag { GaussNewton, SlopeCenters, AspectCenters, DiagonalG };

std::string to_string(LineTag t);

struct AffineLineDescription {
  Line line;
  LineTag tag;
};

/// Midpoint of the A, C vertices (checked against the B, D midpoint).
/// Throws AtInfinityRectangle when w = 0.
Point center_of(const ProjectiveRectangle& p);

/// Throws ParallelPairObstruction naming the pair without an affine meet.
AffineLineDescription gauss_newton_line(const NormalizedConfig& cfg);
AffineLineDescription diagonal_g(const NormalizedConfig& cfg);

/// The set of affine centers reached along one path.
struct CenterImage {
  enum class Kind { AtInfinity, Point, Line, Conic };

  Kind kind = Kind::AtInfinity;
  /// Homogeneous center (x_A + x_C, y_A + y_C, 2w) as forms in the path variables.
  std::array<BinaryForm, 3> center_map;
  std::optional<Point> point;
  std::optional<Line> line;
  /// In the variables (x, y, 1).
  std::optional<TernaryQuadratic> conic;

  bool contains(const Point& p) const;
};

std::string to_string(CenterImage::Kind k);

/// Exact implicit description of the centers of a path.
CenterImage center_image(const PathPolynomials& path);

struct LocusReport {
  ConfigClass classification;
  CenterImage slope_centers;
  CenterImage aspect_centers;
  std::optional<AffineLineDescription> gauss_newton;
  std::optional<AffineLineDescription> diagonal_g;
  /// Sampled affine centers checked against the images.
  std::size_t verified_samples = 0;
};

/// Throws InvariantViolation if a sampled center misses its image.
LocusReport centers_paths(const NormalizedConfig& cfg, std::size_t samples = 26);

struct SpecialRectangles {
  ProjectiveRectangle center;
  Point center_point;
  ProjectiveRectangle centroid;
  Point centroid_point;
  /// The at-infinity rectangles of the two path lines, when they exist.
  std::optional<ProjectiveRectangle> slope_path_infinity;
  std::optional<ProjectiveRectangle> aspect_path_infinity;
};

/// Requires a degenerate configuration without parallel lines and with at
/// least one non-orthogonal pair.
SpecialRectangles special_rectangles(const NormalizedConfig& cfg);

struct AllParallelReport {
  bool midline_shared = false;
  Line ac_midline;
  Line bd_midline;
  std::string description;
};

/// Throws PreconditionError unless all four lines are parallel.
AllParallelReport all_parallel_analysis(const ConfigurationInput& input);

}  // namespace quadriline
