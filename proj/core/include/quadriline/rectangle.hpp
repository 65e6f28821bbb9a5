#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadriline/configuration.hpp"
#include "quadriline/forms.hpp"
#include "quadriline/geometry.hpp"

namespace quadriline {

/// A point [x_A:y_A:x_B:y_B:x_C:y_C:x_D:y_D:w] of projective 8-space.
///
/// Canonical scale: over the rationals the last nonzero coordinate is 1,
/// over F_p the first nonzero coordinate is 1.
class ProjectiveRectangle {
 public:
  /// Throws PreconditionError when every coordinate is zero.
  explicit ProjectiveRectangle(std::array<Scalar, 9> coords);

  const std::array<Scalar, 9>& coords() const noexcept { return coords_; }
  const Scalar& x(Role r) const { return coords_[2 * static_cast<std::size_t>(r)]; }
  const Scalar& y(Role r) const { return coords_[2 * static_cast<std::size_t>(r) + 1]; }
  const Scalar& w() const { return coords_[8]; }
  bool at_infinity() const { return w().is_zero(); }
  Field field() const { return coords_[0].field(); }

  /// Vertices scaled by 1/w. Throws AtInfinityRectangle when w = 0.
  std::array<Point, 4> affine_vertices() const;
  /// The (x, y) pairs as stored, without dividing by w.
  std::array<Point, 4> homogeneous_vertices() const;

  std::string to_string() const;

  friend bool operator==(const ProjectiveRectangle&, const ProjectiveRectangle&) = default;
  friend auto operator<=>(const ProjectiveRectangle& lhs, const ProjectiveRectangle& rhs) {
    return lhs.coords_ <=> rhs.coords_;
  }

 private:
  std::array<Scalar, 9> coords_;
};

/// y_L = m_L x_L + b_L w for every line.
bool in_configuration(const NormalizedConfig& cfg, const ProjectiveRectangle& p);
bool is_parallelogram(const ProjectiveRectangle& p);
/// (x_C−x_B)(x_B−x_A) + (y_C−y_B)(y_B−y_A) = 0.
bool is_rectangle(const ProjectiveRectangle& p);

/// The parallelogram in the scaled configuration determined by x_A, x_B, w.
ProjectiveRectangle complete_parallelogram(const NormalizedConfig& cfg, const Scalar& xA, const Scalar& xB,
                                           const Scalar& w);

/// h(X_A, X_B, X): vanishes exactly at parameters of rectangles.
TernaryQuadratic quadric_h(const NormalizedConfig& cfg);

BinaryForm sigma(const NormalizedConfig& cfg);
BinaryForm alpha(const NormalizedConfig& cfg);

/// Slope s/t of a rectangle given by its four (possibly homogeneous)
/// vertices; nullopt when every side degenerates. Throws PreconditionError
/// when the two defining equations are independent (not a rectangle).
std::optional<Ratio> slope_of(const std::array<Point, 4>& v);
std::optional<Ratio> aspect_of(const std::array<Point, 4>& v);
inline std::optional<Ratio> slope_of(const ProjectiveRectangle& p) { return slope_of(p.homogeneous_vertices()); }
inline std::optional<Ratio> aspect_of(const ProjectiveRectangle& p) { return aspect_of(p.homogeneous_vertices()); }

/// Slopes (resp. aspect ratios) of rectangles at infinity; `all` when every
/// ratio occurs.
ProjectiveRoots slopes_at_infinity(const NormalizedConfig& cfg);
ProjectiveRoots aspects_at_infinity(const NormalizedConfig& cfg);

/// Solutions of the linear system for a fixed slope or aspect ratio at scale w.
/// When the solutions form a one-parameter family, `is_pencil` is set and
/// `rectangles` holds two members spanning it.
struct RectangleSet {
  std::vector<ProjectiveRectangle> rectangles;
  bool is_pencil = false;
};

RectangleSet rectangle_from_slope(const NormalizedConfig& cfg, const Ratio& r, const Scalar& w);
RectangleSet rectangle_from_aspect(const NormalizedConfig& cfg, const Ratio& r, const Scalar& w);

}  // namespace quadriline
