#pragma once

#include <array>
#include <optional>
#include <string>

#include "quadriline/configuration.hpp"
#include "quadriline/forms.hpp"
#include "quadriline/rectangle.hpp"

namespace quadriline {

enum class PathKind { Slope, Aspect };
/// Which branch defined the lead/partner forms: both lead constants zero,
/// e1·f1 + e2·f2 ≠ 0, or the remaining degenerate case.
enum class PathCase { BothZero, Generic, Orthogonal };

std::string to_string(PathKind k);
std::string to_string(PathCase c);

/// The nine coordinate forms of the slope path π (variables S, T) or of
/// the aspect path φ (variables U, V).
struct PathPolynomials {
  PathKind kind = PathKind::Slope;
  PathCase path_case = PathCase::Generic;
  BinaryForm lead;     // ℰ or ℳ
  BinaryForm partner;  // ℱ or 𝒩
  std::array<BinaryForm, 4> x;
  std::array<BinaryForm, 4> y;
  BinaryForm w;

  /// In the order x_A, y_A, …, x_D, y_D, w.
  std::array<BinaryForm, 9> coordinates() const;
  ProjectiveRectangle eval(const Ratio& r) const;
  bool has_common_zero() const;
};

PathPolynomials slope_path_polys(const NormalizedConfig& cfg);
PathPolynomials aspect_path_polys(const NormalizedConfig& cfg);

/// π(r): a rectangle with slope r.
ProjectiveRectangle slope_path_eval(const NormalizedConfig& cfg, const Ratio& r);
/// φ(r): a rectangle with aspect ratio r.
ProjectiveRectangle aspect_path_eval(const NormalizedConfig& cfg, const Ratio& r);

/// Affine vertices when the path rectangle has w ≠ 0; the projective point
/// is always present.
struct PathRectangle {
  ProjectiveRectangle projective;
  std::optional<std::array<Point, 4>> vertices;
};

PathRectangle affine_vertices_for_slope(const NormalizedConfig& cfg, const Ratio& r);
PathRectangle affine_vertices_for_aspect(const NormalizedConfig& cfg, const Ratio& r);

/// Ψ takes a slope to the aspect ratio of π at that slope; Φ goes back.
struct PathHomography {
  Homography psi;
  Homography phi;
};

/// Throws DegenerateConfiguration.
PathHomography homography(const NormalizedConfig& cfg);

}  // namespace quadriline
