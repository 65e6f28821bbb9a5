#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadriline/forms.hpp"
#include "quadriline/geometry.hpp"
#include "quadriline/ratio.hpp"
#include "quadriline/scalar.hpp"

namespace quadriline {

/// Positions around the inscribed quadrilateral: a rectangle has vertex A on
/// line A, B on B, and so on, in cyclic order.
enum class Role { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::array<Role, 4> kRoles{Role::A, Role::B, Role::C, Role::D};

char role_name(Role r);

/// Four lines as two ordered pairs: pair1 plays (A, C), pair2 plays (B, D).
struct ConfigurationInput {
  Field field;
  std::array<Line, 2> pair1;
  std::array<Line, 2> pair2;

  const Line& line(Role r) const;
  /// Lines in role order A, B, C, D.
  std::array<Line, 4> lines() const { return {pair1[0], pair2[0], pair1[1], pair2[1]}; }
};

bool all_parallel(const ConfigurationInput& input);
bool all_concurrent(const ConfigurationInput& input);

/// Four lines in standing form: A: y = m_A x + b_A, B: y = m_B x + 1,
/// C: y = m_C x, D: y = m_D x, with m_C ≠ m_D.
class NormalizedConfig {
 public:
  /// Throws PreconditionError when m_C = m_D or the scalars mix fields.
  static NormalizedConfig make(const Scalar& mA, const Scalar& mB, const Scalar& mC, const Scalar& mD,
                               const Scalar& bA);
  /// Convenience for rational integer constants.
  static NormalizedConfig rational(long mA, long mB, long mC, long mD, long bA);

  const Field& field() const noexcept { return field_; }
  const Scalar& m(Role r) const { return m_[static_cast<std::size_t>(r)]; }
  const Scalar& b(Role r) const { return b_[static_cast<std::size_t>(r)]; }
  /// m_X − m_Y.
  Scalar m(Role x, Role y) const { return m(x) - m(y); }
  const Scalar& mA() const { return m(Role::A); }
  const Scalar& mB() const { return m(Role::B); }
  const Scalar& mC() const { return m(Role::C); }
  const Scalar& mD() const { return m(Role::D); }
  const Scalar& bA() const { return b(Role::A); }

  const Scalar& e1() const noexcept { return e1_; }
  const Scalar& e2() const noexcept { return e2_; }
  const Scalar& f1() const noexcept { return f1_; }
  const Scalar& f2() const noexcept { return f2_; }
  /// e1·f1 + e2·f2; zero exactly for degenerate configurations.
  Scalar degeneracy() const { return e1_ * f1_ + e2_ * f2_; }

  Line line(Role r) const { return Line::from_slope_intercept(m(r), b(r)); }

  friend bool operator==(const NormalizedConfig&, const NormalizedConfig&) = default;

 private:
  Field field_;
  std::array<Scalar, 4> m_;
  std::array<Scalar, 4> b_;
  Scalar e1_, e2_, f1_, f2_;
};

/// The similarity taking the input plane to the normalized plane:
/// p ↦ k·(R·p − q), where R is the reflection about y = t·x (or the
/// identity) and q is C ∩ D after reflecting. `source[i]` is the input role
/// of normalized role i.
struct PlaneMap {
  int labeling = 0;
  std::array<Role, 4> source{Role::A, Role::B, Role::C, Role::D};
  std::optional<Scalar> reflection;
  Point shift;
  Scalar scale;

  /// Input point → normalized point.
  Point apply(const Point& p) const;
  /// Normalized point → input point.
  Point invert(const Point& p) const;
  /// Homogeneous (x, y, w) in the normalized frame → input frame.
  std::array<Scalar, 2> invert_homogeneous(const Scalar& x, const Scalar& y, const Scalar& w) const;
  Line apply(const Line& l) const;
  /// Normalized line → input line.
  Line invert(const Line& l) const;
  /// Normalized conic in (x, y, 1) → input conic.
  TernaryQuadratic invert(const TernaryQuadratic& q) const;

  /// Converts a slope (resp. aspect ratio) measured on an input-frame
  /// rectangle to the value the same rectangle has in the normalized frame.
  Ratio slope_to_normalized(const Ratio& r) const;
  Ratio aspect_to_normalized(const Ratio& r) const;

  bool is_identity() const;
};

struct Normalization {
  NormalizedConfig config;
  PlaneMap map;
};

/// Brings four lines into standing form. Throws AllParallelLines,
/// PreconditionError (all concurrent, no labeling or reflection works).
Normalization normalize(const ConfigurationInput& input);

enum class DiagonalMarker { ACoincidesWithB, ACoincidesWithD, AtInfinity };

using Diagonal = std::variant<Ratio, DiagonalMarker>;

std::string to_string(const Diagonal& d);

struct DiagonalSlopes {
  Diagonal E;
  Diagonal F;
};

DiagonalSlopes diagonal_slopes(const NormalizedConfig& cfg);

enum class LocusShape { NonDegenerateConic, TwoLines, LinePlusInfinity };

std::string to_string(LocusShape s);

struct ConfigClass {
  bool degenerate = false;
  bool twin_pairs = false;
  bool dual_pairs = false;
  bool slope_path_at_infinity = false;
  bool aspect_path_at_infinity = false;
  LocusShape locus_shape = LocusShape::NonDegenerateConic;
};

ConfigClass classify(const NormalizedConfig& cfg);

struct DegeneratingIntercepts {
  bool all = false;
  std::vector<Scalar> values;
};

/// Intercepts b_A that make (m_A, m_B, m_C, m_D, b_A) degenerate.
DegeneratingIntercepts degenerating_intercepts(const Scalar& mA, const Scalar& mB, const Scalar& mC,
                                               const Scalar& mD);

}  // namespace quadriline
