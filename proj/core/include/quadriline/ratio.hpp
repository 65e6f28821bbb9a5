#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quadriline/scalar.hpp"

namespace quadriline {

/// A point s/t of the projective line over a field.
///
/// Stored canonically: (s/t, 1) when t ≠ 0, otherwise (1, 0). Equality is
/// therefore plain component equality, which matches cross-multiplication.
class Ratio {
 public:
  /// Throws PreconditionError when s = t = 0.
  Ratio(const Scalar& s, const Scalar& t);

  static Ratio infinity(const Field& field) { return Ratio(field.one(), field.zero()); }
  static Ratio of(const Scalar& value) { return Ratio(value, value.field().one()); }

  const Scalar& numer() const noexcept { return s_; }
  const Scalar& denom() const noexcept { return t_; }
  Field field() const { return s_.field(); }
  bool is_infinite() const { return t_.is_zero(); }
  /// s/t; throws PreconditionError for 1/0.
  Scalar value() const;

  /// The orthogonal direction −t/s (for slopes).
  Ratio perpendicular() const { return Ratio(-t_, s_); }

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend auto operator<=>(const Ratio& lhs, const Ratio& rhs) {
    if (auto c = lhs.t_ <=> rhs.t_; c != 0) return c;
    return lhs.s_ <=> rhs.s_;
  }

  /// "n/d" with the denominator always present; "1/0" for infinity.
  std::string to_string() const;

 private:
  Scalar s_;
  Scalar t_;
};

/// Parses "s/t" (either part may be negative; "1/0" is infinity) or a bare
/// number. Throws ParseError or PreconditionError.
Ratio parse_ratio(std::string_view text, const Field& field);

/// A 2×2 matrix acting on the projective line by (s, t) ↦ (a s + b t, c s + d t).
struct Homography {
  std::array<Scalar, 4> m;  // row-major a, b, c, d

  Scalar determinant() const { return m[0] * m[3] - m[1] * m[2]; }
  /// Throws PreconditionError if the image is (0, 0).
  Ratio apply(const Ratio& r) const;
  Homography operator*(const Homography& rhs) const;
  /// Adjugate; the inverse up to scale. Throws if singular.
  Homography inverse() const;
  /// True when the matrix is a nonzero multiple of the identity.
  bool is_scalar_identity() const;
};

/// The fixed sample sequence of ratios: 0/1, 1/0, then for k = 2, 3, …
/// every reduced n/d with n + d = k (n descending), each followed by −n/d.
/// Over F_p values are reduced and duplicates skipped; at most p + 1 ratios
/// exist there.
std::vector<Ratio> sample_ratios(const Field& field, std::size_t count);

/// Every point of the projective line over F_p: 0/1, …, (p−1)/1, 1/0.
std::vector<Ratio> all_ratios(const Field& field);

}  // namespace quadriline
