#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadriline/ratio.hpp"
#include "quadriline/scalar.hpp"

namespace quadriline {

/// A homogeneous polynomial in (S, T) of nominal degree d, stored densely:
/// coeffs[i] multiplies S^(d−i)·T^i. Zero coefficients are allowed, so the
/// nominal degree may exceed the true one.
class BinaryForm {
 public:
  /// The rational zero constant.
  BinaryForm() : BinaryForm(Field::rational(), 0) {}
  BinaryForm(const Field& field, int degree);
  explicit BinaryForm(std::vector<Scalar> coeffs);

  static BinaryForm constant(const Scalar& c) { return BinaryForm({c}); }
  /// a·S + b·T.
  static BinaryForm linear(const Scalar& a, const Scalar& b) { return BinaryForm({a, b}); }
  static BinaryForm quadratic(const Scalar& a, const Scalar& b, const Scalar& c) {
    return BinaryForm({a, b, c});
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  const Scalar& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;

  Scalar eval(const Scalar& s, const Scalar& t) const;
  Scalar eval(const Ratio& r) const { return eval(r.numer(), r.denom()); }

  BinaryForm operator-() const;
  /// Forms of different nominal degree can only be added when one is zero.
  friend BinaryForm operator+(const BinaryForm& lhs, const BinaryForm& rhs);
  friend BinaryForm operator-(const BinaryForm& lhs, const BinaryForm& rhs) { return lhs + (-rhs); }
  friend BinaryForm operator*(const BinaryForm& lhs, const BinaryForm& rhs);
  friend BinaryForm operator*(const Scalar& k, const BinaryForm& f);

  /// Equal as polynomials: both zero, or same degree and coefficients.
  friend bool operator==(const BinaryForm& lhs, const BinaryForm& rhs);

  std::string to_string(const std::string& s = "S", const std::string& t = "T") const;

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// The quotient q with num = q·den, or nullopt when den does not divide num.
/// The zero form is divisible by anything (quotient zero); nothing nonzero is
/// divisible by zero.
std::optional<BinaryForm> divide_exact(const BinaryForm& num, const BinaryForm& den);

struct ProjectiveRoots {
  bool all = false;  // the form vanishes identically
  std::vector<Ratio> roots;
};

/// Distinct zeros on the projective line over the field. Only degrees ≤ 2
/// are supported over the rationals; any degree over F_p.
ProjectiveRoots projective_roots(const BinaryForm& f);

/// Whether the forms share a zero on the projective line over the algebraic
/// closure (an all-zero list counts as sharing every zero).
bool have_common_projective_zero(const std::vector<BinaryForm>& forms);

/// A quadratic form in three variables, monomials in the order
/// x0², x1², x2², x0·x1, x0·x2, x1·x2.
struct TernaryQuadratic {
  std::array<Scalar, 6> c;

  Scalar eval(const Scalar& x0, const Scalar& x1, const Scalar& x2) const;
  bool is_zero() const;
  /// Composition with three binary forms of a common degree.
  BinaryForm compose(const BinaryForm& f0, const BinaryForm& f1, const BinaryForm& f2) const;
  /// Scaled so the first nonzero coefficient is 1.
  TernaryQuadratic normalized() const;
  /// The form in new variables y, where x_i = Σ_j rows[i][j]·y_j.
  TernaryQuadratic substitute(const std::array<std::array<Scalar, 3>, 3>& rows) const;

  friend bool operator==(const TernaryQuadratic&, const TernaryQuadratic&) = default;
};

}  // namespace quadriline
