#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace quadriline {

class Scalar;

/// The ambient field: the rationals, or a prime field F_p with p odd.
class Field {
 public:
  static Field rational() { return Field{}; }
  /// Throws PreconditionError unless `p` is an odd prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return modulus_ == 0; }
  bool is_prime() const noexcept { return modulus_ != 0; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar of(long value) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  static Field unchecked(std::uint64_t p) {
    Field f;
    f.modulus_ = p;
    return f;
  }

  std::uint64_t modulus_ = 0;
};

/// Canonical residue in [0, p).
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;
};

/// An exact field element. Values are immutable; arithmetic never rounds.
///
/// Rationals are kept in lowest terms with a positive denominator; residues
/// are kept in [0, p). Mixing elements of different fields throws
/// FieldMismatch. A default-constructed Scalar is the rational zero.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& field, long value);

  static Scalar rational(mpq_class value);
  static Scalar rational(long numerator, long denominator = 1);
  static Scalar residue(long value, std::uint64_t modulus);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Only valid for rationals.
  const mpq_class& as_rational() const;
  /// Only valid for residues.
  std::uint64_t as_residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws PreconditionError on division by zero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  Scalar inverse() const;
  Scalar square() const { return *this * *this; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  /// Total order within a field: numeric for rationals, by residue for F_p.
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  /// "p/q" (or "p" when q = 1) for rationals, the residue for F_p.
  std::string to_string() const;
  double to_double() const;

 private:
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void require_same_field(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_{mpq_class{}};
};

/// Parses an integer literal or "p/q" (sign allowed on p only) into `field`.
/// Throws ParseError on a malformed literal and PreconditionError when q is
/// zero in the field.
Scalar parse_scalar(std::string_view text, const Field& field);

/// Exact square root if one exists in the field.
std::optional<Scalar> sqrt_exact(const Scalar& x);

struct QuadraticRoots {
  std::vector<Scalar> roots;
  bool double_root = false;
};

/// All roots of a·X² + b·X + c in the field, each once. Falls back to the
/// linear root when a = 0. Throws PreconditionError when a = b = c = 0.
QuadraticRoots solve_quadratic(const Scalar& a, const Scalar& b, const Scalar& c);

}  // namespace quadriline
