#include "quadriline/scalar.hpp"

#include <cctype>

#include "quadriline/error.hpp"

namespace quadriline {
namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce(long value, std::uint64_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return result;
}

// Tonelli-Shanks; `a` must be a nonzero quadratic residue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;

  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

std::optional<mpz_class> isqrt_exact(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxModulus || !is_odd_prime(p)) {
    throw PreconditionError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
  Field f;
  f.modulus_ = p;
  return f;
}

Scalar Field::zero() const { return of(0); }
Scalar Field::one() const { return of(1); }
Scalar Field::of(long value) const { return Scalar(*this, value); }

std::string Field::name() const {
  return is_rational() ? std::string("rational") : "F_" + std::to_string(modulus_);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Field& field, long value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{reduce(value, field.modulus()), field.modulus()};
  }
}

Scalar Scalar::rational(mpq_class value) {
  value.canonicalize();
  return Scalar(std::move(value));
}

Scalar Scalar::rational(long numerator, long denominator) {
  if (denominator == 0) throw PreconditionError("division by zero");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::residue(long value, std::uint64_t modulus) {
  return Scalar(Field::prime(modulus), value);
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field::unchecked(r->modulus);
  return Field::rational();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw PreconditionError("scalar is not rational");
}

std::uint64_t Scalar::as_residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw PreconditionError("scalar is not a prime-field residue");
}

void Scalar::require_same_field(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr)) throw FieldMismatch();
  if (a != nullptr && a->modulus != b->modulus) throw FieldMismatch();
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(rhs.value_).value) % r->modulus;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mulmod(r->value, std::get<Residue>(rhs.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{powmod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  q.canonicalize();
  return Scalar(std::move(q));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_field(rhs);
  if (const auto* r = std::get_if<Residue>(&lhs.value_)) {
    return r->value == std::get<Residue>(rhs.value_).value;
  }
  return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_field(rhs);
  if (const auto* r = std::get_if<Residue>(&lhs.value_)) {
    return r->value <=> std::get<Residue>(rhs.value_).value;
  }
  const int c = cmp(std::get<mpq_class>(lhs.value_), std::get<mpq_class>(rhs.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return static_cast<double>(r->value);
  return std::get<mpq_class>(value_).get_d();
}

// ---------------------------------------------------------------- parsing

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text, const Field& field) {
  const std::string original(text);
  auto fail = [&]() -> ParseError {
    return ParseError("", "malformed number literal \"" + original + "\"");
  };

  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  std::string_view numer = text;
  std::string_view denom = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    numer = text.substr(0, slash);
    denom = text.substr(slash + 1);
  }
  bool negative = false;
  if (!numer.empty() && (numer.front() == '-' || numer.front() == '+')) {
    negative = numer.front() == '-';
    numer.remove_prefix(1);
  }
  if (!is_digits(numer) || !is_digits(denom)) throw fail();

  mpz_class p(std::string(numer), 10);
  mpz_class q(std::string(denom), 10);
  if (negative) p = -p;

  if (field.is_rational()) {
    if (q == 0) throw ParseError("", "zero denominator in \"" + original + "\"");
    return Scalar::rational(mpq_class(p, q));
  }
  const mpz_class modulus(static_cast<unsigned long>(field.modulus()));
  mpz_class pr = p % modulus;
  if (pr < 0) pr += modulus;
  mpz_class qr = q % modulus;
  if (qr == 0) throw ParseError("", "denominator of \"" + original + "\" vanishes in " + field.name());
  return field.of(pr.get_si()) / field.of(qr.get_si());
}

// ---------------------------------------------------------------- roots

std::optional<Scalar> sqrt_exact(const Scalar& x) {
  if (x.is_zero()) return x;
  const Field field = x.field();
  if (field.is_rational()) {
    const mpq_class& q = x.as_rational();
    auto num = isqrt_exact(q.get_num());
    auto den = isqrt_exact(q.get_den());
    if (!num || !den) return std::nullopt;
    return Scalar::rational(mpq_class(*num, *den));
  }
  const std::uint64_t p = field.modulus();
  const std::uint64_t a = x.as_residue();
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  return field.of(static_cast<long>(sqrt_mod(a, p)));
}

QuadraticRoots solve_quadratic(const Scalar& a, const Scalar& b, const Scalar& c) {
  const Field field = a.field();
  if (a.is_zero() && b.is_zero() && c.is_zero()) {
    throw PreconditionError("quadratic with all coefficients zero");
  }
  QuadraticRoots result;
  if (a.is_zero()) {
    if (!b.is_zero()) result.roots.push_back(-c / b);
    return result;
  }
  const Scalar disc = b * b - field.of(4) * a * c;
  const Scalar two_a = field.of(2) * a;
  if (disc.is_zero()) {
    result.roots.push_back(-b / two_a);
    result.double_root = true;
    return result;
  }
  const auto root = sqrt_exact(disc);
  if (!root) return result;
  result.roots.push_back((-b + *root) / two_a);
  result.roots.push_back((-b - *root) / two_a);
  return result;
}

}  // namespace quadriline
