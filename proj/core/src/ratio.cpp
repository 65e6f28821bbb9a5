#include "quadriline/ratio.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quadriline/error.hpp"

namespace quadriline {

Ratio::Ratio(const Scalar& s, const Scalar& t) {
  if (s.is_zero() && t.is_zero()) throw PreconditionError("ratio 0/0 is not a point of the projective line");
  if (t.is_zero()) {
    s_ = s.field().one();
    t_ = t;
  } else {
    s_ = s / t;
    t_ = t.field().one();
  }
}

Scalar Ratio::value() const {
  if (is_infinite()) throw PreconditionError("ratio 1/0 has no finite value");
  return s_;
}

std::string Ratio::to_string() const {
  if (is_infinite()) return "1/0";
  if (s_.field().is_prime()) return s_.to_string() + "/1";
  const mpq_class& q = s_.as_rational();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Ratio parse_ratio(std::string_view text, const Field& field) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Ratio::of(parse_scalar(text, field));
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (den.find('/') != std::string_view::npos) {
    throw ParseError("", "malformed ratio \"" + std::string(text) + "\"");
  }
  const Scalar s = parse_scalar(num, field);
  const Scalar t = parse_scalar(den, field);
  if (s.is_zero() && t.is_zero()) throw ParseError("", "ratio \"" + std::string(text) + "\" is 0/0");
  return Ratio(s, t);
}

// ---------------------------------------------------------------- Homography

Ratio Homography::apply(const Ratio& r) const {
  const Scalar& s = r.numer();
  const Scalar& t = r.denom();
  return Ratio(m[0] * s + m[1] * t, m[2] * s + m[3] * t);
}

Homography Homography::operator*(const Homography& rhs) const {
  const auto& a = m;
  const auto& b = rhs.m;
  return Homography{{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                     a[2] * b[1] + a[3] * b[3]}};
}

Homography Homography::inverse() const {
  if (determinant().is_zero()) throw PreconditionError("homography matrix is singular");
  return Homography{{m[3], -m[1], -m[2], m[0]}};
}

bool Homography::is_scalar_identity() const {
  return m[1].is_zero() && m[2].is_zero() && !m[0].is_zero() && m[0] == m[3];
}

// ---------------------------------------------------------------- sampling

std::vector<Ratio> sample_ratios(const Field& field, std::size_t count) {
  std::vector<Ratio> out;
  std::set<Ratio> seen;
  auto push = [&](const Ratio& r) {
    if (out.size() < count && seen.insert(r).second) out.push_back(r);
  };
  const std::size_t limit = field.is_prime() ? static_cast<std::size_t>(field.modulus()) + 1 : count;
  push(Ratio(field.zero(), field.one()));
  push(Ratio::infinity(field));
  for (long k = 2; out.size() < std::min(count, limit); ++k) {
    for (long n = k - 1; n >= 1; --n) {
      const long d = k - n;
      if (std::gcd(n, d) != 1) continue;
      if (field.is_prime() && static_cast<std::uint64_t>(d) % field.modulus() == 0) continue;
      push(Ratio(field.of(n), field.of(d)));
      push(Ratio(field.of(-n), field.of(d)));
    }
  }
  return out;
}

std::vector<Ratio> all_ratios(const Field& field) {
  if (!field.is_prime()) throw PreconditionError("the projective line is only enumerable over F_p");
  std::vector<Ratio> out;
  out.reserve(field.modulus() + 1);
  for (std::uint64_t v = 0; v < field.modulus(); ++v) out.push_back(Ratio::of(field.of(static_cast<long>(v))));
  out.push_back(Ratio::infinity(field));
  return out;
}

}  // namespace quadriline
