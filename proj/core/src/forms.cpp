#include "quadriline/forms.hpp"

#include <algorithm>

#include "quadriline/error.hpp"

namespace quadriline {
namespace {

// Univariate polynomials in ascending order of powers, trailing zeros trimmed.
using Poly = std::vector<Scalar>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly dehomogenize(const BinaryForm& f) {
  const int d = f.degree();
  Poly p(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) p[static_cast<std::size_t>(k)] = f.coeff(d - k);
  trim(p);
  return p;
}

// Returns (quotient, remainder); `den` must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  const Field field = den.back().field();
  if (num.size() < den.size()) return {Poly{}, num};
  Poly quot(num.size() - den.size() + 1, field.zero());
  const Scalar lead_inv = den.back().inverse();
  for (std::size_t i = num.size(); i-- >= den.size();) {
    const Scalar q = num[i] * lead_inv;
    const std::size_t shift = i + 1 - den.size();
    quot[shift] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= q * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(quot);
  return {quot, num};
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(const Field& field, int degree)
    : field_(field), coeffs_(static_cast<std::size_t>(degree + 1), field.zero()) {
  if (degree < 0) throw PreconditionError("negative form degree");
}

BinaryForm::BinaryForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("a form needs at least one coefficient");
  field_ = coeffs_.front().field();
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw FieldMismatch();
  }
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

Scalar BinaryForm::eval(const Scalar& s, const Scalar& t) const {
  // Horner in s with t-powers folded in from the left.
  Scalar acc = field_.zero();
  Scalar t_pow = field_.one();
  const int d = degree();
  std::vector<Scalar> t_powers(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    t_powers[static_cast<std::size_t>(i)] = t_pow;
    t_pow *= t;
  }
  for (int i = 0; i <= d; ++i) acc = acc * s + coeffs_[static_cast<std::size_t>(i)] * t_powers[static_cast<std::size_t>(i)];
  return acc;
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BinaryForm operator+(const BinaryForm& lhs, const BinaryForm& rhs) {
  if (lhs.degree() != rhs.degree()) {
    if (lhs.is_zero()) return rhs;
    if (rhs.is_zero()) return lhs;
    throw PreconditionError("cannot add forms of degrees " + std::to_string(lhs.degree()) + " and " +
                            std::to_string(rhs.degree()));
  }
  BinaryForm out = lhs;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
  return out;
}

BinaryForm operator*(const BinaryForm& lhs, const BinaryForm& rhs) {
  BinaryForm out(lhs.field_, lhs.degree() + rhs.degree());
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

BinaryForm operator*(const Scalar& k, const BinaryForm& f) {
  BinaryForm out = f;
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

bool operator==(const BinaryForm& lhs, const BinaryForm& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.is_zero() && rhs.is_zero();
  return lhs.coeffs_ == rhs.coeffs_;
}

std::string BinaryForm::to_string(const std::string& s, const std::string& t) const {
  std::string out;
  const int d = degree();
  auto power = [](const std::string& v, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? v : v + "^" + std::to_string(e);
  };
  for (int i = 0; i <= d; ++i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono = power(s, d - i);
    const std::string tp = power(t, i);
    if (!mono.empty() && !tp.empty()) mono += "*";
    mono += tp;
    const bool negative = !out.empty() && c.field().is_rational() && c.as_rational() < 0;
    const Scalar shown = negative ? -c : c;
    std::string coef = shown.to_string();
    if (!out.empty()) out += negative ? " - " : " + ";
    if (mono.empty()) {
      out += coef;
    } else if (shown.is_one()) {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- division, roots

std::optional<BinaryForm> divide_exact(const BinaryForm& num, const BinaryForm& den) {
  const int qdeg = num.degree() - den.degree();
  if (num.is_zero()) return BinaryForm(num.field(), std::max(qdeg, 0));
  if (den.is_zero() || qdeg < 0) return std::nullopt;
  auto [quot, rem] = poly_divmod(dehomogenize(num), dehomogenize(den));
  if (!rem.empty()) return std::nullopt;
  if (static_cast<int>(quot.size()) - 1 > qdeg) return std::nullopt;
  std::vector<Scalar> coeffs(static_cast<std::size_t>(qdeg + 1), num.field().zero());
  for (std::size_t k = 0; k < quot.size(); ++k) coeffs[static_cast<std::size_t>(qdeg) - k] = quot[k];
  BinaryForm q(std::move(coeffs));
  if (!(q * den == num)) return std::nullopt;
  return q;
}

ProjectiveRoots projective_roots(const BinaryForm& f) {
  ProjectiveRoots out;
  if (f.is_zero()) {
    out.all = true;
    return out;
  }
  const Field& field = f.field();
  if (field.is_prime()) {
    for (const Ratio& r : all_ratios(field)) {
      if (f.eval(r).is_zero()) out.roots.push_back(r);
    }
    return out;
  }
  if (f.coeff(0).is_zero()) out.roots.push_back(Ratio::infinity(field));
  const Poly p = dehomogenize(f);
  if (p.size() > 3) throw PreconditionError("rational root finding is limited to degree 2");
  const Scalar zero = field.zero();
  if (p.size() >= 2) {
    const Scalar a = p.size() == 3 ? p[2] : zero;
    for (const Scalar& x : solve_quadratic(a, p[1], p[0]).roots) out.roots.push_back(Ratio::of(x));
  }
  return out;
}

bool have_common_projective_zero(const std::vector<BinaryForm>& forms) {
  if (forms.empty()) return true;
  bool all_vanish_at_infinity = true;
  Poly g;
  for (const auto& f : forms) {
    if (!f.coeff(0).is_zero()) all_vanish_at_infinity = false;
    g = poly_gcd(g, dehomogenize(f));
  }
  if (all_vanish_at_infinity) return true;
  // Every dehomogenized form is zero: they all vanish everywhere.
  if (g.empty()) return true;
  return g.size() > 1;
}

// ---------------------------------------------------------------- TernaryQuadratic

Scalar TernaryQuadratic::eval(const Scalar& x0, const Scalar& x1, const Scalar& x2) const {
  return c[0] * x0 * x0 + c[1] * x1 * x1 + c[2] * x2 * x2 + c[3] * x0 * x1 + c[4] * x0 * x2 + c[5] * x1 * x2;
}

bool TernaryQuadratic::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Scalar& v) { return v.is_zero(); });
}

BinaryForm TernaryQuadratic::compose(const BinaryForm& f0, const BinaryForm& f1, const BinaryForm& f2) const {
  return c[0] * (f0 * f0) + c[1] * (f1 * f1) + c[2] * (f2 * f2) + c[3] * (f0 * f1) + c[4] * (f0 * f2) +
         c[5] * (f1 * f2);
}

TernaryQuadratic TernaryQuadratic::normalized() const {
  TernaryQuadratic out = *this;
  for (const auto& v : c) {
    if (v.is_zero()) continue;
    const Scalar inv = v.inverse();
    for (auto& w : out.c) w *= inv;
    break;
  }
  return out;
}

TernaryQuadratic TernaryQuadratic::substitute(const std::array<std::array<Scalar, 3>, 3>& rows) const {
  using Lin = std::array<Scalar, 3>;
  auto product = [](const Lin& p, const Lin& q) {
    return std::array<Scalar, 6>{p[0] * q[0], p[1] * q[1], p[2] * q[2], p[0] * q[1] + p[1] * q[0],
                                 p[0] * q[2] + p[2] * q[0], p[1] * q[2] + p[2] * q[1]};
  };
  static constexpr std::array<std::array<std::size_t, 2>, 6> kPairs{{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};
  TernaryQuadratic out;
  const Scalar zero = rows[0][0].field().zero();
  out.c.fill(zero);
  for (std::size_t k = 0; k < 6; ++k) {
    if (c[k].is_zero()) continue;
    const auto term = product(rows[kPairs[k][0]], rows[kPairs[k][1]]);
    for (std::size_t i = 0; i < 6; ++i) out.c[i] += c[k] * term[i];
  }
  return out;
}

}  // namespace quadriline
