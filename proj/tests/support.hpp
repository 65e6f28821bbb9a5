#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quadriline/census.hpp"
#include "quadriline/configuration.hpp"
#include "quadriline/io.hpp"
#include "quadriline/ratio.hpp"
#include "quadriline/rectangle.hpp"
#include "quadriline/scalar.hpp"

namespace qtest {

using namespace quadriline;

inline Scalar Q(long n, long d = 1) { return Scalar::rational(n, d); }
inline Ratio R(const std::string& text, const Field& f = Field::rational()) { return parse_ratio(text, f); }
inline Point P(long xn, long xd, long yn, long yd) { return {Q(xn, xd), Q(yn, yd)}; }

inline NormalizedConfig cfg1() { return NormalizedConfig::rational(2, 3, 0, 1, 1); }
inline NormalizedConfig cfg2() { return NormalizedConfig::rational(-4, -1, 0, 2, 3); }
inline NormalizedConfig cfg3() { return NormalizedConfig::rational(1, 0, 0, 1, 1); }

inline std::string data_file(const std::string& name) { return std::string(QUADRILINE_DATA_DIR) + "/" + name; }

inline ConfigurationInput input_from_normalized(const NormalizedConfig& c) {
  ConfigurationInput in;
  in.field = c.field();
  in.pair1 = {c.line(Role::A), c.line(Role::C)};
  in.pair2 = {c.line(Role::B), c.line(Role::D)};
  return in;
}

inline ProjectiveRectangle rect(std::initializer_list<Scalar> coords) {
  std::array<Scalar, 9> a;
  std::copy(coords.begin(), coords.end(), a.begin());
  return ProjectiveRectangle(a);
}

/// Small rationals with mostly integer values and occasional fractions.
inline Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::bernoulli_distribution frac(0.25);
  return Q(num(rng), frac(rng) ? den(rng) : 1);
}

/// Random standing-form configurations over Q. About a quarter are made
/// degenerate by solving e1·f1 + e2·f2 = 0 for m_D, which enters linearly.
inline NormalizedConfig random_rational_config(std::mt19937_64& rng) {
  for (;;) {
    const Scalar mA = random_rational(rng), mB = random_rational(rng), mC = random_rational(rng),
                 bA = random_rational(rng);
    Scalar mD = random_rational(rng);
    if (std::bernoulli_distribution(0.25)(rng)) {
      const Scalar e1 = bA * mB - mA, e2 = bA - Q(1), mBC = mB - mC;
      const Scalar slope = e1 * (bA * mBC + mC) + e2;
      const Scalar constant = -e1 * mA * mC + e2 * (bA * mBC - mA);
      if (!slope.is_zero()) mD = -constant / slope;
    }
    if (mC == mD) continue;
    return NormalizedConfig::make(mA, mB, mC, mD, bA);
  }
}

/// Random lines a·x + b·y = c over Q, including vertical ones.
inline Line random_line(std::mt19937_64& rng) {
  for (;;) {
    const Scalar a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    if (a.is_zero() && b.is_zero()) continue;
    return Line::make(a, b, c);
  }
}

}  // namespace qtest

#include "oracle.hpp"

namespace qtest {

inline oracle::Config to_oracle(const NormalizedConfig& c) {
  return {{c.mA().as_rational(), c.mB().as_rational(), c.mC().as_rational(), c.mD().as_rational()},
          c.bA().as_rational()};
}

inline std::array<Point, 4> to_points(const oracle::Vertices& v) {
  std::array<Point, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = {Scalar::rational(v[2 * i]), Scalar::rational(v[2 * i + 1])};
  return out;
}

}  // namespace qtest
