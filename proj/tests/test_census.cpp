#include <doctest.h>

#include "quadriline/census.hpp"
#include "quadriline/error.hpp"
#include "quadriline/paths.hpp"
#include "support.hpp"

using namespace qtest;

namespace {

oracle::Residues to_residues(const ProjectiveRectangle& r) {
  oracle::Residues out;
  for (std::size_t i = 0; i < 9; ++i) out[i] = static_cast<std::int64_t>(r.coords()[i].as_residue());
  return out;
}

std::set<oracle::Residues> brute_force(const NormalizedConfig& c) {
  const auto p = static_cast<std::int64_t>(c.field().modulus());
  auto v = [](const Scalar& s) { return static_cast<std::int64_t>(s.as_residue()); };
  return oracle::brute_force_rectangles({v(c.mA()), v(c.mB()), v(c.mC()), v(c.mD())}, v(c.bA()), p);
}

}  // namespace

TEST_CASE("census matches an independent enumeration") {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const Field f = Field::prime(p);
    std::mt19937_64 rng(1000 + p);
    for (int i = 0; i < 25; ++i) {
      const auto c = random_config(f, rng).config;
      const auto lib = enumerate_rectangles(c);
      std::set<oracle::Residues> got;
      for (const auto& r : lib) got.insert(to_residues(r));
      CAPTURE(p);
      CHECK(got == brute_force(c));
      std::set<ProjectiveRectangle> images;
      for (const Ratio& r : all_ratios(f)) {
        images.insert(slope_path_eval(c, r));
        images.insert(aspect_path_eval(c, r));
      }
      CHECK(images == lib);
      const auto rep = verify_against_paths(c);
      CHECK(rep.ok());
      for (const auto& msg : rep.failures) MESSAGE(msg);
    }
  }
}

TEST_CASE("census of CFG3 contains the line at infinity") {
  const Field f = Field::prime(7);
  const auto c = NormalizedConfig::make(f.of(1), f.of(0), f.of(0), f.of(1), f.of(1));
  const auto rep = verify_against_paths(c);
  CHECK(rep.twin_pairs);
  CHECK(rep.at_infinity == 8);
  CHECK(rep.ok());
}

TEST_CASE("census of CFG1 over F_7") {
  const Field f = Field::prime(7);
  const auto c = NormalizedConfig::make(f.of(2), f.of(3), f.of(0), f.of(1), f.of(1));
  const auto rep = verify_against_paths(c);
  CHECK(rep.total == 8);
  CHECK(rep.slope_path_image == 8);
  CHECK(rep.aspect_path_image == 8);
  CHECK(rep.path_intersection == 8);
  CHECK(rep.at_infinity == 0);
  CHECK(rep.ok());
}

TEST_CASE("slope system finds exactly the census rectangles of each slope") {
  for (std::uint64_t p : {7, 11}) {
    const Field f = Field::prime(p);
    std::mt19937_64 rng(77 + p);
    for (int i = 0; i < 10; ++i) {
      const auto c = random_config(f, rng).config;
      const auto all = enumerate_rectangles(c);
      for (const Ratio& r : all_ratios(f)) {
        std::set<ProjectiveRectangle> expected;
        for (const auto& x : all)
          if (!x.at_infinity() && slope_of(x) == r) expected.insert(x);
        const auto sol = rectangle_from_slope(c, r, f.one());
        if (sol.is_pencil) continue;
        std::set<ProjectiveRectangle> got(sol.rectangles.begin(), sol.rectangles.end());
        // Rectangles whose slope is indeterminate satisfy every slope equation.
        std::erase_if(got, [&](const ProjectiveRectangle& x) { return !slope_of(x).has_value(); });
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("random_config keeps C and D apart") {
  std::mt19937_64 rng(5);
  const Field f = Field::prime(3);
  std::size_t rejected = 0;
  for (int i = 0; i < 200; ++i) {
    const auto rc = random_config(f, rng);
    CHECK_FALSE(rc.config.mC() == rc.config.mD());
    rejected += rc.rejected;
  }
  CHECK(rejected > 0);
  CHECK_THROWS_AS(enumerate_rectangles(cfg1()), PreconditionError);
}
