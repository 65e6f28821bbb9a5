#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quadriline/configuration.hpp"
#include "quadriline/rectangle.hpp"

namespace quadriline {

/// Every rectangle of the scaled configuration over F_p, found by running
/// through all p² + p + 1 parameters (x_A : x_B : w).
std::set<ProjectiveRectangle> enumerate_rectangles(const NormalizedConfig& cfg);

struct CensusReport {
  std::uint64_t modulus = 0;
  bool degenerate = false;
  bool twin_pairs = false;
  bool dual_pairs = false;
  std::size_t total = 0;
  std::size_t at_infinity = 0;
  /// Parameters (x_A : x_B : w) on which h vanishes.
  std::size_t quadric_points = 0;
  std::size_t slope_path_image = 0;
  std::size_t aspect_path_image = 0;
  std::size_t path_intersection = 0;
  /// Keys are ratio literals or "indeterminate".
  std::map<std::string, std::size_t> by_slope;
  std::map<std::string, std::size_t> by_aspect;
  bool union_covered = false;
  bool at_infinity_bound_ok = false;
  bool degenerate_consistency_ok = false;
  bool quadric_count_ok = false;
  /// One line per failed check, naming a witness point.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Compares the brute-force census with the images of both paths.
CensusReport verify_against_paths(const NormalizedConfig& cfg);

struct RandomConfig {
  NormalizedConfig config;
  std::size_t rejected = 0;
};

/// Uniform standing-form constants over F_p, resampling until m_C ≠ m_D.
RandomConfig random_config(const Field& field, std::mt19937_64& rng);

}  // namespace quadriline
