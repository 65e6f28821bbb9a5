#pragma once

#include <cstddef>
#include <string>

#include "quadriline/configuration.hpp"

namespace quadriline {

struct RenderOptions {
  std::size_t samples = 12;
  bool diagonals = false;
};

/// A standalone SVG of the four lines, sampled rectangles and the dotted
/// center locus. Rational configurations only (PreconditionError otherwise).
std::string render_svg(const ConfigurationInput& input, const RenderOptions& options);

}  // namespace quadriline
