#pragma once

#include <istream>
#include <string>

#include "utfw/radial_grid.hpp"

// Two-column text import for radial densities: one "radius value" pair per
// line, radii strictly increasing and positive, values nonnegative. Blank
// lines and lines starting with '#' are skipped.

namespace utfw {

struct DensityParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RadialDensity read_density(std::istream& in);
RadialDensity read_density_file(const std::string& path);

}  // namespace utfw
