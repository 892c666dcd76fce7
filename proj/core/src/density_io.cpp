#include "utfw/density_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace utfw {

RadialDensity read_density(std::istream& in) {
  std::vector<double> r, v;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    double radius = 0.0, value = 0.0;
    if (!(ls >> radius >> value)) {
      throw DensityParseError("line " + std::to_string(lineno) +
                              ": expected two numeric columns");
    }
    std::string extra;
    if (ls >> extra) {
      throw DensityParseError("line " + std::to_string(lineno) +
                              ": trailing content '" + extra + "'");
    }
    if (!(radius > 0.0) || (!r.empty() && radius <= r.back())) {
      throw DensityParseError("line " + std::to_string(lineno) +
                              ": radii must be positive and increasing");
    }
    if (!(value >= 0.0)) {
      throw DensityParseError("line " + std::to_string(lineno) +
                              ": density values must be nonnegative");
    }
    r.push_back(radius);
    v.push_back(value);
  }
  if (r.size() < 2)
    throw DensityParseError("density file needs at least 2 rows");
  return RadialDensity::from_samples(RadialGrid::from_nodes(std::move(r)),
                                     std::move(v));
}

RadialDensity read_density_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DensityParseError("cannot open density file: " + path);
  return read_density(in);
}

}  // namespace utfw
