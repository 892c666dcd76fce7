#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

// Radial grids and quadrature for spherically symmetric densities.
// A grid carries strictly increasing positive nodes r_1 < ... < r_N and
// weights w_i such that int_0^{r_max} g(r) dr ~ sum_i w_i g(r_i). The
// segment [0, r_1] is covered by a rectangle on the first node, so
// constants integrate exactly.

namespace utfw {

enum class GridKind { LogSpaced, Linear };

inline constexpr std::size_t kDefaultGridPoints = 2000;
inline constexpr double kDefaultRMax = 50.0;
inline constexpr double kDefaultRMinRatio = 1e-6;

class RadialGrid {
 public:
  // Geometric nodes from r_min_ratio*r_max to r_max, trapezoid weights.
  static RadialGrid log_spaced(std::size_t n = kDefaultGridPoints,
                               double r_max = kDefaultRMax,
                               double r_min_ratio = kDefaultRMinRatio);

  // Uniform nodes h, 2h, ..., r_max with composite Simpson weights
  // (3/8 rule on the tail when the interval count is odd).
  static RadialGrid linear(std::size_t n, double r_max);

  // Build from explicit nodes (e.g. an imported density file). Uniformly
  // spaced nodes get Simpson weights and the Linear tag; anything else is
  // integrated with the trapezoid rule under the LogSpaced tag.
  static RadialGrid from_nodes(std::vector<double> nodes);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  GridKind kind() const { return kind_; }
  double r_max() const { return nodes_.back(); }
  std::size_t size() const { return nodes_.size(); }

 private:
  RadialGrid(std::vector<double> nodes, GridKind kind);

  std::vector<double> nodes_;
  std::vector<double> weights_;
  GridKind kind_;
};

// sum_i w_i f_i ~ int_0^{r_max} f dr
double integrate(const RadialGrid& grid, std::span<const double> f);

// int f(r) 4 pi r^2 dr
double integrate_radial(const RadialGrid& grid, std::span<const double> f);

// Centered second-order first derivative on the (generally non-uniform)
// nodes, one-sided second-order stencils at the ends. Needs >= 3 nodes.
std::vector<double> radial_derivative(const RadialGrid& grid,
                                      std::span<const double> f);

struct RadialDensity {
  RadialGrid grid;
  std::vector<double> values;  // nonnegative samples at grid.nodes()

  static RadialDensity from_samples(RadialGrid grid,
                                    std::vector<double> values);
  static RadialDensity from_function(
      RadialGrid grid, const std::function<double(double)>& rho);

  double total_charge() const { return integrate_radial(grid, values); }
};

}  // namespace utfw
