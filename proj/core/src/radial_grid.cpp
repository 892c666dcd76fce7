#include "utfw/radial_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace utfw {

namespace {

constexpr double kPi = std::numbers::pi;

bool uniform_diffs(const std::vector<double>& r) {
  const double h = (r.back() - r.front()) / double(r.size() - 1);
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (std::abs(r[i] - r[i - 1] - h) > 1e-9 * h) return false;
  }
  return true;
}

std::vector<double> trapezoid_weights(const std::vector<double>& r) {
  const std::size_t n = r.size();
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double half = 0.5 * (r[i + 1] - r[i]);
    w[i] += half;
    w[i + 1] += half;
  }
  w[0] += r[0];  // rectangle over [0, r_1]
  return w;
}

std::vector<double> simpson_weights(const std::vector<double>& r) {
  const std::size_t n = r.size();
  const double h = (r.back() - r.front()) / double(n - 1);
  std::vector<double> w(n, 0.0);
  std::size_t intervals = n - 1;
  std::size_t last = intervals;
  if (intervals % 2 != 0) {
    if (intervals >= 3) {
      last = intervals - 3;  // 3/8 rule on the final three intervals
    } else {
      last = 0;  // single interval: trapezoid
      w[0] += 0.5 * h;
      w[1] += 0.5 * h;
    }
  }
  for (std::size_t i = 0; i + 2 <= last; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (last == intervals - 3) {
    w[last] += 3.0 * h / 8.0;
    w[last + 1] += 9.0 * h / 8.0;
    w[last + 2] += 9.0 * h / 8.0;
    w[last + 3] += 3.0 * h / 8.0;
  }
  w[0] += r[0];
  return w;
}

void check_nodes(const std::vector<double>& r) {
  if (r.size() < 2) throw std::invalid_argument("grid needs at least 2 nodes");
  if (!(r.front() > 0.0))
    throw std::domain_error("grid nodes must be positive");
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (!(r[i] > r[i - 1]))
      throw std::domain_error("grid nodes must be strictly increasing");
  }
}

}  // namespace

RadialGrid::RadialGrid(std::vector<double> nodes, GridKind kind)
    : nodes_(std::move(nodes)), kind_(kind) {
  check_nodes(nodes_);
  weights_ = (kind_ == GridKind::Linear) ? simpson_weights(nodes_)
                                         : trapezoid_weights(nodes_);
}

RadialGrid RadialGrid::log_spaced(std::size_t n, double r_max,
                                  double r_min_ratio) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 nodes");
  if (!(r_max > 0.0)) throw std::domain_error("r_max must be positive");
  if (!(r_min_ratio > 0.0 && r_min_ratio < 1.0))
    throw std::domain_error("r_min_ratio must lie in (0, 1)");
  std::vector<double> r(n);
  const double lo = std::log(r_min_ratio * r_max);
  const double hi = std::log(r_max);
  const double dx = (hi - lo) / double(n - 1);
  for (std::size_t i = 0; i < n; ++i) r[i] = std::exp(lo + double(i) * dx);
  r.back() = r_max;
  return RadialGrid(std::move(r), GridKind::LogSpaced);
}

RadialGrid RadialGrid::linear(std::size_t n, double r_max) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 nodes");
  if (!(r_max > 0.0)) throw std::domain_error("r_max must be positive");
  std::vector<double> r(n);
  const double h = r_max / double(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = double(i + 1) * h;
  r.back() = r_max;
  return RadialGrid(std::move(r), GridKind::Linear);
}

RadialGrid RadialGrid::from_nodes(std::vector<double> nodes) {
  check_nodes(nodes);
  const GridKind kind =
      uniform_diffs(nodes) ? GridKind::Linear : GridKind::LogSpaced;
  return RadialGrid(std::move(nodes), kind);
}

double integrate(const RadialGrid& grid, std::span<const double> f) {
  if (f.size() != grid.size())
    throw std::invalid_argument("sample count does not match grid");
  const auto& w = grid.weights();
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f[i];
  return s;
}

double integrate_radial(const RadialGrid& grid, std::span<const double> f) {
  if (f.size() != grid.size())
    throw std::invalid_argument("sample count does not match grid");
  const auto& w = grid.weights();
  const auto& r = grid.nodes();
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    s += w[i] * 4.0 * kPi * r[i] * r[i] * f[i];
  return s;
}

std::vector<double> radial_derivative(const RadialGrid& grid,
                                      std::span<const double> f) {
  if (f.size() != grid.size())
    throw std::invalid_argument("sample count does not match grid");
  const std::size_t n = f.size();
  if (n < 3) throw std::invalid_argument("derivative needs at least 3 nodes");
  const auto& r = grid.nodes();
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h1 = r[i] - r[i - 1];
    const double h2 = r[i + 1] - r[i];
    d[i] = (-h2 / (h1 * (h1 + h2))) * f[i - 1] +
           ((h2 - h1) / (h1 * h2)) * f[i] +
           (h1 / (h2 * (h1 + h2))) * f[i + 1];
  }
  {
    const double h1 = r[1] - r[0];
    const double h2 = r[2] - r[1];
    d[0] = (-(2.0 * h1 + h2) / (h1 * (h1 + h2))) * f[0] +
           ((h1 + h2) / (h1 * h2)) * f[1] +
           (-h1 / (h2 * (h1 + h2))) * f[2];
  }
  {
    const double h1 = r[n - 2] - r[n - 3];
    const double h2 = r[n - 1] - r[n - 2];
    d[n - 1] = (h2 / (h1 * (h1 + h2))) * f[n - 3] +
               (-(h1 + h2) / (h1 * h2)) * f[n - 2] +
               ((h1 + 2.0 * h2) / (h2 * (h1 + h2))) * f[n - 1];
  }
  return d;
}

RadialDensity RadialDensity::from_samples(RadialGrid grid,
                                          std::vector<double> values) {
  if (values.size() != grid.size())
    throw std::invalid_argument("sample count does not match grid");
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::domain_error("density values must be finite and nonnegative");
  }
  return RadialDensity{std::move(grid), std::move(values)};
}

RadialDensity RadialDensity::from_function(
    RadialGrid grid, const std::function<double(double)>& rho) {
  std::vector<double> v(grid.size());
  const auto& r = grid.nodes();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = rho(r[i]);
  return from_samples(std::move(grid), std::move(v));
}

}  // namespace utfw
