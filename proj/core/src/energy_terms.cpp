#include "utfw/energy_terms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace utfw {

namespace {
constexpr double kPi = std::numbers::pi;
}

double weizsacker_term(const RadialDensity& rho, const ModelParams& p) {
  const auto& r = rho.grid.nodes();
  std::vector<double> f(r.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::cbrt(rho.values[i]);
  const auto df = radial_derivative(rho.grid, f);
  std::vector<double> g(r.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = df[i] * df[i];
  return p.a2() * integrate_radial(rho.grid, g);
}

double tf_term(const RadialDensity& rho, const ModelParams& p) {
  std::vector<double> g(rho.values.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    g[i] = std::pow(rho.values[i], 4.0 / 3.0);
  return p.b2() * integrate_radial(rho.grid, g);
}

double attraction_term_atomic(const RadialDensity& rho, double z,
                              const ModelParams& p) {
  if (!(z >= 0.0)) throw std::domain_error("z must be nonnegative");
  const auto& r = rho.grid.nodes();
  const auto& w = rho.grid.weights();
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    s += w[i] * rho.values[i] * r[i];
  return p.alpha * z * 4.0 * kPi * s;
}

double radial_self_repulsion(const RadialDensity& rho) {
  const auto& r = rho.grid.nodes();
  const std::size_t n = r.size();
  // inner(r) = int_0^r rho s^2 ds, cumulative trapezoid with the [0, r_1]
  // head treated as a constant-rho segment
  std::vector<double> inner(n);
  inner[0] = rho.values[0] * r[0] * r[0] * r[0] / 3.0;
  for (std::size_t i = 1; i < n; ++i) {
    inner[i] = inner[i - 1] +
               0.5 * (r[i] - r[i - 1]) *
                   (rho.values[i - 1] * r[i - 1] * r[i - 1] +
                    rho.values[i] * r[i] * r[i]);
  }
  // outer(r) = int_r^{rmax} rho s ds
  std::vector<double> outer(n);
  outer[n - 1] = 0.0;
  for (std::size_t i = n - 1; i > 0; --i) {
    outer[i - 1] = outer[i] + 0.5 * (r[i] - r[i - 1]) *
                                  (rho.values[i - 1] * r[i - 1] +
                                   rho.values[i] * r[i]);
  }
  const auto& w = rho.grid.weights();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += w[i] * rho.values[i] * r[i] * r[i] * (inner[i] / r[i] + outer[i]);
  }
  return 0.5 * (4.0 * kPi) * (4.0 * kPi) * s;
}

double hartree_radial(const RadialDensity& rho, const ModelParams& p) {
  return p.alpha * radial_self_repulsion(rho);
}

double atomic_energy(const RadialDensity& rho, double z,
                     const ModelParams& p) {
  return weizsacker_term(rho, p) + tf_term(rho, p) -
         attraction_term_atomic(rho, z, p) + hartree_radial(rho, p);
}

}  // namespace utfw
