#include "verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "utfw/certificate.hpp"
#include "utfw/energy_terms.hpp"
#include "utfw/instability_search.hpp"
#include "utfw/molecule.hpp"
#include "utfw/uncertainty.hpp"

namespace utfw::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

BallProbe exp_probe(const RadialGrid& grid) {
  std::vector<double> f(grid.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    f[i] = std::exp(-grid.nodes()[i]);
  return BallProbe::from_samples(grid, std::move(f));
}

// -3 * 4pi int u r f^2 f' r^2 dr, the integrated-by-parts form of the
// lemma's left side (for u with u(R) = 0).
double ibp_form(const WeightFn& u, const BallProbe& probe) {
  const auto df = probe_derivative(probe);
  const auto& r = probe.grid.nodes();
  std::vector<double> g(r.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    g[i] = u.u[i] * r[i] * probe.f[i] * probe.f[i] * df[i];
  return -3.0 * integrate_radial(probe.grid, g);
}

// direct quadrature of 4pi int (3u + u' r) f^3 r^2 dr without the
// u(R) = 0 guard, for perturbed weights
double direct_form(const WeightFn& u, const BallProbe& probe) {
  const auto& r = probe.grid.nodes();
  std::vector<double> g(r.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double f = probe.f[i];
    g[i] = (3.0 * u.u[i] + u.u_prime[i] * r[i]) * f * f * f;
  }
  return integrate_radial(probe.grid, g);
}

// Smooth analytic probes for the identity suites. Splines are kept for the
// inequality suites; their curvature makes the two quadratures drift apart
// faster than the 1e-6 identity tolerance.
std::vector<BallProbe> analytic_probes(const RadialGrid& grid,
                                       std::mt19937_64& rng) {
  const double R = grid.r_max();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<BallProbe> probes;
  probes.push_back(exp_probe(grid));
  probes.push_back(coulomb_extremal(100.0, 1.0, grid));
  const auto& r = grid.nodes();
  for (int i = 0; i < 12; ++i) {
    const double c = 0.2 + 1.8 * unit(rng);
    std::vector<double> f(r.size());
    switch (i % 3) {
      case 0: {  // (1 + beta r) e^{-gamma r}
        const double beta = 2.0 * unit(rng) / R;
        const double gamma = (0.5 + 3.0 * unit(rng)) / R;
        for (std::size_t k = 0; k < r.size(); ++k)
          f[k] = c * (1.0 + beta * r[k]) * std::exp(-gamma * r[k]);
        break;
      }
      case 1: {  // gaussian bump
        const double sigma = (0.3 + 0.7 * unit(rng)) * R;
        for (std::size_t k = 0; k < r.size(); ++k)
          f[k] = c * std::exp(-(r[k] / sigma) * (r[k] / sigma));
        break;
      }
      default: {  // rational tail
        const double s0 = (0.2 + 0.8 * unit(rng)) * R;
        for (std::size_t k = 0; k < r.size(); ++k) {
          const double q = 1.0 + r[k] / s0;
          f[k] = c / (q * q * q);
        }
      }
    }
    probes.push_back(BallProbe::from_samples(grid, std::move(f)));
  }
  return probes;
}

SuiteResult ibp_identity_suite(std::mt19937_64& rng) {
  SuiteResult s{"ibp-identity", true, 0.0,
                "max relative difference between the two lemma forms"};
  const auto grid = RadialGrid::log_spaced(80000, 1.0, 1e-8);
  const auto w = coulomb_weight(grid);
  for (const auto& probe : analytic_probes(grid, rng)) {
    const double lhs = lemma_lhs(w, probe);
    const double rhs = ibp_form(w, probe);
    const double rel =
        std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
    s.worst = std::max(s.worst, rel);
  }
  s.pass = s.worst < 1e-6;
  return s;
}

SuiteResult boundary_term_suite() {
  SuiteResult s{"boundary-term", true, 0.0,
                "max relative mismatch against the surface term"};
  const auto grid = RadialGrid::log_spaced(40000, 1.0, 1e-8);
  const auto base = coulomb_weight(grid);
  const auto probe = exp_probe(grid);
  const double R = grid.r_max();
  const double fR = probe.f.back();
  for (double c : {0.25, 0.5, 1.0}) {
    WeightFn pert = base;
    for (auto& v : pert.u) v += c;  // now u(R) = c, breaking the identity
    const double broke = direct_form(pert, probe) - ibp_form(pert, probe);
    const double surface = 4.0 * kPi * R * R * R * c * fR * fR * fR;
    s.worst = std::max(s.worst, std::abs(broke - surface) / surface);
  }
  s.pass = s.worst < 1e-6;
  return s;
}

SuiteResult schwarz_extremal_suite() {
  SuiteResult s{"schwarz-extremal", true, 0.0,
                "max |ratio - 1| over the equality family"};
  const auto grid = RadialGrid::log_spaced(10000, 1.0, 1e-8);
  const auto w = coulomb_weight(grid);
  for (double lam : {10.0, 100.0, 1000.0}) {
    const auto f = coulomb_extremal(lam, 1.0, grid);
    s.worst = std::max(s.worst, std::abs(schwarz_ratio(w, f) - 1.0));
  }
  s.pass = s.worst < 1e-6;
  return s;
}

SuiteResult schwarz_random_suite(std::mt19937_64& rng) {
  SuiteResult s{"schwarz-random", true, 0.0, "max |lhs|/rhs over 100 probes"};
  const double radii[] = {0.5, 1.0, 2.0};
  for (int i = 0; i < 100; ++i) {
    const auto grid = RadialGrid::log_spaced(10000, radii[i % 3], 1e-8);
    const auto w = coulomb_weight(grid);
    const auto probe = random_spline_probe(grid, rng);
    s.worst = std::max(s.worst, schwarz_ratio(w, probe));
  }
  s.pass = s.worst <= 1.0 + 1e-8;
  return s;
}

SuiteResult mup_gap_suite(const ModelParams& p, std::mt19937_64& rng) {
  SuiteResult s{"mup-gap", true, 0.0,
                "min gap / lhs over 100 probes x 3 radii x 5 (a,b)"};
  const double pairs[][2] = {{p.a, p.b},
                            {0.5 * p.a, 2.0 * p.b},
                            {2.0 * p.a, 0.5 * p.b},
                            {0.1 * p.a, 0.1 * p.b},
                            {3.0 * p.a, 3.0 * p.b}};
  double worst = 0.0;  // most negative normalized gap
  for (double R : {0.5, 1.0, 2.0}) {
    const auto grid = RadialGrid::log_spaced(10000, R, 1e-8);
    for (int i = 0; i < 100; ++i) {
      const auto probe = random_spline_probe(grid, rng);
      const auto df = probe_derivative(probe);
      const auto& r = grid.nodes();
      std::vector<double> gX(r.size()), gY(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) {
        gX[k] = df[k] * df[k];
        const double f2 = probe.f[k] * probe.f[k];
        gY[k] = f2 * f2;
      }
      const double X = integrate_radial(grid, gX);
      const double Y = integrate_radial(grid, gY);
      for (const auto& ab : pairs) {
        const double gap = mup_gap(probe, ab[0], ab[1]);
        const double lhs = ab[0] * ab[0] * X + ab[1] * ab[1] * Y;
        worst = std::min(worst, gap / lhs);
      }
    }
  }
  s.worst = worst;
  s.pass = worst >= -1e-8;
  return s;
}

SuiteResult mup_sharpness_suite(const ModelParams& p) {
  SuiteResult s{"mup-sharpness", false, 0.0,
                "most negative gap at coefficient 4/3 + 0.05"};
  const auto hit = find_mup_coeff_violation(0.05, p.a, p.b);
  if (hit) {
    s.worst = hit->gap;
    s.pass = hit->gap < 0.0;
  }
  return s;
}

SuiteResult amgm_suite(std::mt19937_64& rng) {
  SuiteResult s{"amgm", true, 0.0, "min normalized margin over 1000 tuples"};
  std::uniform_real_distribution<double> expo(-8.0, 8.0);
  std::uniform_real_distribution<double> coef(0.1, 10.0);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    const double X = std::pow(10.0, expo(rng));
    const double Y = std::pow(10.0, expo(rng));
    const double a = coef(rng);
    const double b = coef(rng);
    if (!amgm_step_check(X, Y, a, b)) s.pass = false;
    const double lhs = a * a * X + b * b * Y;
    worst = std::min(worst, (lhs - 2.0 * a * b * std::sqrt(X * Y)) / lhs);
  }
  s.worst = worst;
  s.pass = s.pass && worst >= -1e-12;
  return s;
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v{n(rng), n(rng), n(rng)};
  const double len = v.norm();
  return len > 0.0 ? v * (1.0 / len) : Vec3{1.0, 0.0, 0.0};
}

SuiteResult lieb_yau_suite(std::mt19937_64& rng) {
  SuiteResult s{"lieb-yau", true, 0.0,
                "min gap/|lhs| over 20 random two-nucleus configs"};
  std::uniform_real_distribution<double> zdist(1.0, 50.0);
  std::uniform_real_distribution<double> ddist(0.5, 5.0);
  std::uniform_real_distribution<double> offs(0.0, 0.05);
  std::uniform_real_distribution<double> amp(0.01, 10.0);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    const double z = zdist(rng);
    const double d = ddist(rng);
    MoleculeConfig cfg;
    cfg.nuclei = {{z, {0.0, 0.0, 0.0}}, {z, {d, 0.0, 0.0}}};
    const double rb = 0.1 * d;
    std::vector<PlacedBlob> blobs;
    for (int j = 0; j < 2; ++j) {
      const double sigma = rb / 3.0;
      const double A = amp(rng);
      auto profile = RadialDensity::from_function(
          RadialGrid::linear(400, rb),
          [&](double r) { return A * std::exp(-(r / sigma) * (r / sigma)); });
      const Vec3 center =
          cfg.nuclei[j].position + random_unit(rng) * (offs(rng) * d);
      blobs.push_back({std::move(profile), center});
    }
    const double gap = lieb_yau_gap(cfg, blobs, 1.0 / 137.0);
    const double rhs = z * z / (2.0 * d);  // (z^2/8) sum 1/D_j, D_j = d/2
    const double lhs = gap + rhs;
    worst = std::min(worst, gap / std::abs(lhs));
  }
  s.worst = worst;
  s.pass = worst >= -1e-6;
  return s;
}

SuiteResult homogeneity_suite(const ModelParams& p) {
  SuiteResult s{"homogeneity", true, 0.0,
                "max scaling residual over both shapes, t in {1/2, 2, 10}"};
  const auto grid = RadialGrid::log_spaced(2000, 100.0);
  TrialFamily expo{TrialShape::Exponential, 0.5, 1.0, 4.0};
  TrialFamily power{TrialShape::Power, 0.5, 1.0, 4.5};
  for (const auto& fam : {expo, power}) {
    const auto rho = trial_density(fam, grid);
    for (double t : {0.5, 2.0, 10.0}) {
      s.worst = std::max(s.worst, scaling_check(rho, t, 50.0, p));
    }
  }
  s.pass = s.worst < 1e-6;
  return s;
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(const ModelParams& p,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteResult> out;
  out.push_back(ibp_identity_suite(rng));
  out.push_back(boundary_term_suite());
  out.push_back(schwarz_extremal_suite());
  out.push_back(schwarz_random_suite(rng));
  out.push_back(mup_gap_suite(p, rng));
  out.push_back(mup_sharpness_suite(p));
  out.push_back(amgm_suite(rng));
  out.push_back(lieb_yau_suite(rng));
  out.push_back(homogeneity_suite(p));
  return out;
}

}  // namespace utfw::cli
