#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <utfw/model_params.hpp>
#include <utfw/radial_grid.hpp>
#include <utfw/uncertainty.hpp>

#include "support/oracles.hpp"

using namespace utfw;

namespace {

constexpr double kPi = 3.14159265358979323846;

BallProbe exp_probe(const RadialGrid& grid) {
  std::vector<double> f(grid.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    f[i] = std::exp(-grid.nodes()[i]);
  return BallProbe::from_samples(grid, std::move(f));
}

BallProbe const_probe(const RadialGrid& grid, double c) {
  return BallProbe::from_samples(grid, std::vector<double>(grid.size(), c));
}

WeightFn zero_weight(const RadialGrid& grid) {
  return WeightFn{grid.r_max(), grid, std::vector<double>(grid.size(), 0.0),
                  std::vector<double>(grid.size(), 0.0)};
}

}  // namespace

TEST_CASE("canonical weight") {
  const auto grid = RadialGrid::log_spaced(2000, 1.0, 1e-6);
  const auto w = coulomb_weight(grid);
  REQUIRE(w.u.size() == grid.size());
  CHECK(w.R == grid.r_max());
  CHECK(w.u.back() == 0.0);
  const auto& r = grid.nodes();
  for (std::size_t i = 0; i < r.size(); i += 137) {
    CHECK(w.u[i] == doctest::Approx(0.5 * (1.0 / r[i] - 1.0)).epsilon(1e-14));
    CHECK(w.u_prime[i] ==
          doctest::Approx(-0.5 / (r[i] * r[i])).epsilon(1e-14));
  }
}

TEST_CASE("lemma left side") {
  SUBCASE("frozen value for an exponential probe") {
    // 4 pi int_0^1 (1/r - 3/2) e^{-3r} r^2 dr
    const auto grid = RadialGrid::log_spaced(40000, 1.0, 1e-8);
    CHECK(lemma_lhs(coulomb_weight(grid), exp_probe(grid)) ==
          doctest::Approx(0.31282137645650828).epsilon(1e-6));
  }

  SUBCASE("constant probes cancel") {
    // (3u + u'r) r^2 = r - (3/2) r^2 / R integrates to zero over [0, R]
    const auto lin = RadialGrid::linear(2000, 1.0);
    CHECK(std::abs(lemma_lhs(coulomb_weight(lin), const_probe(lin, 1.0))) <
          2e-5);
    const auto lg = RadialGrid::log_spaced(40000, 1.0, 1e-8);
    CHECK(std::abs(lemma_lhs(coulomb_weight(lg), const_probe(lg, 1.0))) <
          2e-5);
  }

  SUBCASE("zero weight gives exactly zero") {
    const auto grid = RadialGrid::log_spaced(500, 1.0, 1e-6);
    CHECK(lemma_lhs(zero_weight(grid), exp_probe(grid)) == 0.0);
  }

  SUBCASE("integration by parts gives the same number") {
    const auto grid = RadialGrid::log_spaced(40000, 1.0, 1e-8);
    const auto w = coulomb_weight(grid);
    const auto probe = exp_probe(grid);
    // -3 * 4pi int u r f^2 f' r^2 dr with the analytic derivative
    const auto& r = grid.nodes();
    std::vector<double> g(r.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double f = probe.f[i];
      g[i] = w.u[i] * r[i] * f * f * (-f);
    }
    const double ibp = -3.0 * integrate_radial(grid, g);
    CHECK(lemma_lhs(w, probe) == doctest::Approx(ibp).epsilon(1e-6));
  }

  SUBCASE("weights that do not vanish at R are rejected") {
    const auto grid = RadialGrid::log_spaced(200, 1.0, 1e-6);
    auto w = coulomb_weight(grid);
    w.u.back() = 1e-3;
    CHECK_THROWS_AS(lemma_lhs(w, exp_probe(grid)), std::domain_error);
  }

  SUBCASE("weight and probe must share the grid") {
    const auto g1 = RadialGrid::log_spaced(200, 1.0, 1e-6);
    const auto g2 = RadialGrid::log_spaced(300, 1.0, 1e-6);
    CHECK_THROWS_AS(lemma_lhs(coulomb_weight(g1), exp_probe(g2)),
                    std::invalid_argument);
  }
}

TEST_CASE("lemma right side") {
  const auto grid = RadialGrid::log_spaced(2000, 1.0, 1e-6);
  const auto w = coulomb_weight(grid);

  SUBCASE("flat probes have no gradient") {
    // derivative stencils on a flat probe cancel to rounding, not exactly
    CHECK(lemma_rhs(w, const_probe(grid, 0.7)) < 1e-10);
  }

  SUBCASE("zero weight kills the second factor") {
    CHECK(lemma_rhs(zero_weight(grid), exp_probe(grid)) == 0.0);
  }

  SUBCASE("cubic homogeneity in the probe") {
    const auto probe = exp_probe(grid);
    const double base = lemma_rhs(w, probe);
    for (const double c : {0.5, 2.0, 7.0}) {
      auto scaled = probe;
      for (auto& v : scaled.f) v *= c;
      CHECK(lemma_rhs(w, scaled) ==
            doctest::Approx(c * c * c * base).epsilon(1e-12));
    }
  }
}

TEST_CASE("weighted Schwarz ratio") {
  SUBCASE("equality family saturates the bound") {
    const auto grid = RadialGrid::log_spaced(10000, 1.0, 1e-8);
    const auto w = coulomb_weight(grid);
    for (const double lam : {10.0, 100.0, 1000.0}) {
      const auto f = coulomb_extremal(lam, 1.0, grid);
      CHECK(std::abs(schwarz_ratio(w, f) - 1.0) < 1e-6);
    }
  }

  SUBCASE("random splines never exceed it") {
    std::mt19937_64 rng(99);
    const auto grid = RadialGrid::log_spaced(10000, 1.0, 1e-8);
    const auto w = coulomb_weight(grid);
    for (int i = 0; i < 100; ++i) {
      const auto probe = random_spline_probe(grid, rng);
      CHECK(schwarz_ratio(w, probe) <= 1.0 + 1e-8);
    }
  }

  SUBCASE("zero over zero counts as zero") {
    const auto grid = RadialGrid::log_spaced(500, 1.0, 1e-6);
    CHECK(schwarz_ratio(zero_weight(grid), const_probe(grid, 1.0)) == 0.0);
  }

  SUBCASE("nonzero over zero is infinite") {
    // u = 0 with u' = 1 keeps the left integral alive while the weighted
    // right factor is a sum of exact zeros
    const auto grid = RadialGrid::linear(500, 1.0);
    auto w = zero_weight(grid);
    w.u_prime.assign(grid.size(), 1.0);
    const double r = schwarz_ratio(w, const_probe(grid, 1.0));
    CHECK(std::isinf(r));
  }
}

TEST_CASE("equality family") {
  SUBCASE("lam = 0 is the constant 1/C") {
    const auto grid = RadialGrid::log_spaced(300, 1.0, 1e-6);
    const auto f = extremal_f(coulomb_weight(grid), 0.0, 4.0);
    for (const double v : f.f) CHECK(v == 0.25);
  }

  SUBCASE("closed form for the canonical weight") {
    // int_0^r s u ds = (1/2)(r - r^2/(2R)); at R = 1, lam = C = 1 the
    // family member is 1 / (r/2 - r^2/4 + 1)
    const auto grid = RadialGrid::log_spaced(5000, 1.0, 1e-8);
    const auto w = coulomb_weight(grid);
    const auto numeric = extremal_f(w, 1.0, 1.0);
    const auto closed = coulomb_extremal(1.0, 1.0, grid);
    const auto& r = grid.nodes();
    double worst = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double exact = 1.0 / (r[i] / 2.0 - r[i] * r[i] / 4.0 + 1.0);
      CHECK(closed.f[i] == doctest::Approx(exact).epsilon(1e-14));
      worst = std::max(worst, std::abs(numeric.f[i] - exact));
    }
    // s u(s) is linear in s, so the trapezoid accumulation is exact up to
    // rounding and the tiny head segment
    CHECK(worst < 1e-12);
  }

  SUBCASE("nonpositive denominators are rejected") {
    const auto grid = RadialGrid::log_spaced(300, 1.0, 1e-6);
    CHECK_THROWS_AS(extremal_f(coulomb_weight(grid), -10.0, 1.0),
                    std::domain_error);
  }
}

TEST_CASE("surface term of the broken identity") {
  // shifting u by a constant c breaks u(R) = 0; the two lemma forms then
  // differ by the boundary term 4 pi R^3 c f(R)^3
  const auto grid = RadialGrid::log_spaced(40000, 1.0, 1e-8);
  const auto probe = exp_probe(grid);
  const auto base = coulomb_weight(grid);
  const auto& r = grid.nodes();
  const double c = 0.5;

  auto pert = base;
  for (auto& v : pert.u) v += c;

  std::vector<double> gdir(r.size()), gibp(r.size());
  const auto df = probe_derivative(probe);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double f = probe.f[i];
    gdir[i] = (3.0 * pert.u[i] + pert.u_prime[i] * r[i]) * f * f * f;
    gibp[i] = pert.u[i] * r[i] * f * f * df[i];
  }
  const double broke =
      integrate_radial(grid, gdir) + 3.0 * integrate_radial(grid, gibp);
  const double fR = probe.f.back();
  const double surface = 4.0 * kPi * c * fR * fR * fR;
  CHECK(broke == doctest::Approx(surface).epsilon(1e-6));
}

TEST_CASE("modified uncertainty principle gap") {
  const auto p = params_from_lambda(0.2);

  SUBCASE("vanishing probe") {
    const auto grid = RadialGrid::log_spaced(500, 1.0, 1e-6);
    CHECK(mup_gap(const_probe(grid, 0.0), p.a, p.b) == 0.0);
  }

  SUBCASE("flat probe reduces to the TF term") {
    // the attraction-like rhs integrates (4/(3r) - 2/R) r^2 to zero, so
    // only b^2 (4pi/3) R^3 c^4 survives
    const auto grid = RadialGrid::linear(2000, 1.0);
    const double c = 1.3;
    const double gap = mup_gap(const_probe(grid, c), p.a, p.b);
    const double tf = p.b2() * (4.0 * kPi / 3.0) * std::pow(c, 4.0);
    CHECK(gap == doctest::Approx(tf).epsilon(1e-5));
  }

  SUBCASE("random splines keep it nonnegative") {
    std::mt19937_64 rng(5);
    const double pairs[][2] = {
        {p.a, p.b}, {0.5 * p.a, 2.0 * p.b}, {2.0 * p.a, 0.5 * p.b}};
    for (const double R : {0.5, 2.0}) {
      const auto grid = RadialGrid::log_spaced(10000, R, 1e-8);
      for (int i = 0; i < 15; ++i) {
        const auto probe = random_spline_probe(grid, rng);
        const auto df = probe_derivative(probe);
        std::vector<double> gX(grid.size()), gY(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k) {
          gX[k] = df[k] * df[k];
          const double f2 = probe.f[k] * probe.f[k];
          gY[k] = f2 * f2;
        }
        const double X = integrate_radial(grid, gX);
        const double Y = integrate_radial(grid, gY);
        for (const auto& ab : pairs) {
          const double lhs = ab[0] * ab[0] * X + ab[1] * ab[1] * Y;
          CHECK(mup_gap(probe, ab[0], ab[1]) >= -1e-8 * lhs);
        }
      }
    }
  }

  SUBCASE("smaller coefficient leaves more room") {
    const auto grid = RadialGrid::log_spaced(5000, 1.0, 1e-8);
    const auto probe = exp_probe(grid);
    CHECK(mup_gap_coeff(probe, p.a, p.b, 1.0) >
          mup_gap_coeff(probe, p.a, p.b, 4.0 / 3.0));
    CHECK(mup_gap_coeff(probe, p.a, p.b, 4.0 / 3.0) ==
          doctest::Approx(mup_gap(probe, p.a, p.b)).epsilon(1e-15));
  }
}

TEST_CASE("AM-GM step") {
  CHECK(amgm_step_check(0.0, 0.0, 1.0, 1.0));
  CHECK(amgm_step_check(0.0, 3.7, 0.5, 2.0));
  // exact equality case a sqrt(X) = b sqrt(Y)
  CHECK(amgm_step_check(4.0, 1.0, 1.0, 2.0));
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  std::uniform_real_distribution<double> c(0.01, 10.0);
  for (int i = 0; i < 1000; ++i)
    CHECK(amgm_step_check(u(rng), u(rng), c(rng), c(rng)));
}

TEST_CASE("the 4/3 coefficient is sharp") {
  const auto p = params_from_lambda(0.2);
  const auto hit = find_mup_coeff_violation(0.05, p.a, p.b);
  REQUIRE(hit.has_value());
  CHECK(hit->coeff == doctest::Approx(4.0 / 3.0 + 0.05).epsilon(1e-15));
  CHECK(hit->gap < 0.0);
  // the witness violates the inflated coefficient but not the true one
  CHECK(mup_gap_coeff(hit->probe, p.a, p.b, hit->coeff) ==
        doctest::Approx(hit->gap).epsilon(1e-12));
  CHECK(mup_gap(hit->probe, p.a, p.b) >= -1e-8 * (1.0 + std::abs(hit->gap)));
}

TEST_CASE("probe derivative accuracy") {
  SUBCASE("fourth order on log grids") {
    const auto grid = RadialGrid::log_spaced(2000, 1.0, 1e-6);
    const auto probe = exp_probe(grid);
    const auto df = probe_derivative(probe);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      worst = std::max(worst,
                       std::abs(df[i] + std::exp(-grid.nodes()[i])));
    CHECK(worst < 1e-6);
  }

  SUBCASE("second order elsewhere") {
    const auto grid = RadialGrid::linear(1000, 1.0);
    const auto probe = exp_probe(grid);
    const auto df = probe_derivative(probe);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      worst = std::max(worst,
                       std::abs(df[i] + std::exp(-grid.nodes()[i])));
    CHECK(worst < 5e-6);
  }
}
