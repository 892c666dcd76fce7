#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "support/oracles.hpp"
#include "utfw/energy_terms.hpp"
#include "utfw/model_params.hpp"

using namespace utfw;

namespace {

constexpr double kPi = std::numbers::pi;

RadialDensity exp_density(const RadialGrid& g, double A = 1.0,
                          double s = 1.0) {
  return RadialDensity::from_function(
      g, [=](double r) { return A * std::exp(-r / s); });
}

// smooth compact bump on [lo, hi], zero outside
RadialDensity bump_density(const RadialGrid& g, double lo, double hi,
                           double A) {
  return RadialDensity::from_function(g, [=](double r) {
    if (r <= lo || r >= hi) return 0.0;
    const double t = 2.0 * (r - lo) / (hi - lo) - 1.0;  // in (-1, 1)
    return A * std::exp(-1.0 / (1.0 - t * t));
  });
}

}  // namespace

TEST_CASE("weizsacker term: constants vanish, closed form within 2e-3") {
  const auto p = params_from_lambda(0.2);
  const auto g = RadialGrid::log_spaced(2000, 50.0, 1e-6);
  // flat density: the stencil coefficients cancel only to rounding
  CHECK(weizsacker_term(
            RadialDensity::from_samples(g, std::vector<double>(g.size(), 0.7)),
            p) < 1e-20);

  // rho = e^{-3r}, rho^{1/3} = e^{-r}: a^2 4pi int e^{-2r} r^2 dr = a^2 pi
  const auto rho = RadialDensity::from_function(
      g, [](double r) { return std::exp(-3.0 * r); });
  CHECK(weizsacker_term(rho, p) ==
        doctest::Approx(p.a2() * kPi).epsilon(2e-3));
}

TEST_CASE("weizsacker term converges at second order") {
  const auto p = params_from_lambda(0.2);
  auto err = [&](std::size_t n) {
    const auto g = RadialGrid::log_spaced(n, 50.0, 1e-6);
    const auto rho = RadialDensity::from_function(
        g, [](double r) { return std::exp(-3.0 * r); });
    return std::abs(weizsacker_term(rho, p) - p.a2() * kPi);
  };
  const double e1 = err(2000);
  const double e2 = err(4000);
  CHECK(e2 < 0.5 * e1);  // doubling N at least halves the error
  CHECK(e2 > 0.05 * e1);
}

TEST_CASE("weizsacker term needs at least 3 nodes") {
  const auto p = params_from_lambda(0.2);
  const auto g = RadialGrid::from_nodes({1.0, 2.0});
  const auto rho =
      RadialDensity::from_samples(g, std::vector<double>{1.0, 0.5});
  CHECK_THROWS_AS(weizsacker_term(rho, p), std::invalid_argument);
}

TEST_CASE("thomas-fermi term: zero density, closed form, homogeneity") {
  const auto p = params_from_lambda(1.0 / 9.0);
  const auto g = RadialGrid::log_spaced(40000, 50.0, 1e-6);
  CHECK(tf_term(RadialDensity::from_samples(
                    g, std::vector<double>(g.size(), 0.0)),
                p) == 0.0);

  // int e^{-4r/3} r^2 dr = 2 (3/4)^3, so the term is b^2 8pi 27/64
  const auto rho = exp_density(g);
  const double expected = p.b2() * 8.0 * kPi * 27.0 / 64.0;
  CHECK(tf_term(rho, p) == doctest::Approx(expected).epsilon(1e-6));
  CHECK(tf_term(rho, p) ==
        doctest::Approx(24.601329622621583).epsilon(1e-6));  // frozen oracle

  const auto rho2 = exp_density(g, 2.0);
  CHECK(tf_term(rho2, p) ==
        doctest::Approx(std::pow(2.0, 4.0 / 3.0) * tf_term(rho, p))
            .epsilon(1e-14));
}

TEST_CASE("attraction term: zero charge, closed form, linearity") {
  const auto unit = params_custom(1.0, 1.0, 1.0);
  const auto g = RadialGrid::log_spaced(40000, 50.0, 1e-6);
  const auto rho = exp_density(g);
  CHECK(attraction_term_atomic(rho, 0.0, unit) == 0.0);
  // 4pi int e^{-r} r dr = 4pi
  CHECK(attraction_term_atomic(rho, 1.0, unit) ==
        doctest::Approx(4.0 * kPi).epsilon(1e-6));
  CHECK(attraction_term_atomic(rho, 2.0, unit) ==
        doctest::Approx(2.0 * attraction_term_atomic(rho, 1.0, unit))
            .epsilon(1e-15));
  CHECK_THROWS_AS(attraction_term_atomic(rho, -1.0, unit), std::domain_error);
}

TEST_CASE("hartree: uniform ball self-energy within 1e-6") {
  const auto p = params_from_lambda(0.2);
  const double R = 1.0, c = 1.0;
  const auto g = RadialGrid::log_spaced(40000, R, 1e-6);
  const auto rho =
      RadialDensity::from_samples(g, std::vector<double>(g.size(), c));
  const double Q = 4.0 * kPi / 3.0 * R * R * R * c;
  const double expected = 3.0 * p.alpha / 5.0 * Q * Q / R;
  CHECK(hartree_radial(rho, p) == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("hartree: exponential density, frozen oracle") {
  const auto unit = params_custom(1.0, 1.0, 1.0);
  const auto g = RadialGrid::log_spaced(40000, 50.0, 1e-6);
  // (1/2) iint e^{-x}e^{-y}/|x-y| = 10 pi^2
  CHECK(hartree_radial(exp_density(g), unit) ==
        doctest::Approx(98.696044010893586).epsilon(1e-6));
}

TEST_CASE("hartree: disjoint shells reduce to point-charge cross terms") {
  const auto unit = params_custom(1.0, 1.0, 1.0);
  const auto g = RadialGrid::log_spaced(20000, 2.0, 1e-6);
  const auto inner = bump_density(g, 0.10, 0.14, 1.0);
  const auto outer = bump_density(g, 1.00, 1.04, 1.0);
  std::vector<double> both(g.size());
  for (std::size_t i = 0; i < both.size(); ++i)
    both[i] = inner.values[i] + outer.values[i];
  const auto sum = RadialDensity::from_samples(g, std::move(both));

  const double cross = hartree_radial(sum, unit) -
                       hartree_radial(inner, unit) -
                       hartree_radial(outer, unit);
  // exact by the shell theorem: q_in q_out <1/r>_outer; the outer shell is
  // thin, so <1/r> is 1/1.02 up to (width/r)^2
  const double q_in = inner.total_charge();
  const double q_out = outer.total_charge();
  CHECK(cross == doctest::Approx(q_in * q_out / 1.02).epsilon(1e-3));

  // the sharper statement: <1/r> over the outer profile, exact to quadrature
  const auto& r = g.nodes();
  std::vector<double> over_r(g.size());
  for (std::size_t i = 0; i < over_r.size(); ++i)
    over_r[i] = outer.values[i] / r[i];
  const double mean_inv = integrate_radial(g, over_r);
  CHECK(cross == doctest::Approx(q_in * mean_inv).epsilon(1e-9));
}

TEST_CASE("hartree agrees with the brute-force double sum within 1e-5") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> amp(0.2, 2.0);
  std::uniform_real_distribution<double> scale(0.5, 2.5);
  const auto unit = params_custom(1.0, 1.0, 1.0);
  for (int k = 0; k < 5; ++k) {
    const auto g = RadialGrid::log_spaced(200, 12.0, 1e-4);
    const double a1 = amp(rng), s1 = scale(rng);
    const double a2 = amp(rng), s2 = scale(rng);
    const auto rho = RadialDensity::from_function(g, [&](double r) {
      return a1 * std::exp(-r / s1) + a2 * std::exp(-(r / s2) * (r / s2));
    });
    const double lib = hartree_radial(rho, unit);
    const double oracle = oracles::double_sum_repulsion(g.nodes(), rho.values);
    CHECK(lib == doctest::Approx(oracle).epsilon(1e-5));
  }
}

TEST_CASE("all four terms are nonnegative on random densities") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto p = params_from_lambda(0.2);
  const auto g = RadialGrid::log_spaced(300, 20.0, 1e-5);
  for (int k = 0; k < 10; ++k) {
    std::vector<double> v(g.size());
    for (auto& x : v) x = unit(rng);
    const auto rho = RadialDensity::from_samples(g, std::move(v));
    CHECK(weizsacker_term(rho, p) >= 0.0);
    CHECK(tf_term(rho, p) >= 0.0);
    CHECK(attraction_term_atomic(rho, 30.0, p) >= 0.0);
    CHECK(hartree_radial(rho, p) >= 0.0);
  }
}

TEST_CASE("each term changes by less than 1e-4 when N doubles") {
  const auto p = params_from_lambda(0.2);
  auto all_terms = [&](const RadialGrid& g) {
    const auto rho = exp_density(g, 0.8, 1.3);
    return std::vector<double>{
        weizsacker_term(rho, p), tf_term(rho, p),
        attraction_term_atomic(rho, 50.0, p), hartree_radial(rho, p)};
  };
  const auto coarse = all_terms(RadialGrid::log_spaced(2000, 50.0, 1e-6));
  const auto fine = all_terms(RadialGrid::log_spaced(4000, 50.0, 1e-6));
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    CHECK(std::abs(fine[i] - coarse[i]) <= 1e-4 * std::abs(coarse[i]));
  }
}

TEST_CASE("atomic energy: zero density, zero charge, structural sum") {
  const auto p = params_from_lambda(0.2);
  const auto g = RadialGrid::log_spaced(2000, 50.0, 1e-6);
  const auto zero =
      RadialDensity::from_samples(g, std::vector<double>(g.size(), 0.0));
  CHECK(atomic_energy(zero, 50.0, p) == 0.0);

  const auto rho = exp_density(g, 0.3, 0.9);
  CHECK(atomic_energy(rho, 0.0, p) >= 0.0);
  const double xi = atomic_energy(rho, 60.0, p);
  const double parts = weizsacker_term(rho, p) + tf_term(rho, p) -
                       attraction_term_atomic(rho, 60.0, p) +
                       hartree_radial(rho, p);
  CHECK(xi == parts);
}

TEST_CASE("below the stability edge sampled energies stay nonnegative") {
  // with z below 4ab/(3 alpha) the infimum is zero, so no sample may go
  // negative beyond quadrature noise
  const auto p = params_from_lambda(0.2);
  const double z = 70.0;  // edge is about 75.04
  const auto g = RadialGrid::log_spaced(4000, 100.0, 1e-8);
  for (double A : {0.01, 0.1, 1.0, 10.0}) {
    for (double s : {0.05, 0.3, 1.0, 4.0}) {
      const auto rho = exp_density(g, A, s);
      const double xi = atomic_energy(rho, z, p);
      CHECK(xi >= -1e-6 * std::max(1.0, tf_term(rho, p)));
    }
  }
}
