#pragma once

#include <optional>
#include <random>
#include <vector>

#include "utfw/radial_grid.hpp"

// Numerical laboratory for the modified uncertainty principle on a ball:
//
//   a^2 int_{B_R} |grad f|^2 + b^2 int_{B_R} f^4
//     >= a b int_{B_R} [ 4/(3|x|) - 2/R ] f^3,
//
// proved through the weighted Schwarz lemma
//
//   | int (3u + u' |x|) f^3 | <= 3 (int |grad f|^2)^{1/2}
//                                  (int u^2 |x|^2 f^4)^{1/2}
//
// for radial weights u with u(R) = 0, whose equality family is
// f = 1 / (lam int_0^r s u(s) ds + C).

namespace utfw {

struct BallProbe {
  double R = 0.0;
  RadialGrid grid;        // truncated at R
  std::vector<double> f;  // nonnegative samples

  static BallProbe from_samples(RadialGrid grid, std::vector<double> f);
};

struct WeightFn {
  double R = 0.0;
  RadialGrid grid;
  std::vector<double> u;
  std::vector<double> u_prime;
};

// u(r) = (1/2)(1/r - 1/R) on the given grid
WeightFn coulomb_weight(const RadialGrid& grid);

// 4pi int (3u + u' r) f^3 r^2 dr; requires u(R) = 0 (domain error) and the
// weight and probe to share the grid (usage error).
double lemma_lhs(const WeightFn& u, const BallProbe& probe);

// 3 sqrt(4pi int f'^2 r^2 dr) sqrt(4pi int u^2 r^2 f^4 r^2 dr)
double lemma_rhs(const WeightFn& u, const BallProbe& probe);

// |lhs| / rhs, with the 0/0 convention -> 0
double schwarz_ratio(const WeightFn& u, const BallProbe& probe);

// Equality family for a general weight; the inner integral int_0^r s u ds
// is accumulated by trapezoid. Throws if the denominator is not positive
// everywhere on the grid.
BallProbe extremal_f(const WeightFn& u, double lam, double C);

// Equality family for the canonical weight, with the closed-form inner
// integral (1/2)(r - r^2/(2R)).
BallProbe coulomb_extremal(double lam, double C, const RadialGrid& grid);

// LHS - RHS of the modified uncertainty principle (coefficient 4/3).
double mup_gap(const BallProbe& probe, double a, double b);

// Same with the 4/3 coefficient replaced by coeff.
double mup_gap_coeff(const BallProbe& probe, double a, double b, double coeff);

// a^2 X + b^2 Y >= 2ab sqrt(XY) for X, Y >= 0 (up to rounding slack)
bool amgm_step_check(double X, double Y, double a, double b);

// First derivative of the probe samples: fourth-order stencils in the log
// variable on log-spaced grids, second-order non-uniform otherwise.
std::vector<double> probe_derivative(const BallProbe& probe);

// Positive natural cubic spline through 5-10 random knots on [0, R],
// clamped below at 0 (no boundary condition on f at R).
BallProbe random_spline_probe(const RadialGrid& grid, std::mt19937_64& rng);

struct MupViolation {
  BallProbe probe;
  double gap = 0.0;    // mup_gap_coeff at the inflated coefficient, < 0
  double coeff = 0.0;  // 4/3 + delta
};

// Searches the scaled equality family for a probe violating the principle
// with coefficient 4/3 + delta. Exists for every delta > 0 since 4/3 is
// best possible; returns nullopt only if the scan fails to realize it.
std::optional<MupViolation> find_mup_coeff_violation(double delta, double a,
                                                     double b);

}  // namespace utfw
