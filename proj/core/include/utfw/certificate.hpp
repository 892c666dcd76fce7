#pragma once

#include <optional>
#include <vector>

#include "utfw/critical_charge.hpp"
#include "utfw/model_params.hpp"
#include "utfw/molecule.hpp"
#include "utfw/radial_grid.hpp"

// Closed-form molecular stability certificate.
//
// The TF coefficient is split as b^2 = b1^2 + b2^2 with b2 = 3 alpha z/(4a),
// so that z = 4 a b2 / (3 alpha) exactly. The b2 share absorbs the
// attraction near each nucleus through the modified uncertainty principle
// on the Voronoi ball B(R_j, D_j); the b1 share controls the remainder
// pointwise, giving
//
//   xi(rho) + U >= M * sum_j 1/D_j,
//   M = -(1/4) alpha^4 (3/(4 b1^2))^3 (3 pi z^4 + 64 pi a^4 b2^4 / 3)
//       + alpha z^2 / 8,
//
// whenever the split is admissible (b2 < b). M >= 0 certifies stability.

namespace utfw {

// Minimizer of t -> b1^2 t^{4/3} - alpha s t over t >= 0.
struct PointwiseMin {
  double rho_star = 0.0;
  double value = 0.0;
};
PointwiseMin xi1_pointwise_min(double s, double b1, double alpha);

// int_{B(0,d)} (2 a b2 / d)^4 = 64 pi a^4 b2^4 / (3 d)
double ball_integral(double a, double b2, double d);

// z^4 * int_{halfspace \ B(0,d)} |x|^{-4} = 3 pi z^4 / d
double exterior_bound(double z, double d);

double compute_M(double z, double b1, double b2, const ModelParams& p);

enum class CertificateRoute { Atomic, Molecular };
enum class CertificateVerdict { Certified, NotCertified, ChargeExceedsModelRange };

struct CertificateReport {
  CertificateRoute route = CertificateRoute::Molecular;
  CertificateVerdict verdict = CertificateVerdict::NotCertified;
  bool stable = false;
  double z_cert = 0.0;  // max_i z_i; all internal quantities use it
  double U = 0.0;       // alpha sum_{i<j} z_i z_j / |R_i - R_j|
  VoronoiInfo voronoi;
  double b2 = 0.0;           // 3 alpha z_cert / (4a)
  std::optional<double> b1;  // sqrt(b^2 - b2^2) when b2 < b
  bool z_condition_ok = false;  // z_cert <= 4 a b2 / (3 alpha)
  std::optional<double> M;
  std::vector<double> per_cell_ball;      // 64 pi a^4 b2^4 / (3 D_j)
  std::vector<double> per_cell_exterior;  // 3 pi z^4 / D_j
  double lieb_yau_rhs = 0.0;  // alpha (z^2/8) sum_j 1/D_j
  std::optional<double> energy_lower_bound;  // M sum_j 1/D_j
};

// K = 1 routes to the atomic total-charge test; K >= 2 runs the split
// certificate above. Throws std::domain_error on invalid configurations.
CertificateReport certify(const MoleculeConfig& config, const ModelParams& p);

// A radial profile translated to a center; its support is the ball of
// radius profile.grid.r_max() around the center.
struct PlacedBlob {
  RadialDensity profile;
  Vec3 center;
};

// Electrostatic inequality gap for the measure nu = sum of blobs:
//   (1/2) iint dnu dnu / |x-y| - int Phi dnu + U/alpha
//     - (z^2/8) sum_j 1/D_j  >= 0.
// Charges must all be equal; each blob must sit inside a single Voronoi
// cell and blob supports must be pairwise disjoint, so every cross term is
// exact by Newton's theorem. Violations throw std::domain_error.
double lieb_yau_gap(const MoleculeConfig& config,
                    const std::vector<PlacedBlob>& blobs,
                    double alpha = kDefaultAlpha);

}  // namespace utfw
