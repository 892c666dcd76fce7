#include "utfw/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "utfw/energy_terms.hpp"

namespace utfw {

namespace {
constexpr double kPi = std::numbers::pi;
}

PointwiseMin xi1_pointwise_min(double s, double b1, double alpha) {
  if (!(b1 > 0.0)) throw std::domain_error("b1 must be positive");
  if (!(s >= 0.0)) throw std::domain_error("s must be nonnegative");
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
  PointwiseMin out;
  const double c = 3.0 * alpha * s / (4.0 * b1 * b1);
  out.rho_star = c * c * c;
  const double q = 3.0 / (4.0 * b1 * b1);
  out.value = -0.25 * std::pow(alpha, 4) * q * q * q * std::pow(s, 4);
  return out;
}

double ball_integral(double a, double b2, double d) {
  if (!(a > 0.0) || !(b2 >= 0.0) || !(d > 0.0))
    throw std::domain_error("ball_integral needs a > 0, b2 >= 0, d > 0");
  const double ab2 = a * b2;
  return 64.0 * kPi * ab2 * ab2 * ab2 * ab2 / (3.0 * d);
}

double exterior_bound(double z, double d) {
  if (!(z >= 0.0) || !(d > 0.0))
    throw std::domain_error("exterior_bound needs z >= 0, d > 0");
  return 3.0 * kPi * z * z * z * z / d;
}

double compute_M(double z, double b1, double b2, const ModelParams& p) {
  if (!(b1 > 0.0)) throw std::domain_error("b1 must be positive");
  if (!(z >= 0.0) || !(b2 >= 0.0))
    throw std::domain_error("compute_M needs z >= 0 and b2 >= 0");
  const double q = 3.0 / (4.0 * b1 * b1);
  const double a4b24 = std::pow(p.a * b2, 4);
  const double bracket = 3.0 * kPi * std::pow(z, 4) +
                         64.0 * kPi * a4b24 / 3.0;
  return -0.25 * std::pow(p.alpha, 4) * q * q * q * bracket +
         p.alpha * z * z / 8.0;
}

CertificateReport certify(const MoleculeConfig& config, const ModelParams& p) {
  config.validate();
  CertificateReport rep;
  rep.z_cert = 0.0;
  for (const auto& n : config.nuclei) rep.z_cert = std::max(rep.z_cert, n.z);
  rep.b2 = 3.0 * p.alpha * rep.z_cert / (4.0 * p.a);
  rep.z_condition_ok =
      rep.z_cert <= 4.0 * p.a * rep.b2 / (3.0 * p.alpha) * (1.0 + 1e-12);
  rep.voronoi = half_distances(config);
  rep.U = nuclear_repulsion(config, p.alpha);

  if (config.size() == 1) {
    rep.route = CertificateRoute::Atomic;
    const double lower = atomic_bounds(p).lower;
    if (rep.b2 < p.b) {
      rep.b1 = std::sqrt(p.b2() - rep.b2 * rep.b2);
      rep.M = compute_M(rep.z_cert, *rep.b1, rep.b2, p);
    }
    if (rep.z_cert <= lower) {
      rep.verdict = CertificateVerdict::Certified;
    } else {
      rep.verdict = rep.b2 >= p.b
                        ? CertificateVerdict::ChargeExceedsModelRange
                        : CertificateVerdict::NotCertified;
    }
    rep.stable = rep.verdict == CertificateVerdict::Certified;
    return rep;
  }

  rep.route = CertificateRoute::Molecular;
  const double sum_inv = rep.voronoi.sum_inverse();
  rep.lieb_yau_rhs = p.alpha * rep.z_cert * rep.z_cert / 8.0 * sum_inv;
  if (rep.b2 >= p.b) {
    rep.verdict = CertificateVerdict::ChargeExceedsModelRange;
    rep.stable = false;
    return rep;
  }
  rep.b1 = std::sqrt(p.b2() - rep.b2 * rep.b2);
  rep.M = compute_M(rep.z_cert, *rep.b1, rep.b2, p);
  for (double d : rep.voronoi.half_distance) {
    rep.per_cell_ball.push_back(ball_integral(p.a, rep.b2, d));
    rep.per_cell_exterior.push_back(exterior_bound(rep.z_cert, d));
  }
  rep.energy_lower_bound = *rep.M * sum_inv;
  rep.verdict = (*rep.M >= 0.0 && rep.z_condition_ok)
                    ? CertificateVerdict::Certified
                    : CertificateVerdict::NotCertified;
  rep.stable = rep.verdict == CertificateVerdict::Certified;
  return rep;
}

double lieb_yau_gap(const MoleculeConfig& config,
                    const std::vector<PlacedBlob>& blobs, double alpha) {
  config.validate();
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
  const double z = config.nuclei.front().z;
  for (const auto& n : config.nuclei) {
    if (std::abs(n.z - z) > 1e-12 * std::max(1.0, std::abs(z)))
      throw std::domain_error("lieb_yau_gap needs equal charges");
  }

  const auto voronoi = half_distances(config);

  // preconditions: single-cell containment, pairwise disjoint supports
  for (const auto& blob : blobs) {
    const double rb = blob.profile.grid.r_max();
    const std::size_t j = cell_index(blob.center, config);
    const double dj = distance(blob.center, config.nuclei[j].position);
    for (std::size_t k = 0; k < config.size(); ++k) {
      if (k == j) continue;
      const double dk = distance(blob.center, config.nuclei[k].position);
      if (dk - dj < 2.0 * rb * (1.0 - 1e-12))
        throw std::domain_error("blob support straddles a Voronoi boundary");
    }
  }
  for (std::size_t i = 0; i < blobs.size(); ++i) {
    for (std::size_t k = i + 1; k < blobs.size(); ++k) {
      const double sep = distance(blobs[i].center, blobs[k].center);
      const double rr =
          blobs[i].profile.grid.r_max() + blobs[k].profile.grid.r_max();
      if (sep < rr * (1.0 - 1e-12))
        throw std::domain_error("blob supports overlap");
    }
  }

  double self = 0.0, cross = 0.0, attraction = 0.0;
  std::vector<double> mass(blobs.size());
  for (std::size_t i = 0; i < blobs.size(); ++i) {
    mass[i] = blobs[i].profile.total_charge();
    self += radial_self_repulsion(blobs[i].profile);
  }
  for (std::size_t i = 0; i < blobs.size(); ++i) {
    for (std::size_t k = i + 1; k < blobs.size(); ++k) {
      cross += mass[i] * mass[k] /
               distance(blobs[i].center, blobs[k].center);
    }
  }
  for (std::size_t i = 0; i < blobs.size(); ++i) {
    const std::size_t j = cell_index(blobs[i].center, config);
    for (std::size_t k = 0; k < config.size(); ++k) {
      if (k == j) continue;
      attraction +=
          z * mass[i] / distance(blobs[i].center, config.nuclei[k].position);
    }
  }

  const double repulsion = nuclear_repulsion(config, alpha) / alpha;
  const double rhs = z * z / 8.0 * voronoi.sum_inverse();
  return self + cross - attraction + repulsion - rhs;
}

}  // namespace utfw
