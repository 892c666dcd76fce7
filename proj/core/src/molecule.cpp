#include "utfw/molecule.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace utfw {

double MoleculeConfig::total_charge() const {
  double s = 0.0;
  for (const auto& n : nuclei) s += n.z;
  return s;
}

void MoleculeConfig::validate() const {
  if (nuclei.empty())
    throw std::domain_error("configuration needs at least one nucleus");
  for (std::size_t i = 0; i < nuclei.size(); ++i) {
    if (!(nuclei[i].z >= 0.0))
      throw std::domain_error("nucleus " + std::to_string(i) +
                              " has negative charge");
  }
  for (std::size_t i = 0; i < nuclei.size(); ++i) {
    for (std::size_t j = i + 1; j < nuclei.size(); ++j) {
      if (!(distance(nuclei[i].position, nuclei[j].position) > 0.0))
        throw std::domain_error("nuclei " + std::to_string(i) + " and " +
                                std::to_string(j) + " are coincident");
    }
  }
}

double nuclear_repulsion(const MoleculeConfig& config, double alpha) {
  config.validate();
  double s = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      s += config.nuclei[i].z * config.nuclei[j].z /
           distance(config.nuclei[i].position, config.nuclei[j].position);
    }
  }
  return alpha * s;
}

VoronoiInfo half_distances(const MoleculeConfig& config) {
  config.validate();
  VoronoiInfo out;
  out.half_distance.resize(config.size());
  for (std::size_t j = 0; j < config.size(); ++j) {
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < config.size(); ++k) {
      if (k == j) continue;
      dmin = std::min(
          dmin, distance(config.nuclei[j].position, config.nuclei[k].position));
    }
    out.half_distance[j] = 0.5 * dmin;
  }
  return out;
}

double VoronoiInfo::sum_inverse() const {
  double s = 0.0;
  for (double d : half_distance) {
    if (std::isfinite(d)) s += 1.0 / d;
  }
  return s;
}

std::size_t cell_index(const Vec3& x, const MoleculeConfig& config) {
  config.validate();
  std::size_t best = 0;
  double dbest = distance(x, config.nuclei[0].position);
  for (std::size_t j = 1; j < config.size(); ++j) {
    const double d = distance(x, config.nuclei[j].position);
    if (d < dbest) {
      dbest = d;
      best = j;
    }
  }
  return best;
}

double phi_at(const Vec3& x, const MoleculeConfig& config) {
  config.validate();
  const std::size_t j = cell_index(x, config);
  double s = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (i == j) continue;
    const double d = distance(x, config.nuclei[i].position);
    if (!(d > 0.0))
      throw std::domain_error("Phi is singular at a foreign nucleus");
    s += config.nuclei[i].z / d;
  }
  return s;
}

double w_at(const Vec3& x, const MoleculeConfig& config, double a, double b2) {
  config.validate();
  if (!(a > 0.0) || !(b2 >= 0.0))
    throw std::domain_error("w_at needs a > 0 and b2 >= 0");
  if (config.size() == 1)
    throw std::invalid_argument(
        "w_at is undefined for a single nucleus (no finite cell ball)");
  const std::size_t j = cell_index(x, config);
  const double dj = half_distances(config).half_distance[j];
  const double rj = distance(x, config.nuclei[j].position);
  const double phi = phi_at(x, config);
  if (rj > dj) return phi + config.nuclei[j].z / rj;
  return phi + 2.0 * a * b2 / dj;
}

}  // namespace utfw
