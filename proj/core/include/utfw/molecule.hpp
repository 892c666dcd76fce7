#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "utfw/model_params.hpp"

// Multi-center geometry: nuclear repulsion, Voronoi half-distances
//   D_j = (1/2) min_{k != j} |R_k - R_j|,
// the cell-wise potential Phi (all nuclei except the own-cell one) and the
// comparison potential W used by the stability certificate.

namespace utfw {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

struct Nucleus {
  double z = 0.0;  // charge, >= 0
  Vec3 position;
};

struct MoleculeConfig {
  std::vector<Nucleus> nuclei;

  std::size_t size() const { return nuclei.size(); }
  double total_charge() const;
  // Throws std::domain_error on empty input, negative charges or
  // coincident positions.
  void validate() const;
};

// alpha * sum_{i<j} z_i z_j / |R_i - R_j|
double nuclear_repulsion(const MoleculeConfig& config, double alpha);

// Half-distances to the nearest other nucleus; +infinity for K = 1.
struct VoronoiInfo {
  std::vector<double> half_distance;

  bool unbounded() const { return half_distance.size() == 1; }
  double sum_inverse() const;  // sum_j 1/D_j, 0 for K = 1
};

VoronoiInfo half_distances(const MoleculeConfig& config);

// Index of the nearest nucleus; ties go to the lowest index.
std::size_t cell_index(const Vec3& x, const MoleculeConfig& config);

// Phi(x) = sum_{i != j(x)} z_i / |x - R_i|, where j(x) is the cell of x.
// Throws std::domain_error if x coincides with a foreign nucleus.
double phi_at(const Vec3& x, const MoleculeConfig& config);

// W(x) = Phi(x) + z_j/|x - R_j| outside the ball |x - R_j| > D_j and
// Phi(x) + 2 a b2 / D_j inside it. K = 1 has no finite ball, so any call
// is a usage error (std::invalid_argument).
double w_at(const Vec3& x, const MoleculeConfig& config, double a, double b2);

}  // namespace utfw
