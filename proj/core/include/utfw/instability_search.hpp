#pragma once

#include <cstdint>

#include "utfw/energy_terms.hpp"
#include "utfw/model_params.hpp"
#include "utfw/radial_grid.hpp"

// Witness search for atomic instability. Above the upper critical charge
// the energy is unbounded below; the 1-homogeneous scaling
// rho_t(x) = t^3 rho(tx), xi(rho_t) = t xi(rho), means a single negative
// value already certifies inf xi = -infinity.

namespace utfw {

enum class TrialShape { Exponential, Power };

// Exponential: A exp(-r/s). Power: A (1 + r/s)^{-p}; p >= 4 keeps the
// density in L^{4/3} with square-integrable gradient of rho^{1/3} and
// finite self-repulsion.
struct TrialFamily {
  TrialShape shape = TrialShape::Exponential;
  double A = 1.0;
  double s = 1.0;
  double p = 4.0;  // Power only
};

RadialDensity trial_density(const TrialFamily& family, const RadialGrid& grid);

// |xi(rho_t) - t xi(rho)| / max(1, |xi(rho)|) with rho_t evaluated on the
// grid rescaled by 1/t, under which the identity is exact up to rounding.
double scaling_check(const RadialDensity& rho, double t, double z,
                     const ModelParams& p);

struct SearchOptions {
  std::size_t budget = 5000;  // max objective evaluations, >= 100
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  std::size_t grid_points = kDefaultGridPoints;
  double r_max = 100.0;  // power-family tails need more room than the
                         // global default of 50
};

enum class SearchVerdict { NegativeFound, NoneFound };

struct SearchResult {
  SearchVerdict verdict = SearchVerdict::NoneFound;
  double best_energy = 0.0;
  TrialFamily best;
  std::size_t evaluations = 0;
  // best re-evaluated on a grid with twice the nodes; a negative verdict
  // requires this to stay negative
  double reconfirmed_energy = 0.0;
  std::uint64_t seed = 0;
};

SearchResult search_negative(double z, const ModelParams& p,
                             const SearchOptions& options = {});

}  // namespace utfw
