#pragma once

#include "utfw/model_params.hpp"
#include "utfw/radial_grid.hpp"

// The four terms of the atomic (single-center) energy
//
//   xi(rho) = a^2 int |grad rho^{1/3}|^2 + b^2 int rho^{4/3}
//             - alpha z int rho / |x| + D(rho, rho)
//
// evaluated for spherically symmetric rho on a radial grid.

namespace utfw {

// a^2 * 4pi int (d/dr rho^{1/3})^2 r^2 dr
double weizsacker_term(const RadialDensity& rho, const ModelParams& p);

// b^2 * 4pi int rho^{4/3} r^2 dr
double tf_term(const RadialDensity& rho, const ModelParams& p);

// alpha z * 4pi int rho(r) r dr; needs z >= 0
double attraction_term_atomic(const RadialDensity& rho, double z,
                              const ModelParams& p);

// (1/2) iint rho(x) rho(y) / |x-y|, no alpha. By Newton's theorem this is
// (1/2)(4pi)^2 int rho(r) r^2 [ (1/r) int_0^r rho s^2 ds
//                               + int_r^{rmax} rho s ds ] dr.
double radial_self_repulsion(const RadialDensity& rho);

// D(rho, rho) = alpha * radial_self_repulsion(rho)
double hartree_radial(const RadialDensity& rho, const ModelParams& p);

double atomic_energy(const RadialDensity& rho, double z,
                     const ModelParams& p);

}  // namespace utfw
