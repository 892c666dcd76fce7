#pragma once

// Coupling constants of the ultrarelativistic TFW energy functional
//
//   xi(rho) = a^2 int |grad rho^{1/3}|^2 + b^2 int rho^{4/3}
//             - int V rho + D(rho, rho)
//
// with the gradient-correction weight a^2 = (3/8pi^2)(3pi^2)^{2/3} lambda
// and the kinetic coefficient b^2 = (3/4)(3pi^2)^{1/3} fixed by the
// ultrarelativistic Thomas-Fermi limit. lambda is the Weizsacker fraction,
// alpha the fine-structure constant.

namespace utfw {

inline constexpr double kDefaultAlpha = 1.0 / 137.0;

struct ModelParams {
  double lambda = 0.0;  // Weizsacker fraction, > 0
  double alpha = kDefaultAlpha;
  double a = 0.0;  // sqrt of gradient coefficient
  double b = 0.0;  // sqrt of TF coefficient

  double a2() const { return a * a; }
  double b2() const { return b * b; }
};

// a^2 / lambda, i.e. (3/8pi^2)(3pi^2)^{2/3}
double a2_per_lambda();

// (3/4)(3pi^2)^{1/3}, independent of lambda
double tf_b2();

// Standard construction from the Weizsacker fraction. Throws
// std::domain_error unless lambda > 0 and alpha > 0.
ModelParams params_from_lambda(double lambda, double alpha = kDefaultAlpha);

// Construction from explicit coefficients; lambda is back-computed from a.
// The TF coefficient b is not free in the model, so a custom b is accepted
// but kept as given. Throws std::domain_error unless a, b, alpha > 0.
ModelParams params_custom(double a, double b, double alpha);

const char* version();

}  // namespace utfw
