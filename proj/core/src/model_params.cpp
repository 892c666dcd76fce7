#include "utfw/model_params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace utfw {

namespace {
constexpr double kPi = std::numbers::pi;
}

double a2_per_lambda() {
  static const double c =
      3.0 / (8.0 * kPi * kPi) * std::pow(3.0 * kPi * kPi, 2.0 / 3.0);
  return c;
}

double tf_b2() {
  static const double c = 0.75 * std::cbrt(3.0 * kPi * kPi);
  return c;
}

ModelParams params_from_lambda(double lambda, double alpha) {
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
  ModelParams p;
  p.lambda = lambda;
  p.alpha = alpha;
  p.a = std::sqrt(a2_per_lambda() * lambda);
  p.b = std::sqrt(tf_b2());
  return p;
}

ModelParams params_custom(double a, double b, double alpha) {
  if (!(a > 0.0)) throw std::domain_error("a must be positive");
  if (!(b > 0.0)) throw std::domain_error("b must be positive");
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
  ModelParams p;
  p.lambda = a * a / a2_per_lambda();
  p.alpha = alpha;
  p.a = a;
  p.b = b;
  return p;
}

const char* version() { return "0.1.0"; }

}  // namespace utfw
