#include "utfw/critical_charge.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace utfw {

namespace {

constexpr double kPi = std::numbers::pi;

// canonical lambda values with quoted per-nucleus bounds
struct Quote {
  double lambda;
  int z;
};
constexpr Quote kMolecularQuotes[] = {
    {1.0 / 9.0, 55}, {0.2, 74}, {0.185, 71}};

}  // namespace

AtomicBounds atomic_bounds(const ModelParams& p) {
  AtomicBounds out;
  out.lower = 4.0 * p.a * p.b / (3.0 * p.alpha);
  out.gap = 7.0 * kPi * p.a * p.a * p.a / (6.0 * p.b * p.b * p.b);
  out.upper = out.lower + out.gap;
  return out;
}

bool total_charge_stable(double total_z, const ModelParams& p) {
  if (!(total_z >= 0.0)) throw std::domain_error("total charge must be >= 0");
  return total_z <= atomic_bounds(p).lower;
}

double split_condition_rhs(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
  const double a2 = alpha * alpha;
  return (16.0 / 9.0) / (2.0 * kPi * (4.0 * alpha + 9.0 * alpha * a2 * a2));
}

MolecularBound molecular_x_root(const ModelParams& p) {
  MolecularBound out;
  const double b4 = p.b2() * p.b2();
  out.rhs = (b4 / p.a2()) * split_condition_rhs(p.alpha);
  double lo = 1e-12, hi = 1.0 - 1e-12;
  const auto g = [&](double x) { return (1.0 - x) / (x * x * x) - out.rhs; };
  if (!(g(lo) > 0.0 && g(hi) < 0.0))
    throw std::domain_error("x equation has no sign change on (0, 1)");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  out.x_root = 0.5 * (lo + hi);
  out.z_max = atomic_bounds(p).lower * std::sqrt(1.0 - out.x_root);
  out.b1 = p.b * std::sqrt(out.x_root);
  out.b2 = p.b * std::sqrt(1.0 - out.x_root);
  return out;
}

bool split_condition(double b1, const ModelParams& p) {
  if (!(b1 > 0.0 && b1 < p.b))
    throw std::domain_error("b1 must lie strictly between 0 and b");
  const double b1sq = b1 * b1;
  const double lhs = p.a2() * (p.b2() - b1sq) / (b1sq * b1sq * b1sq);
  return lhs <= split_condition_rhs(p.alpha);
}

std::optional<PublishedComparison> published_molecular_quote(const ModelParams& p) {
  for (const auto& q : kMolecularQuotes) {
    if (std::abs(p.lambda - q.lambda) <= 1e-9 * q.lambda) {
      PublishedComparison out;
      out.lambda = q.lambda;
      out.z_max_computed = molecular_x_root(p).z_max;
      out.quoted = q.z;
      out.difference = double(q.z) - out.z_max_computed;
      out.flagged = std::abs(out.difference) > 1.0;
      return out;
    }
  }
  return std::nullopt;
}

std::vector<PublishedComparison> published_molecular_table(double alpha) {
  std::vector<PublishedComparison> rows;
  for (const auto& q : kMolecularQuotes) {
    rows.push_back(
        *published_molecular_quote(params_from_lambda(q.lambda, alpha)));
  }
  return rows;
}

}  // namespace utfw
