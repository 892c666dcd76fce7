#include "utfw/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace utfw {

namespace {

constexpr double kPi = std::numbers::pi;

void check_same_grid(const RadialGrid& a, const RadialGrid& b) {
  if (a.size() != b.size() || a.nodes() != b.nodes())
    throw std::invalid_argument("weight and probe grids must coincide");
}

bool log_uniform(const RadialGrid& grid) {
  const auto& r = grid.nodes();
  if (r.size() < 5) return false;
  const double q = r[1] / r[0];
  for (std::size_t i = 2; i < r.size(); ++i) {
    if (std::abs(r[i] / r[i - 1] - q) > 1e-9 * q) return false;
  }
  return true;
}

// natural cubic spline coefficients: second derivatives at the knots
std::vector<double> spline_second_derivs(const std::vector<double>& x,
                                         const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> m(n, 0.0), diag(n, 0.0), rhs(n, 0.0), off(n, 0.0);
  diag[0] = diag[n - 1] = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x[i] - x[i - 1];
    const double h1 = x[i + 1] - x[i];
    diag[i] = 2.0 * (h0 + h1);
    off[i] = h1;
    rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
  }
  // Thomas algorithm; sub-diagonal entry at row i is h0 = x[i]-x[i-1]
  std::vector<double> c(n, 0.0), d(n, 0.0);
  c[0] = 0.0;
  d[0] = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x[i] - x[i - 1];
    const double denom = diag[i] - h0 * c[i - 1];
    c[i] = off[i] / denom;
    d[i] = (rhs[i] - h0 * d[i - 1]) / denom;
  }
  m[n - 1] = 0.0;
  for (std::size_t i = n - 1; i-- > 1;) m[i] = d[i] - c[i] * m[i + 1];
  m[0] = 0.0;
  return m;
}

double spline_eval(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& m, double t) {
  std::size_t i = 0;
  while (i + 2 < x.size() && t > x[i + 1]) ++i;
  const double h = x[i + 1] - x[i];
  const double A = (x[i + 1] - t) / h;
  const double B = (t - x[i]) / h;
  return A * y[i] + B * y[i + 1] +
         ((A * A * A - A) * m[i] + (B * B * B - B) * m[i + 1]) * h * h / 6.0;
}

}  // namespace

BallProbe BallProbe::from_samples(RadialGrid grid, std::vector<double> f) {
  if (f.size() != grid.size())
    throw std::invalid_argument("sample count does not match grid");
  for (double v : f) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::domain_error("probe samples must be finite and nonnegative");
  }
  const double R = grid.r_max();
  return BallProbe{R, std::move(grid), std::move(f)};
}

WeightFn coulomb_weight(const RadialGrid& grid) {
  const double R = grid.r_max();
  const auto& r = grid.nodes();
  std::vector<double> u(r.size()), up(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    u[i] = 0.5 * (1.0 / r[i] - 1.0 / R);
    up[i] = -0.5 / (r[i] * r[i]);
  }
  u.back() = 0.0;
  return WeightFn{R, grid, std::move(u), std::move(up)};
}

double lemma_lhs(const WeightFn& u, const BallProbe& probe) {
  check_same_grid(u.grid, probe.grid);
  double uscale = 1.0;
  for (double v : u.u) uscale = std::max(uscale, std::abs(v));
  if (std::abs(u.u.back()) > 1e-10 * uscale)
    throw std::domain_error("weight must vanish at R");
  const auto& r = probe.grid.nodes();
  std::vector<double> g(r.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double f3 = probe.f[i] * probe.f[i] * probe.f[i];
    g[i] = (3.0 * u.u[i] + u.u_prime[i] * r[i]) * f3;
  }
  return integrate_radial(probe.grid, g);
}

double lemma_rhs(const WeightFn& u, const BallProbe& probe) {
  check_same_grid(u.grid, probe.grid);
  const auto df = probe_derivative(probe);
  const auto& r = probe.grid.nodes();
  std::vector<double> g1(r.size()), g2(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    g1[i] = df[i] * df[i];
    const double f2 = probe.f[i] * probe.f[i];
    g2[i] = u.u[i] * u.u[i] * r[i] * r[i] * f2 * f2;
  }
  return 3.0 * std::sqrt(integrate_radial(probe.grid, g1)) *
         std::sqrt(integrate_radial(probe.grid, g2));
}

double schwarz_ratio(const WeightFn& u, const BallProbe& probe) {
  const double rhs = lemma_rhs(u, probe);
  const double lhs = std::abs(lemma_lhs(u, probe));
  if (rhs == 0.0)
    return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return lhs / rhs;
}

BallProbe extremal_f(const WeightFn& u, double lam, double C) {
  const auto& r = u.grid.nodes();
  std::vector<double> f(r.size());
  // cumulative int_0^r s u(s) ds
  double acc = r[0] * (r[0] * u.u[0]);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) {
      acc += 0.5 * (r[i] - r[i - 1]) *
             (r[i - 1] * u.u[i - 1] + r[i] * u.u[i]);
    }
    const double denom = lam * acc + C;
    if (!(denom > 0.0))
      throw std::domain_error("extremal family denominator must be positive");
    f[i] = 1.0 / denom;
  }
  return BallProbe::from_samples(u.grid, std::move(f));
}

BallProbe coulomb_extremal(double lam, double C, const RadialGrid& grid) {
  const double R = grid.r_max();
  const auto& r = grid.nodes();
  std::vector<double> f(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double inner = 0.5 * (r[i] - r[i] * r[i] / (2.0 * R));
    const double denom = lam * inner + C;
    if (!(denom > 0.0))
      throw std::domain_error("extremal family denominator must be positive");
    f[i] = 1.0 / denom;
  }
  return BallProbe::from_samples(grid, std::move(f));
}

double mup_gap_coeff(const BallProbe& probe, double a, double b,
                     double coeff) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("mup_gap needs a > 0 and b > 0");
  const auto df = probe_derivative(probe);
  const auto& r = probe.grid.nodes();
  std::vector<double> gX(r.size()), gY(r.size()), gZ(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    gX[i] = df[i] * df[i];
    const double f2 = probe.f[i] * probe.f[i];
    gY[i] = f2 * f2;
    gZ[i] = (coeff / r[i] - 2.0 / probe.R) * f2 * probe.f[i];
  }
  const double X = integrate_radial(probe.grid, gX);
  const double Y = integrate_radial(probe.grid, gY);
  const double Z = integrate_radial(probe.grid, gZ);
  return a * a * X + b * b * Y - a * b * Z;
}

double mup_gap(const BallProbe& probe, double a, double b) {
  return mup_gap_coeff(probe, a, b, 4.0 / 3.0);
}

bool amgm_step_check(double X, double Y, double a, double b) {
  if (!(X >= 0.0) || !(Y >= 0.0))
    throw std::domain_error("amgm_step_check needs X, Y >= 0");
  const double lhs = a * a * X + b * b * Y;
  const double rhs = 2.0 * std::abs(a * b) * std::sqrt(X * Y);
  return lhs + 1e-12 * std::max(1.0, lhs) >= rhs;
}

std::vector<double> probe_derivative(const BallProbe& probe) {
  const auto& r = probe.grid.nodes();
  const std::size_t n = r.size();
  if (n < 5 || !log_uniform(probe.grid))
    return radial_derivative(probe.grid, probe.f);
  // df/dr = (df/dxi)/r on the uniform log variable xi = ln r
  const double h = std::log(r[n - 1] / r[0]) / double(n - 1);
  const auto& f = probe.f;
  std::vector<double> d(n);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) /
           (12.0 * h * r[i]);
  }
  d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] -
          3.0 * f[4]) /
         (12.0 * h * r[0]);
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) /
         (12.0 * h * r[1]);
  d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] +
              6.0 * f[n - 4] - f[n - 5]) /
             (12.0 * h * r[n - 2]);
  d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] -
              16.0 * f[n - 4] + 3.0 * f[n - 5]) /
             (12.0 * h * r[n - 1]);
  return d;
}

BallProbe random_spline_probe(const RadialGrid& grid, std::mt19937_64& rng) {
  const double R = grid.r_max();
  std::uniform_int_distribution<int> nknots(5, 10);
  std::uniform_real_distribution<double> val(0.2, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int k = nknots(rng);
  const auto nk = static_cast<std::size_t>(k);

  // knots at least R/20 apart so the probe stays resolvable on grids of a
  // few thousand nodes; values redrawn until the spline stays positive
  // (natural cubics through positive knots rarely undershoot)
  std::vector<double> kx(nk);
  for (int attempt = 0;; ++attempt) {
    kx.front() = 0.0;
    kx.back() = R;
    for (std::size_t i = 1; i + 1 < nk; ++i) kx[i] = R * unit(rng);
    std::sort(kx.begin(), kx.end());
    double gap = R;
    for (std::size_t i = 1; i < nk; ++i) gap = std::min(gap, kx[i] - kx[i - 1]);
    if (gap >= 0.05 * R || attempt >= 200) break;
  }

  const auto& r = grid.nodes();
  std::vector<double> ky(nk), f(r.size());
  for (int attempt = 0;; ++attempt) {
    for (auto& y : ky) y = val(rng);
    const auto m = spline_second_derivs(kx, ky);
    double fmin = ky.front();
    for (std::size_t i = 0; i < r.size(); ++i) {
      f[i] = spline_eval(kx, ky, m, std::min(r[i], R));
      fmin = std::min(fmin, f[i]);
    }
    if (fmin > 0.01) break;
    if (attempt >= 50) {
      for (auto& v : f) v = std::max(v, 0.0);
      break;
    }
  }
  return BallProbe::from_samples(grid, std::move(f));
}

std::optional<MupViolation> find_mup_coeff_violation(double delta, double a,
                                                     double b) {
  if (!(delta > 0.0)) throw std::domain_error("delta must be positive");
  const double coeff = 4.0 / 3.0 + delta;
  const auto grid = RadialGrid::log_spaced(10000, 1.0, 1e-8);
  for (double lam : {1e1, 1e2, 1e3, 1e4, 1e5, 1e6}) {
    const auto base = coulomb_extremal(lam, 1.0, grid);
    const auto df = probe_derivative(base);
    const auto& r = grid.nodes();
    std::vector<double> gX(r.size()), gY(r.size()), gZ(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      gX[i] = df[i] * df[i];
      const double f2 = base.f[i] * base.f[i];
      gY[i] = f2 * f2;
      gZ[i] = (coeff / r[i] - 2.0 / base.R) * f2 * base.f[i];
    }
    const double X = integrate_radial(grid, gX);
    const double Y = integrate_radial(grid, gY);
    const double Z = integrate_radial(grid, gZ);
    if (!(Z > 0.0) || Z * Z <= 4.0 * X * Y) continue;
    // amplitude minimizing the quadratic-in-t gap
    const double t = a * Z / (2.0 * b * Y);
    std::vector<double> scaled(base.f.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = t * base.f[i];
    auto witness = BallProbe::from_samples(grid, std::move(scaled));
    const double gap = mup_gap_coeff(witness, a, b, coeff);
    if (gap < 0.0)
      return MupViolation{std::move(witness), gap, coeff};
  }
  return std::nullopt;
}

}  // namespace utfw
