#include "dicke/scaling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {
namespace {

double two_nd(const ModelParams& p) {
  return 2.0 * p.n_qubits() * p.big_d();
}

}  // namespace

SpectralResult solve_quartic(double zeta, const QuarticOptions& opts) {
  RefineOptions refine;
  refine.tolerance = opts.tolerance;
  refine.solver.kinetic = 1.0;
  std::size_t m = opts.initial_points | 1;
  return refine_until_converged(
      [zeta](double x) {
        const double x2 = x * x;
        return zeta * x2 + x2 * x2;
      },
      QGrid(opts.x_max, m), refine);
}

QuarticConstants quartic_constants(const QuarticOptions& opts) {
  const SpectralResult s = solve_quartic(0.0, opts);
  const double c1 =
      expectation([](double x) { return x * x; }, s.wavefunction);
  return {s.energy, c1};
}

SymanzikMap symanzik_map(const ModelParams& p) {
  const double a = p.alpha();
  if (a == 0.0) {
    throw InvalidParameter("scaling map is degenerate at alpha = 0");
  }
  const double ratio = a * a / two_nd(p);
  return {std::pow(ratio, 1.0 / 6.0),
          std::pow(1.0 / ratio, 2.0 / 3.0) * (1.0 - a)};
}

Estimate scaled_energy_prediction(const ModelParams& p,
                                  const QuarticConstants& qc) {
  const SymanzikMap map = symanzik_map(p);
  const double a = p.alpha();
  const double e0 = qc.c0 + qc.c1 * map.zeta_scaling;
  const double value =
      0.5 * (-p.n_qubits() * p.big_d() + std::cbrt(a * a / two_nd(p)) * e0);
  Estimate out{value, {}};
  if (std::abs(map.zeta_scaling) > 2.0) {
    out.warning = "|zeta| = " + std::to_string(std::abs(map.zeta_scaling)) +
                  " exceeds 2; first-order series is unreliable";
  }
  return out;
}

BerryPrediction finite_size_berry_prediction(const ModelParams& p,
                                             const QuarticConstants& qc) {
  const double x = two_nd(p);
  const double t1 = 2.0 * qc.c1 / std::pow(x, 2.0 / 3.0);
  const double t2 = 2.0 * qc.c0 / std::pow(x, 4.0 / 3.0);
  return {std::numbers::pi * (t1 - t2), std::numbers::pi * t1};
}

double sx_finite_size_prediction(const ModelParams& p,
                                 const QuarticConstants& qc) {
  const double x = two_nd(p);
  return -1.0 + 2.0 * qc.c1 / std::pow(x, 2.0 / 3.0) -
         2.0 * qc.c0 / std::pow(x, 4.0 / 3.0);
}

Estimate asymptotic_correction(const ModelParams& p) {
  const double a = p.alpha();
  const double nd = p.n_qubits() * p.big_d();
  Estimate out{a < 1.0 ? std::numbers::pi * a / (2.0 * nd)
                       : -std::numbers::pi / (nd * a * a),
               {}};
  if (a > 0.5 && a < 2.0) {
    out.warning = "alpha = " + std::to_string(a) +
                  " is outside the asymptotic windows alpha <= 0.5, alpha >= 2";
  }
  return out;
}

PowerLawFit fit_critical_exponent(
    std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) {
    throw InvalidParameter("exponent fit needs at least three points");
  }
  const double n = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [size, value] : points) {
    if (!(size > 0.0) || !(value > 0.0)) {
      throw InvalidParameter("exponent fit needs positive N and values");
    }
    sx += std::log(size);
    sy += std::log(value);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [size, value] : points) {
    const double dx = std::log(size) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(value) - my);
  }
  if (!(sxx > 0.0)) throw InvalidParameter("exponent fit needs distinct N");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0.0;
  for (const auto& [size, value] : points) {
    const double r = std::log(value) - (intercept + slope * std::log(size));
    ss += r * r;
  }
  return {slope, intercept, std::sqrt(ss / n)};
}

}  // namespace dicke
