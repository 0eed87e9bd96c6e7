#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/schroedinger1d.hpp"

namespace dicke {

// Ground energy c0 and <x^2> = c1 of -d^2/dx^2 + x^4. These are the first
// two coefficients of e0(zeta) = c0 + c1 zeta + ... for the family
// -d^2/dx^2 + zeta x^2 + x^4.
struct QuarticConstants {
  double c0;
  double c1;
};

struct QuarticOptions {
  double x_max = 8.0;
  std::size_t initial_points = 4001;
  double tolerance = 1e-9;
};

// Ground state of -d^2/dx^2 + zeta x^2 + x^4.
SpectralResult solve_quartic(double zeta, const QuarticOptions& opts = {});

QuarticConstants quartic_constants(const QuarticOptions& opts = {});

// Scaled position x = s q with s = (alpha^2 / 2ND)^(1/6) and distance from
// criticality zeta = (2ND / alpha^2)^(2/3) (1 - alpha).
struct SymanzikMap {
  double scale_s;
  double zeta_scaling;
};

// Throws InvalidParameter for alpha == 0.
SymanzikMap symanzik_map(const ModelParams& p);

// A closed-form estimate and whether the inputs sit inside the window where
// the expansion is meant to be used. warning is empty when they do.
struct Estimate {
  double value;
  std::string warning;
};

// epsilon0 ~ [-ND + (alpha^2/2ND)^(1/3) (c0 + c1 zeta)] / 2. Warns for
// |zeta| > 2.
Estimate scaled_energy_prediction(const ModelParams& p,
                                  const QuarticConstants& qc);

// gamma/N at alpha = 1:
//   two_term = pi [2 c1 / (2ND)^(2/3) - 2 c0 / (2ND)^(4/3)]
//   leading  = pi  2 c1 / (2ND)^(2/3)
struct BerryPrediction {
  double two_term;
  double leading;
};
BerryPrediction finite_size_berry_prediction(const ModelParams& p,
                                             const QuarticConstants& qc);

// <S_x>/N at alpha = 1: -1 + 2 c1 / (2ND)^(2/3) - 2 c0 / (2ND)^(4/3).
double sx_finite_size_prediction(const ModelParams& p,
                                 const QuarticConstants& qc);

// Leading 1/N deviation of gamma/N from its N -> infinity value:
// pi alpha / (2ND) below the transition, -pi / (N D alpha^2) above.
// Warns for 0.5 < alpha < 2.
Estimate asymptotic_correction(const ModelParams& p);

struct PowerLawFit {
  double slope;
  double intercept;
  double residual;  // RMS of the log-space residuals
};

// Unweighted least squares of ln(value) against ln(N). Needs three or more
// points, all with N > 0 and value > 0.
PowerLawFit fit_critical_exponent(
    std::span<const std::pair<double, double>> points);

}  // namespace dicke
