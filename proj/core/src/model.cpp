#include "dicke/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

ModelParams::ModelParams(int n_qubits, double big_d, double alpha)
    : n_qubits_(n_qubits), big_d_(big_d), alpha_(alpha) {
  if (n_qubits < 1) {
    throw InvalidParameter("n_qubits must be >= 1, got " +
                           std::to_string(n_qubits));
  }
  if (!(big_d > 0.0) || !std::isfinite(big_d)) {
    throw InvalidParameter("D must be positive and finite, got " +
                           std::to_string(big_d));
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidParameter("alpha must be non-negative and finite, got " +
                           std::to_string(alpha));
  }
}

double ModelParams::big_l() const { return std::sqrt(2.0 * big_d_ * alpha_); }

double ModelParams::lam() const {
  return big_l() / (2.0 * std::numbers::sqrt2);
}

ModelParams from_physical(double omega, double delta, double lam, int n) {
  if (!(omega > 0.0)) throw InvalidParameter("omega must be positive");
  if (!(delta > 0.0)) throw InvalidParameter("delta must be positive");
  if (!(lam >= 0.0)) throw InvalidParameter("lambda must be non-negative");
  if (n < 1) throw InvalidParameter("n must be >= 1");
  return ModelParams(n, 2.0 * delta / omega, 2.0 * lam * lam / (omega * delta));
}

double critical_coupling(double omega, double delta) {
  return std::sqrt(0.5 * delta * omega);
}

double adiabatic_energy(const ModelParams& p, double q) {
  const double d = p.big_d();
  // L^2 q^2 / N = 2 D alpha q^2 / N
  return std::sqrt(d * d + 2.0 * d * p.alpha() * q * q / p.n_qubits());
}

double adiabatic_energy_slope(const ModelParams& p, double q) {
  const double l2n = 2.0 * p.big_d() * p.alpha() / p.n_qubits();
  return l2n * q / adiabatic_energy(p, q);
}

double adiabatic_energy_curvature(const ModelParams& p, double q) {
  const double l2n = 2.0 * p.big_d() * p.alpha() / p.n_qubits();
  const double e = adiabatic_energy(p, q);
  return l2n * p.big_d() * p.big_d() / (e * e * e);
}

double adiabatic_potential(const ModelParams& p, double q) {
  return 0.5 * (q * q - p.n_qubits() * adiabatic_energy(p, q));
}

double well_position(const ModelParams& p) {
  const double a = p.alpha();
  if (a <= 1.0) return 0.0;
  return std::sqrt(p.n_qubits() * p.big_d() * (a * a - 1.0) / (2.0 * a));
}

std::vector<double> well_minima(const ModelParams& p) {
  if (p.alpha() <= 1.0) return {0.0};
  const double qm = well_position(p);
  return {-qm, qm};
}

double potential_minimum(const ModelParams& p) {
  const double n_delta = p.n_qubits() * p.delta();
  const double a = p.alpha();
  if (a <= 1.0) return -n_delta;
  return -0.5 * n_delta * (a + 1.0 / a);
}

double well_curvature(const ModelParams& p) {
  const double a = p.alpha();
  return a <= 1.0 ? 1.0 - a : 1.0 - 1.0 / (a * a);
}

double thermo_sx(double alpha) {
  if (!(alpha >= 0.0)) throw InvalidParameter("alpha must be non-negative");
  return alpha <= 1.0 ? -1.0 : -1.0 / alpha;
}

double thermo_berry(double alpha) {
  if (!(alpha >= 0.0)) throw InvalidParameter("alpha must be non-negative");
  return alpha <= 1.0 ? 0.0 : std::numbers::pi * (1.0 - 1.0 / alpha);
}

}  // namespace dicke
