#pragma once

#include <vector>

namespace dicke {

// Dimensionless parameters of the adiabatic Dicke model.
//
// Energies are measured in units of the oscillator frequency (omega = 1).
// The coupling is carried as alpha = L^2 / (2 D); the physical qubit
// splitting and coupling are derived on demand.
class ModelParams {
 public:
  // Throws InvalidParameter unless n_qubits >= 1, big_d > 0, alpha >= 0.
  ModelParams(int n_qubits, double big_d, double alpha);

  int n_qubits() const { return n_qubits_; }
  double big_d() const { return big_d_; }
  double alpha() const { return alpha_; }

  // L = sqrt(2 D alpha)
  double big_l() const;
  // Delta = D / 2
  double delta() const { return 0.5 * big_d_; }
  // lambda = L / (2 sqrt 2)
  double lam() const;

 private:
  int n_qubits_;
  double big_d_;
  double alpha_;
};

// Builds parameters from the physical frequencies of the Hamiltonian
//   H = omega a^+a + Delta S_x + (lambda / sqrt N)(a^+ + a) S_z.
ModelParams from_physical(double omega, double delta, double lam, int n);

// Critical coupling lambda_c = sqrt(Delta omega / 2).
double critical_coupling(double omega, double delta);

// E(q) = sqrt(D^2 + L^2 q^2 / N); the qubit ground energy is -N E(q).
double adiabatic_energy(const ModelParams& p, double q);

// dE/dq and d2E/dq2, used for well curvature and tests.
double adiabatic_energy_slope(const ModelParams& p, double q);
double adiabatic_energy_curvature(const ModelParams& p, double q);

// V(q) = (q^2 - N E(q)) / 2.
double adiabatic_potential(const ModelParams& p, double q);

// Location of the potential minimum on q >= 0: zero for alpha <= 1,
// q_m = sqrt(N D (alpha^2 - 1) / (2 alpha)) otherwise.
double well_position(const ModelParams& p);

// {0} for alpha <= 1, {-q_m, +q_m} for alpha > 1.
std::vector<double> well_minima(const ModelParams& p);

// Closed-form minimum value of V: -N Delta for alpha <= 1 and
// -(N Delta / 2)(alpha + 1/alpha) above the transition.
double potential_minimum(const ModelParams& p);

// Second derivative of V at the minimum: 1 - alpha below and 1 - 1/alpha^2
// above the transition. Vanishes at alpha = 1.
double well_curvature(const ModelParams& p);

// N -> infinity limits of <S_x>/N and gamma/N.
double thermo_sx(double alpha);
double thermo_berry(double alpha);

}  // namespace dicke
