#pragma once

#include <span>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/record.hpp"
#include "dicke/schroedinger1d.hpp"

namespace dicke {

// Bloch angles of the single-qubit factor of the fast ground state,
//   |chi> = sin(beta/2)|up> - cos(beta/2) e^{i zeta}|down>,
// the lowest eigenvector of G.sigma with G = (D, a sin phi, a cos phi) and
// a = L q / sqrt N.
struct QubitBlochState {
  double beta;
  double zeta_qubit;
};

QubitBlochState qubit_state(const ModelParams& p, double q, double phi);

struct BerryResult {
  double gamma;        // radians, not reduced mod 2 pi
  double gamma_per_n;  // radians
  double sx_per_n;
  SpectralResult spectral;
};

struct BerryOptions {
  GridOptions grid{};
  RefineOptions refine{};
  int phi_nodes = 720;
};

// Orientation of the phi loop relative to the integrated connection. The
// connection integrates to -N pi (1 - D/E(q)) around the loop, so the
// direct route is multiplied by this sign to agree with
// gamma = N pi (1 + <S_x>/N).
inline constexpr double kLoopOrientation = -1.0;

// Ground state of the adiabatic potential for p, refined to convergence.
SpectralResult solve_adiabatic(const ModelParams& p,
                               const BerryOptions& opts = {});

// <S_x>/N = -integral psi^2 D / E(q) dq.
double sx_mean(const ModelParams& p, const WaveFunction& wf);

// gamma = N pi (1 + <S_x>/N) from a converged adiabatic ground state.
BerryResult berry_phase(const ModelParams& p, const BerryOptions& opts = {});
BerryResult berry_phase(const ModelParams& p, SpectralResult spectral);

// A(q, phi) = -(N D / 2E) a cos(phi) / (E - a cos(phi)).
double connection(const ModelParams& p, double q, double phi);

// Periodic trapezoid of A(q, .) over [0, 2 pi) with phi_nodes samples.
double phi_loop_integral(const ModelParams& p, double q, int phi_nodes = 720);

// Two-dimensional route: integral psi^2 times the phi loop integral, times
// kLoopOrientation.
double berry_phase_direct(const ModelParams& p, const WaveFunction& wf,
                          int phi_nodes = 720);
double berry_phase_direct(const ModelParams& p, const BerryOptions& opts = {});

// d(gamma/N)/d(alpha) over a uniformly spaced single-N sweep: central
// differences inside, one-sided at the ends. Throws InvalidParameter on
// mixed N, fewer than two points or non-uniform spacing.
std::vector<double> berry_derivative(std::span<const SweepRecord> sweep);

}  // namespace dicke
