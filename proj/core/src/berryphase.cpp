#include "dicke/berryphase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {
namespace {

// a = L q / sqrt(N)
double field_amplitude(const ModelParams& p, double q) {
  return p.big_l() * q / std::sqrt(static_cast<double>(p.n_qubits()));
}

}  // namespace

QubitBlochState qubit_state(const ModelParams& p, double q, double phi) {
  const double a = field_amplitude(p, q);
  const double e = adiabatic_energy(p, q);
  const double c = std::clamp(a * std::cos(phi) / e, -1.0, 1.0);
  return {std::acos(c), std::atan(a * std::sin(phi) / p.big_d())};
}

SpectralResult solve_adiabatic(const ModelParams& p, const BerryOptions& opts) {
  RefineOptions refine = opts.refine;
  refine.tail_tolerance = opts.grid.tail_tolerance;
  return refine_until_converged(
      [&p](double q) { return adiabatic_potential(p, q); },
      build_grid(p, opts.grid), refine);
}

double sx_mean(const ModelParams& p, const WaveFunction& wf) {
  const double d = p.big_d();
  return -expectation([&](double q) { return d / adiabatic_energy(p, q); },
                      wf);
}

namespace {

// 1 + <S_x>/N = integral psi^2 (E - D)/E, with E - D = a^2 / (E + D) so that
// small values near alpha = 0 do not come from cancellation.
double polarization_deficit(const ModelParams& p, const WaveFunction& wf) {
  const double d = p.big_d();
  return expectation(
      [&](double q) {
        const double e = adiabatic_energy(p, q);
        const double a = field_amplitude(p, q);
        return a * a / ((e + d) * e);
      },
      wf);
}

}  // namespace

BerryResult berry_phase(const ModelParams& p, SpectralResult spectral) {
  const double sx = sx_mean(p, spectral.wavefunction);
  const double per_n =
      std::numbers::pi * polarization_deficit(p, spectral.wavefunction);
  return {p.n_qubits() * per_n, per_n, sx, std::move(spectral)};
}

BerryResult berry_phase(const ModelParams& p, const BerryOptions& opts) {
  return berry_phase(p, solve_adiabatic(p, opts));
}

double connection(const ModelParams& p, double q, double phi) {
  const double e = adiabatic_energy(p, q);
  const double ac = field_amplitude(p, q) * std::cos(phi);
  return -(p.n_qubits() * p.big_d() / (2.0 * e)) * ac / (e - ac);
}

double phi_loop_integral(const ModelParams& p, double q, int phi_nodes) {
  if (phi_nodes < 1) throw InvalidParameter("phi_nodes must be positive");
  const double step = 2.0 * std::numbers::pi / phi_nodes;
  double s = 0.0;
  for (int k = 0; k < phi_nodes; ++k) s += connection(p, q, k * step);
  return s * step;
}

double berry_phase_direct(const ModelParams& p, const WaveFunction& wf,
                          int phi_nodes) {
  return kLoopOrientation *
         expectation([&](double q) { return phi_loop_integral(p, q, phi_nodes); },
                     wf);
}

double berry_phase_direct(const ModelParams& p, const BerryOptions& opts) {
  const SpectralResult s = solve_adiabatic(p, opts);
  return berry_phase_direct(p, s.wavefunction, opts.phi_nodes);
}

std::vector<double> berry_derivative(std::span<const SweepRecord> sweep) {
  const std::size_t n = sweep.size();
  if (n < 2) throw InvalidParameter("derivative needs at least two points");
  const int nq = sweep.front().n_qubits;
  const double step = sweep[1].alpha - sweep[0].alpha;
  if (!(step > 0.0)) {
    throw InvalidParameter("alpha must increase along the sweep");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sweep[i].n_qubits != nq) {
      throw InvalidParameter("derivative sweep mixes N values");
    }
    if (i > 0) {
      const double d = sweep[i].alpha - sweep[i - 1].alpha;
      if (std::abs(d - step) > 1e-9 * std::max(1.0, std::abs(step))) {
        throw InvalidParameter("alpha spacing is not uniform at index " +
                               std::to_string(i));
      }
    }
  }
  std::vector<double> out(n);
  out[0] = (sweep[1].gamma_per_n - sweep[0].gamma_per_n) / step;
  out[n - 1] = (sweep[n - 1].gamma_per_n - sweep[n - 2].gamma_per_n) / step;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = (sweep[i + 1].gamma_per_n - sweep[i - 1].gamma_per_n) / (2.0 * step);
  }
  return out;
}

}  // namespace dicke
