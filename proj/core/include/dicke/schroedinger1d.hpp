#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dicke/errors.hpp"
#include "dicke/model.hpp"

namespace dicke {

// Uniform symmetric grid q_k = k h, k = -(m-1)/2 .. (m-1)/2, spanning
// [-q_max, q_max]. The node count is odd so q = 0 is always a node.
class QGrid {
 public:
  QGrid(double q_max, std::size_t m_points);

  double q_max() const { return q_max_; }
  std::size_t m_points() const { return m_points_; }
  double spacing() const { return spacing_; }
  std::size_t center() const { return (m_points_ - 1) / 2; }

  // Node i in [0, m_points). node(center()) == 0 and node(i) == -node(m-1-i)
  // hold exactly.
  double node(std::size_t i) const;

  // Same extent, h halved: 2 (m - 1) + 1 nodes.
  QGrid refined() const;
  // Same spacing, extent doubled.
  QGrid widened() const;

  std::vector<double> sample(const std::function<double(double)>& f) const;

 private:
  double q_max_;
  std::size_t m_points_;
  double spacing_;
};

// Real wavefunction sampled on a grid, normalized so that the trapezoidal
// integral of values^2 is one.
struct WaveFunction {
  QGrid grid;
  std::vector<double> values;
};

struct SpectralResult {
  double energy = 0.0;
  WaveFunction wavefunction;
  int refinement_steps = 0;
  // Largest |psi| on the two outermost nodes.
  double boundary_leak = 0.0;
  // Second eigenvalue minus the first; clamped at zero.
  double gap = 0.0;
  // True when the even-parity reduction was used.
  bool even_reduction = false;
};

struct GridOptions {
  std::size_t initial_points = 2001;
  double tail_tolerance = 1e-12;
  double safety = 8.0;
};

struct SolverOptions {
  // Coefficient of -d^2/dq^2. One half for the oscillator in units of omega,
  // one for the canonical quartic problem.
  double kinetic = 0.5;
  // Relative threshold for detecting an even potential.
  double parity_tolerance = 1e-12;
};

struct RefineOptions {
  // Convergence threshold on successive ground energies, scaled by
  // max(1, |energy|).
  double tolerance = 1e-9;
  double tail_tolerance = 1e-12;
  std::size_t max_points = std::size_t{1} << 22;
  int max_steps = 24;
  SolverOptions solver{};
};

// Grid sized to cover the ground state of the adiabatic potential of p.
QGrid build_grid(const ModelParams& p, const GridOptions& opts = {});

// Estimated spatial width of the ground state around the well minimum.
double ground_state_width(const ModelParams& p);

// Lowest eigenpair of -kinetic d^2/dq^2 + V on the grid with 3-point finite
// differences and Dirichlet walls just outside the end nodes. Even
// potentials are solved in the even-parity sector so that the symmetric
// ground state is isolated from its odd partner.
SpectralResult solve_ground(std::span<const double> potential,
                            const QGrid& grid, const SolverOptions& opts = {});

// Trapezoidal estimate of the integral of f(q) psi(q)^2.
double expectation(const std::function<double(double)>& f,
                   const WaveFunction& wf);

// Raised when refinement runs out of budget; carries the last result.
class RefinementError : public NumericalError {
 public:
  RefinementError(const std::string& what, SpectralResult best)
      : NumericalError(what), best_(std::move(best)) {}
  const SpectralResult& best() const { return best_; }

 private:
  SpectralResult best_;
};

using PotentialFn = std::function<double(double)>;

// Repeats solve_ground, widening the grid when the wavefunction leaks to the
// boundary and halving the spacing otherwise, until two successive energies
// agree within tolerance. Throws RefinementError if max_points or max_steps
// is exhausted.
SpectralResult refine_until_converged(const PotentialFn& potential,
                                      const QGrid& grid,
                                      const RefineOptions& opts = {});

}  // namespace dicke
