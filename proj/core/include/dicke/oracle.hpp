#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstddef>
#include <span>
#include <vector>

#include "dicke/model.hpp"

namespace dicke {

// Truncated product basis |n> (x) |j = N/2, m>, n = 0..n_max, m = -N/2..N/2.
// Flat index n (N + 1) + (m + N/2).
class FockSpinBasis {
 public:
  FockSpinBasis(int n_max, int n_qubits);

  int n_max() const { return n_max_; }
  int n_qubits() const { return n_qubits_; }
  std::size_t spin_dimension() const { return n_qubits_ + 1; }
  std::size_t dimension() const {
    return static_cast<std::size_t>(n_max_ + 1) * spin_dimension();
  }
  std::size_t index(int n, int m_index) const {
    return static_cast<std::size_t>(n) * spin_dimension() + m_index;
  }

 private:
  int n_max_;
  int n_qubits_;
};

inline constexpr std::size_t kDefaultMaxDimension = 20000;

// J_x of spin N/2 in the S_z eigenbasis, m ascending. S_x = 2 J_x.
Eigen::MatrixXd spin_jx(int n_qubits);

// H = a^+a + Delta S_x + (lambda / sqrt N)(a^+ + a) S_z in units of omega.
// Throws InvalidParameter if the basis exceeds max_dimension.
Eigen::SparseMatrix<double> build_hamiltonian(
    const ModelParams& p, const FockSpinBasis& basis,
    std::size_t max_dimension = kDefaultMaxDimension);

struct GroundState {
  double energy;
  Eigen::VectorXd state;  // unit norm, largest-magnitude entry positive
  double gap;             // E1 - E0
  double residual;        // ||H v - E v||
};

struct GroundStateOptions {
  // Dense diagonalization up to this size, Lanczos above.
  std::size_t dense_limit = 3000;
  bool force_lanczos = false;
  double residual_tolerance = 1e-8;
};

GroundState ground_state(const Eigen::SparseMatrix<double>& h,
                         const GroundStateOptions& opts = {});

// <psi| S_x |psi> with S_x = 2 J_x.
double exact_sx(const Eigen::VectorXd& state, const FockSpinBasis& basis);

// Mean boson-cutoff occupation: weight of the n = n_max shell.
double top_fock_weight(const Eigen::VectorXd& state, const FockSpinBasis& basis);

// U(phi) = exp(-i (phi/2) S_x) = exp(-i phi J_x) on the spin factor.
Eigen::MatrixXcd spin_rotation(int n_qubits, double phi);

// psi_k = (1 (x) U(2 pi k / steps)) psi0 for k = 0..steps-1.
std::vector<Eigen::VectorXcd> rotated_loop(const Eigen::VectorXd& psi0,
                                           const FockSpinBasis& basis,
                                           int steps);

// gamma = -arg prod_k <psi_k | psi_{k+1}> with psi_K = psi_0, in [0, 2 pi).
// Invariant under psi_k -> e^{i theta_k} psi_k.
double overlap_berry_phase(std::span<const Eigen::VectorXcd> loop);

enum class LoopMode {
  kRotate,         // rotate the ground state of H
  kRediagonalize,  // diagonalize U H U^+ at every loop point
};

struct DiscreteBerry {
  double gamma;  // radians in [0, 2 pi)
  double gap;
  double sx;     // exact <S_x> of the unrotated ground state
};

struct DiscreteBerryOptions {
  LoopMode mode = LoopMode::kRotate;
  double min_gap = 1e-8;
  std::size_t max_dimension = kDefaultMaxDimension;
};

// Throws InvalidParameter for steps < 100 and NumericalError when the ground
// state is quasi-degenerate (gap below min_gap).
DiscreteBerry discrete_berry(const ModelParams& p, const FockSpinBasis& basis,
                             int steps, const DiscreteBerryOptions& opts = {});

struct FockConvergence {
  FockSpinBasis basis;
  double energy;
  int doublings;
};

// Doubles n_max from start_n_max until one more doubling changes E0 by less
// than energy_tolerance and the top shell carries less than weight_tolerance.
FockConvergence fock_convergence(const ModelParams& p, int start_n_max,
                                 std::size_t max_dimension = kDefaultMaxDimension,
                                 double energy_tolerance = 1e-9,
                                 double weight_tolerance = 1e-10);

}  // namespace dicke
