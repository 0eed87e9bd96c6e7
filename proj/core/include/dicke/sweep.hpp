#pragma once

#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "dicke/berryphase.hpp"
#include "dicke/record.hpp"
#include "dicke/scaling.hpp"

namespace dicke {

// Runs task(i) for i in [0, count) on up to `workers` threads and returns
// the results in index order. The first exception thrown by any task is
// rethrown after all workers have joined.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned workers,
                            const std::function<T(std::size_t)>& task);

// Solves one (N, D, alpha) point and fills a record, including timing.
SweepRecord compute_record(const ModelParams& p, const BerryOptions& opts = {});

// The N -> infinity row for alpha (n_qubits = 0).
SweepRecord limit_record(double big_d, double alpha);

struct SweepConfig {
  double big_d = 10.0;
  std::vector<int> n_list;
  std::vector<double> alphas;
  unsigned workers = 1;
  BerryOptions berry{};
};

// One record per (N, alpha) plus limit rows with n_qubits = 0, sorted by
// (N, alpha). Throws UsageError for an empty N or alpha list.
std::vector<SweepRecord> sweep_alpha(const SweepConfig& config);

struct DerivativeRow {
  int n_qubits;
  double alpha;
  double gamma_per_n;
  double dgamma_dalpha;
};

// Groups a sorted sweep by N and differentiates each group.
std::vector<DerivativeRow> derivative_table(
    const std::vector<SweepRecord>& records);
void write_derivative_csv(std::ostream& out,
                          const std::vector<DerivativeRow>& rows);

struct ScalingConfig {
  double big_d = 10.0;
  double alpha = 1.0;
  std::vector<int> n_list;
  unsigned workers = 1;
  BerryOptions berry{};
  QuarticOptions quartic{};
};

struct ScalingRow {
  SweepRecord record;
  double prediction_leading;
  double prediction_two_term;
};

struct ScalingReport {
  QuarticConstants constants;
  std::vector<ScalingRow> rows;
  PowerLawFit fit;
};

ScalingReport scaling_run(const ScalingConfig& config);
void write_scaling_csv(std::ostream& out, const ScalingReport& report);
std::string fit_summary(const ScalingReport& report);

struct OracleConfig {
  std::vector<int> n_list;
  std::vector<double> d_list;
  std::vector<double> alphas;
  int loop_steps = 2000;
  int start_n_max = 16;
  unsigned workers = 1;
  BerryOptions berry{};
};

struct OracleRow {
  int n_qubits;
  double big_d;
  double alpha;
  int n_max;
  double sx_per_n_bo;
  double sx_per_n_exact;
  double gamma_bo_mod;        // N pi (1 + <S_x>_BO / N) reduced to [0, 2 pi)
  double gamma_exact_mod;     // N pi + pi <S_x>_exact reduced to [0, 2 pi)
  double gamma_discrete;      // overlap product, NaN if refused
  double gap;
  double epsilon0_bo;
  double e0_exact;
};

// Exact-diagonalization comparison for small N (<= 8).
std::vector<OracleRow> oracle_compare(const OracleConfig& config);
void write_oracle_csv(std::ostream& out, const std::vector<OracleRow>& rows);

// x reduced to [0, 2 pi).
double wrap_two_pi(double x);

}  // namespace dicke

#include "dicke/sweep_impl.hpp"
