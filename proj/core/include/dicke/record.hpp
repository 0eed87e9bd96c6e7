#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dicke {

// One parameter point of a sweep. n_qubits == 0 marks the N -> infinity
// curve; its epsilon0 and grid columns are zero.
struct SweepRecord {
  int n_qubits = 0;
  double big_d = 0.0;
  double alpha = 0.0;
  double gamma_per_n = 0.0;
  double sx_per_n = 0.0;
  double epsilon0 = 0.0;
  double q_max = 0.0;
  long long m_points = 0;
  int refinement_steps = 0;
  double wall_time_ms = 0.0;
};

// Data columns, in file order. wall_time_ms is kept out of the data file.
const std::vector<std::string>& csv_columns();

// Header plus one row per record, 12 significant digits, '.' decimal point.
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);

// Timing sidecar: n_qubits,alpha,wall_time_ms.
void emit_timing(const std::vector<SweepRecord>& records,
                 const std::string& path);

// Parses a file written by write_csv. Throws IoError or UsageError.
std::vector<SweepRecord> read_csv(std::istream& in);
std::vector<SweepRecord> load_csv(const std::string& path);

// Locale-independent %.12g.
std::string format_number(double v);

}  // namespace dicke
