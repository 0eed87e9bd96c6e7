#include "dicke/record.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "dicke/errors.hpp"

namespace dicke {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(sep, pos);
    out.push_back(line.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

template <typename T>
T parse_field(std::string_view s, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("line " + std::to_string(line_no) + ": cannot parse '" +
                     std::string(s) + "'");
  }
  return value;
}

}  // namespace

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "n_qubits", "big_d",   "alpha", "gamma_per_n",     "sx_per_n",
      "epsilon0", "q_max",   "m_points", "refinement_steps"};
  return cols;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out << (i ? "," : "") << cols[i];
  }
  out << '\n';
  for (const SweepRecord& r : records) {
    out << r.n_qubits << ',' << format_number(r.big_d) << ','
        << format_number(r.alpha) << ',' << format_number(r.gamma_per_n) << ','
        << format_number(r.sx_per_n) << ',' << format_number(r.epsilon0) << ','
        << format_number(r.q_max) << ',' << r.m_points << ','
        << r.refinement_steps << '\n';
  }
}

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  write_csv(f, records);
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

void emit_timing(const std::vector<SweepRecord>& records,
                 const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << "n_qubits,alpha,wall_time_ms\n";
  for (const SweepRecord& r : records) {
    f << r.n_qubits << ',' << format_number(r.alpha) << ','
      << format_number(r.wall_time_ms) << '\n';
  }
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::vector<SweepRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw UsageError("empty CSV input");
  const auto& cols = csv_columns();
  const auto header = split(line, ',');
  if (header.size() != cols.size()) throw UsageError("unexpected CSV header");
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (header[i] != cols[i]) {
      throw UsageError("unexpected CSV column '" + std::string(header[i]) + "'");
    }
  }
  std::vector<SweepRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != cols.size()) {
      throw UsageError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(cols.size()) + " fields");
    }
    SweepRecord r;
    r.n_qubits = parse_field<int>(f[0], line_no);
    r.big_d = parse_field<double>(f[1], line_no);
    r.alpha = parse_field<double>(f[2], line_no);
    r.gamma_per_n = parse_field<double>(f[3], line_no);
    r.sx_per_n = parse_field<double>(f[4], line_no);
    r.epsilon0 = parse_field<double>(f[5], line_no);
    r.q_max = parse_field<double>(f[6], line_no);
    r.m_points = parse_field<long long>(f[7], line_no);
    r.refinement_steps = parse_field<int>(f[8], line_no);
    out.push_back(r);
  }
  return out;
}

std::vector<SweepRecord> load_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  return read_csv(f);
}

}  // namespace dicke
