#include "dicke/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <thread>

#include "dicke/errors.hpp"

namespace dicke {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& spec) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = spec.find(',', pos);
    out.push_back(trim(spec.substr(pos, next - pos)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& s, const std::string& what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("malformed " + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

std::map<std::string, std::string> parse_config_text(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_no) +
                       ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw UsageError("config line " + std::to_string(line_no) + ": empty key");
    }
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open config '" + path + "'");
  return parse_config_text(f);
}

std::vector<double> parse_double_list(const std::string& spec) {
  std::vector<double> out;
  for (const auto& item : split_list(spec)) {
    out.push_back(parse_number<double>(item, "number"));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  for (const auto& item : split_list(spec)) {
    out.push_back(parse_number<int>(item, "integer"));
  }
  return out;
}

std::vector<double> parse_alpha_spec(const std::string& spec) {
  const std::string s = trim(spec);
  if (s.empty()) throw UsageError("empty alpha specification");
  if (s.find(':') == std::string::npos) {
    auto values = parse_double_list(s);
    for (double a : values) {
      if (!(a >= 0.0)) throw UsageError("alpha values must be >= 0");
    }
    return values;
  }
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(':', pos);
    parts.push_back(trim(s.substr(pos, next - pos)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.size() != 3) {
    throw UsageError("alpha range must be start:stop:step, got '" + s + "'");
  }
  const double start = parse_number<double>(parts[0], "alpha start");
  const double stop = parse_number<double>(parts[1], "alpha stop");
  const double step = parse_number<double>(parts[2], "alpha step");
  if (!(step > 0.0) || !(stop >= start) || !(start >= 0.0)) {
    throw UsageError("alpha range needs 0 <= start <= stop and step > 0");
  }
  const auto count =
      static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 1000000) throw UsageError("alpha range has too many points");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    out.push_back(start + static_cast<double>(i) * step);
  }
  return out;
}

unsigned resolve_workers(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("DICKE_BERRY_WORKERS")) {
    int v = 0;
    const std::string s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace dicke
