#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace dicke {

// Flat "key = value" text with '#' comments. Throws UsageError on a line
// without '=' or an empty key; later keys override earlier ones.
std::map<std::string, std::string> parse_config_text(std::istream& in);
std::map<std::string, std::string> load_config_file(const std::string& path);

// "start:stop:step" (stop included when it lies on the step lattice) or "a,b,c".
std::vector<double> parse_alpha_spec(const std::string& spec);
std::vector<double> parse_double_list(const std::string& spec);
std::vector<int> parse_int_list(const std::string& spec);

// Worker count: explicit value if > 0, else DICKE_BERRY_WORKERS, else the
// hardware concurrency (at least one).
unsigned resolve_workers(int requested);

}  // namespace dicke
