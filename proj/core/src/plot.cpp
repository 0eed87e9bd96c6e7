#include "dicke/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>

#include "dicke/errors.hpp"

namespace dicke {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo;
  double hi;
  bool log;

  double map(double v) const {
    const double x = log ? std::log10(v) : v;
    return (x - lo) / (hi - lo);
  }
};

Axis make_axis(double lo, double hi, bool log) {
  if (log) {
    lo = std::floor(std::log10(lo));
    hi = std::ceil(std::log10(hi));
    if (hi <= lo) hi = lo + 1.0;
    return {lo, hi, true};
  }
  if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.02 * (hi - lo);
  return {lo - pad, hi + pad, false};
}

// 1-2-5 tick spacing giving roughly six ticks.
std::vector<double> linear_ticks(const Axis& a) {
  const double raw = (a.hi - a.lo) / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double f : {1.0, 2.0, 5.0, 10.0}) {
    step = f * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(a.lo / step) * step; t <= a.hi + 1e-12 * step;
       t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return ticks;
}

std::vector<double> ticks_for(const Axis& a) {
  if (!a.log) return linear_ticks(a);
  std::vector<double> ticks;
  for (double e = a.lo; e <= a.hi + 1e-9; e += 1.0) {
    ticks.push_back(std::pow(10.0, e));
  }
  return ticks;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_svg(std::ostream& out, const std::vector<Series>& series,
               const PlotSpec& spec) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double xlo = kInf, xhi = -kInf, ylo = kInf, yhi = -kInf;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (spec.log_x && x <= 0.0) continue;
      if (spec.log_y && y <= 0.0) continue;
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  }
  if (xlo > xhi) {
    xlo = spec.log_x ? 1.0 : 0.0;
    xhi = spec.log_x ? 10.0 : 1.0;
    ylo = spec.log_y ? 1.0 : 0.0;
    yhi = spec.log_y ? 10.0 : 1.0;
  }
  const Axis ax = make_axis(xlo, xhi, spec.log_x);
  const Axis ay = make_axis(ylo, yhi, spec.log_y);

  const double left = 80, right = 160, top = 40, bottom = 60;
  const double pw = spec.width - left - right;
  const double ph = spec.height - top - bottom;
  auto px = [&](double x) { return left + ax.map(x) * pw; };
  auto py = [&](double y) { return top + (1.0 - ay.map(y)) * ph; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
      << ' ' << spec.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" fill=\"white\"/>\n"
      << "<text x=\"" << coord(left + pw / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(spec.title) << "</text>\n";

  out << "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
  const auto xt = ticks_for(ax);
  const auto yt = ticks_for(ay);
  for (double t : xt) {
    out << "<line x1=\"" << coord(px(t)) << "\" y1=\"" << coord(top)
        << "\" x2=\"" << coord(px(t)) << "\" y2=\"" << coord(top + ph) << "\"/>\n";
  }
  for (double t : yt) {
    out << "<line x1=\"" << coord(left) << "\" y1=\"" << coord(py(t))
        << "\" x2=\"" << coord(left + pw) << "\" y2=\"" << coord(py(t)) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<rect x=\"" << coord(left) << "\" y=\"" << coord(top) << "\" width=\""
      << coord(pw) << "\" height=\"" << coord(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<g text-anchor=\"middle\">\n";
  for (double t : xt) {
    out << "<text x=\"" << coord(px(t)) << "\" y=\"" << coord(top + ph + 18)
        << "\">" << tick_label(t) << "</text>\n";
  }
  out << "</g>\n<g text-anchor=\"end\">\n";
  for (double t : yt) {
    out << "<text x=\"" << coord(left - 6) << "\" y=\"" << coord(py(t) + 4)
        << "\">" << tick_label(t) << "</text>\n";
  }
  out << "</g>\n";
  out << "<text x=\"" << coord(left + pw / 2) << "\" y=\""
      << coord(spec.height - 15) << "\" text-anchor=\"middle\">"
      << escape(spec.x_label) << "</text>\n";
  out << "<text x=\"20\" y=\"" << coord(top + ph / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << coord(top + ph / 2) << ")\">" << escape(spec.y_label) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const Series& s = series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"" << (s.dashed ? " stroke-dasharray=\"6 4\"" : "")
        << " points=\"";
    bool first = true;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if ((spec.log_x && x <= 0.0) || (spec.log_y && y <= 0.0)) continue;
      out << (first ? "" : " ") << coord(px(x)) << ',' << coord(py(y));
      first = false;
    }
    out << "\"/>\n";
    const double ly = top + 10 + 18.0 * static_cast<double>(i);
    out << "<line x1=\"" << coord(left + pw + 12) << "\" y1=\"" << coord(ly)
        << "\" x2=\"" << coord(left + pw + 36) << "\" y2=\"" << coord(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"1.5\""
        << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    out << "<text x=\"" << coord(left + pw + 42) << "\" y=\"" << coord(ly + 4)
        << "\">" << escape(s.label) << "</text>\n";
  }
  out << "</svg>\n";
}

void emit_svg(const std::vector<Series>& series, const PlotSpec& spec,
              const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  write_svg(f, series, spec);
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::vector<Series> alpha_series(const std::vector<SweepRecord>& records) {
  std::map<int, Series> by_n;
  for (const SweepRecord& r : records) {
    Series& s = by_n[r.n_qubits];
    s.points.emplace_back(r.alpha, r.gamma_per_n);
  }
  std::vector<Series> out;
  for (auto& [n, s] : by_n) {
    if (n == 0) continue;
    s.label = "N = " + std::to_string(n);
    out.push_back(std::move(s));
  }
  if (auto it = by_n.find(0); it != by_n.end()) {
    it->second.label = "N = inf";
    it->second.dashed = true;
    out.push_back(std::move(it->second));
  }
  return out;
}

}  // namespace dicke
