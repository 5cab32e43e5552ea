#include "convexsym/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace csym {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  bool log;
  double lo;
  double hi;
  double map(double v) const {
    const double t = log ? std::log10(v) : v;
    return hi > lo ? (t - lo) / (hi - lo) : 0.5;
  }
};

Axis make_axis(const std::vector<double>& values, bool log) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : values) {
    const double t = log ? std::log10(v) : v;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  if (log) {
    lo = std::floor(lo);
    hi = std::ceil(hi);
    if (hi == lo) hi = lo + 1;
  } else if (hi == lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  return {log, lo, hi};
}

}  // namespace

std::string series_svg(const PropertyReport& series, const PlotOptions& opts) {
  if (series.series.empty()) throw InvalidInput("series '" + series.property + "' is empty");
  std::vector<double> xs, ys;
  for (const auto& p : series.series) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1])) throw InvalidInput("series has non-finite points");
    if ((opts.log_x && p[0] <= 0) || (opts.log_y && p[1] <= 0)) {
      throw InvalidInput("series has non-positive values on a log axis");
    }
    xs.push_back(p[0]);
    ys.push_back(p[1]);
  }
  const Axis ax = make_axis(xs, opts.log_x);
  const Axis ay = make_axis(ys, opts.log_y);
  const double left = 70, right = 20, top = 30, bottom = 50;
  const double w = opts.width - left - right;
  const double h = opts.height - top - bottom;
  auto px = [&](double x) { return left + w * ax.map(x); };
  auto py = [&](double y) { return top + h * (1.0 - ay.map(y)); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width << "\" height=\"" << opts.height
    << "\" viewBox=\"0 0 " << opts.width << ' ' << opts.height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << num(left + w / 2) << "\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" "
    << "font-size=\"14\">" << escape(series.property) << "</text>\n";
  s << "<g stroke=\"#999\" stroke-width=\"1\" fill=\"none\">\n";
  s << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
    << "\"/>\n</g>\n";

  s << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  const int ticks_x = opts.log_x ? static_cast<int>(ax.hi - ax.lo) : 5;
  for (int i = 0; i <= ticks_x; ++i) {
    const double t = ax.lo + (ax.hi - ax.lo) * i / ticks_x;
    const double v = opts.log_x ? std::pow(10.0, t) : t;
    s << "<text x=\"" << num(left + w * i / ticks_x) << "\" y=\"" << num(top + h + 16)
      << "\" text-anchor=\"middle\">" << label(v) << "</text>\n";
  }
  const int ticks_y = opts.log_y ? static_cast<int>(ay.hi - ay.lo) : 5;
  for (int i = 0; i <= ticks_y; ++i) {
    const double t = ay.lo + (ay.hi - ay.lo) * i / ticks_y;
    const double v = opts.log_y ? std::pow(10.0, t) : t;
    s << "<text x=\"" << num(left - 6) << "\" y=\"" << num(top + h * (1.0 - static_cast<double>(i) / ticks_y) + 4)
      << "\" text-anchor=\"end\">" << label(v) << "</text>\n";
  }
  s << "<text x=\"" << num(left + w / 2) << "\" y=\"" << num(opts.height - 10.0) << "\" text-anchor=\"middle\">"
    << escape(series.x_label) << (opts.log_x ? " (log)" : "") << "</text>\n";
  s << "<text x=\"14\" y=\"" << num(top + h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
    << num(top + h / 2) << ")\">" << escape(series.y_label) << (opts.log_y ? " (log)" : "") << "</text>\n";
  s << "</g>\n";

  s << "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << num(px(xs[i])) << ',' << num(py(ys[i]));
  s << "\"/>\n<g fill=\"#1f5fa8\">\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s << "<circle cx=\"" << num(px(xs[i])) << "\" cy=\"" << num(py(ys[i])) << "\" r=\"2\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace csym
