#ifndef TOALAB_SVG_HPP
#define TOALAB_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "toalab/errors.hpp"

namespace toalab {

struct SvgCurve {
  std::string label;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
};

namespace detail {

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// tick spacing of the form {1,2,5} * 10^k close to range/target
inline double nice_step(double range, int target) {
  const double raw = range / std::max(target, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  if (r < 1.5) return mag;
  if (r < 3.5) return 2.0 * mag;
  if (r < 7.5) return 5.0 * mag;
  return 10.0 * mag;
}

} // namespace detail

/// Renders a self-contained SVG line chart: axes with ticks, a legend, and
/// one <polyline> per curve. Carries no data beyond the curves themselves.
inline std::string render_line_chart(const std::string& title,
                                     const std::string& x_label,
                                     const std::string& y_label,
                                     const std::vector<SvgCurve>& curves,
                                     int width = 800, int height = 520) {
  if (curves.empty()) throw invalid_parameter("render_line_chart: no curves");

  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  bool first = true;
  for (const auto& c : curves) {
    if (c.x.size() != c.y.size())
      throw invalid_parameter("render_line_chart: x/y length mismatch");
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (first) {
        x_lo = x_hi = c.x[i];
        y_lo = y_hi = c.y[i];
        first = false;
      }
      x_lo = std::min(x_lo, c.x[i]);
      x_hi = std::max(x_hi, c.x[i]);
      y_lo = std::min(y_lo, c.y[i]);
      y_hi = std::max(y_hi, c.y[i]);
    }
  }
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) y_hi = y_lo + 1.0;

  const double ml = 70, mr = 25, mt = 45, mb = 55; // margins
  const double pw = width - ml - mr;
  const double ph = height - mt - mb;
  auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double y) { return mt + ph - (y - y_lo) / (y_hi - y_lo) * ph; };

  using detail::svg_num;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
     << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
     << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

  // axes
  os << "<line x1=\"" << svg_num(ml) << "\" y1=\"" << svg_num(mt + ph) << "\" x2=\""
     << svg_num(ml + pw) << "\" y2=\"" << svg_num(mt + ph)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << svg_num(ml) << "\" y1=\"" << svg_num(mt) << "\" x2=\""
     << svg_num(ml) << "\" y2=\"" << svg_num(mt + ph) << "\" stroke=\"black\"/>\n";

  const double xs = detail::nice_step(x_hi - x_lo, 8);
  for (double x = std::ceil(x_lo / xs) * xs; x <= x_hi + 1e-12 * xs; x += xs) {
    os << "<line x1=\"" << svg_num(px(x)) << "\" y1=\"" << svg_num(mt + ph)
       << "\" x2=\"" << svg_num(px(x)) << "\" y2=\"" << svg_num(mt + ph + 5)
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << svg_num(px(x)) << "\" y=\"" << svg_num(mt + ph + 20)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
       << svg_num(x) << "</text>\n";
  }
  const double ys = detail::nice_step(y_hi - y_lo, 6);
  for (double y = std::ceil(y_lo / ys) * ys; y <= y_hi + 1e-12 * ys; y += ys) {
    os << "<line x1=\"" << svg_num(ml - 5) << "\" y1=\"" << svg_num(py(y))
       << "\" x2=\"" << svg_num(ml) << "\" y2=\"" << svg_num(py(y))
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << svg_num(ml - 9) << "\" y=\"" << svg_num(py(y) + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
       << svg_num(y) << "</text>\n";
  }
  os << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << x_label << "</text>\n";
  os << "<text x=\"18\" y=\"" << mt + ph / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
     << "transform=\"rotate(-90 18 " << mt + ph / 2 << ")\">" << y_label
     << "</text>\n";

  // data
  for (const auto& c : curves) {
    os << "<polyline fill=\"none\" stroke=\"" << c.color
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (i) os << ' ';
      os << svg_num(px(c.x[i])) << ',' << svg_num(py(c.y[i]));
    }
    os << "\"/>\n";
  }

  // legend, top right of the plot area
  double ly = mt + 10;
  for (const auto& c : curves) {
    os << "<rect x=\"" << svg_num(ml + pw - 110) << "\" y=\"" << svg_num(ly - 5)
       << "\" width=\"22\" height=\"4\" fill=\"" << c.color << "\"/>\n";
    os << "<text x=\"" << svg_num(ml + pw - 82) << "\" y=\"" << svg_num(ly)
       << "\" font-family=\"sans-serif\" font-size=\"13\">" << c.label
       << "</text>\n";
    ly += 18;
  }

  os << "</svg>\n";
  return os.str();
}

inline void render_svg(const std::filesystem::path& file, const std::string& title,
                       const std::string& x_label, const std::string& y_label,
                       const std::vector<SvgCurve>& curves) {
  std::ofstream os(file, std::ios::binary);
  if (!os) throw io_error("cannot open for writing: " + file.string());
  os << render_line_chart(title, x_label, y_label, curves);
  if (!os) throw io_error("write failed: " + file.string());
}

} // namespace toalab

#endif
