#include "addcomp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace addcomp {

namespace {

constexpr double kWidth = 720;
constexpr double kPanelHeight = 260;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 30;
constexpr double kGap = 60;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double log10_of(const BigInt& x) {
  // Digit count keeps this finite for values beyond double range.
  std::string digits = x.str();
  if (digits.size() <= 15) return std::log10(static_cast<double>(x));
  double lead = std::stod(digits.substr(0, 15));
  return std::log10(lead) + static_cast<double>(digits.size() - 15);
}

struct Series {
  std::string title;
  std::string colour;
  std::vector<std::pair<double, double>> points;
};

void panel(std::ostringstream& svg, const Series& s, double top, double x_lo, double x_hi) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kPanelHeight - 40;
  double y_lo = s.points.front().second;
  double y_hi = y_lo;
  for (const auto& [x, y] : s.points) {
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  if (y_hi - y_lo < 1e-9) {
    y_lo -= 1;
    y_hi += 1;
  }
  const double pad = 0.08 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return top + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h; };

  svg << "<text x=\"" << fmt(kLeft) << "\" y=\"" << fmt(top - 8) << "\" font-size=\"13\">" << s.title
      << "</text>\n";
  svg << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(plot_w) << "\" height=\""
      << fmt(plot_h) << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    double y = y_lo + (y_hi - y_lo) * i / 4.0;
    svg << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(py(y)) << "\" x2=\"" << fmt(kLeft + plot_w)
        << "\" y2=\"" << fmt(py(y)) << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(py(y) + 4)
        << "\" font-size=\"10\" text-anchor=\"end\">" << label(y) << "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(x_lo)); d <= static_cast<int>(std::floor(x_hi)); ++d) {
    svg << "<line x1=\"" << fmt(px(d)) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(px(d)) << "\" y2=\""
        << fmt(top + plot_h) << "\" stroke=\"#eee\"/>\n";
    svg << "<text x=\"" << fmt(px(d)) << "\" y=\"" << fmt(top + plot_h + 14)
        << "\" font-size=\"10\" text-anchor=\"middle\">1e" << d << "</text>\n";
  }
  svg << "<polyline fill=\"none\" stroke=\"" << s.colour << "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    svg << (i ? " " : "") << fmt(px(s.points[i].first)) << ',' << fmt(py(s.points[i].second));
  }
  svg << "\"/>\n";
  for (const auto& [x, y] : s.points) {
    svg << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"3\" fill=\"" << s.colour
        << "\"/>\n";
  }
}

}  // namespace

std::string criterion_svg(const std::vector<CriterionReport>& reports) {
  if (reports.empty()) throw Error(ErrorKind::precondition, "nothing to plot");
  Series r{"R(x) = (A(x)B(x) - x - a*(x)/A(x)) / (a*(x)/A(x)^2)", "#c0392b", {}};
  Series e{"A(x)B(x)/x", "#2c6fbb", {}};
  for (const auto& rep : reports) {
    double lx = log10_of(rep.x);
    if (rep.normalized) r.points.emplace_back(lx, to_double(*rep.normalized));
    e.points.emplace_back(lx, to_double(rep.exactness));
  }
  double x_lo = e.points.front().first;
  double x_hi = e.points.back().first;
  if (x_hi - x_lo < 1e-9) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  const double height = kTop + 2 * kPanelHeight + kGap;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(height)
      << "\" font-family=\"sans-serif\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!r.points.empty()) panel(svg, r, kTop, x_lo, x_hi);
  panel(svg, e, kTop + kPanelHeight + kGap, x_lo, x_hi);
  svg << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"" << fmt(height - 8)
      << "\" font-size=\"11\" text-anchor=\"middle\">x (log scale)</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace addcomp
