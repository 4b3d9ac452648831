#include "cnfsat/report.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

namespace cnfsat {

std::string emit_csv(std::span<const ExperimentPoint> points) {
  std::string out{kCsvHeader};
  out += '\n';
  for (const auto& p : points) {
    out += fmt::format("{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", p.e, p.p_complete,
                       p.p_walksat, p.unknown_complete, p.mean_runtime_complete_ms,
                       p.mean_runtime_walksat_ms);
  }
  return out;
}

void emit_csv(std::span<const ExperimentPoint> points, std::ostream& sink) {
  sink << emit_csv(points);
  sink.flush();
  if (!sink) throw IoError("failed to write CSV output");
}

namespace {

// Canvas geometry in SVG user units.
constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 600;
constexpr double kTop = 50;
constexpr double kBottom = 360;

std::string escape_xml(std::string_view s) {
  std::string out;
  for (const char c : s) {
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

struct Axes {
  double e_min;
  double e_max;

  [[nodiscard]] double x(double e) const {
    if (e_max <= e_min) return (kLeft + kRight) / 2;
    return kLeft + (e - e_min) / (e_max - e_min) * (kRight - kLeft);
  }
  [[nodiscard]] static double y(double p) {
    return kBottom - std::clamp(p, 0.0, 1.0) * (kBottom - kTop);
  }
};

template <typename Get>
std::string polyline_points(std::span<const ExperimentPoint> points, const Axes& axes, Get get) {
  std::string out;
  for (const auto& p : points) {
    if (!out.empty()) out += ' ';
    out += fmt::format("{:.2f},{:.2f}", axes.x(p.e), Axes::y(get(p)));
  }
  return out;
}

}  // namespace

std::string emit_plot_svg(std::span<const ExperimentPoint> points,
                          std::string_view complete_label) {
  if (points.empty()) throw EmptyInput("cannot plot an empty point list");
  const auto [lo, hi] = std::minmax_element(
      points.begin(), points.end(),
      [](const ExperimentPoint& a, const ExperimentPoint& b) { return a.e < b.e; });
  const Axes axes{lo->e, hi->e};

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\">\n",
      kWidth, kHeight);
  svg += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth, kHeight);
  svg += fmt::format(
      "<text x=\"{:.2f}\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">P versus e</text>\n",
      (kLeft + kRight) / 2);

  // Horizontal grid and y ticks at 0.0, 0.2, ..., 1.0.
  for (int k = 0; k <= 5; ++k) {
    const double p = k / 5.0;
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#dddddd\"/>\n",
        kLeft, Axes::y(p), kRight);
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\" font-size=\"12\">{:.1f}</text>\n",
        kLeft - 8, Axes::y(p) + 4, p);
  }
  for (const auto& p : points) {
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"black\"/>\n",
        axes.x(p.e), kBottom, kBottom + 5);
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" font-size=\"12\">{:.2f}</text>\n",
        axes.x(p.e), kBottom + 20, p.e);
  }
  svg += fmt::format(
      "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"black\"/>\n",
      kLeft, kBottom, kRight);
  svg += fmt::format(
      "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"black\"/>\n",
      kLeft, kTop, kBottom);
  svg += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" font-size=\"14\">e</text>\n",
      (kLeft + kRight) / 2, kBottom + 45);
  svg += fmt::format(
      "<text x=\"{0:.2f}\" y=\"{1:.2f}\" text-anchor=\"middle\" font-size=\"14\" "
      "transform=\"rotate(-90 {0:.2f} {1:.2f})\">P</text>\n",
      kLeft - 45, (kTop + kBottom) / 2);

  const std::string complete = escape_xml(complete_label);
  svg += fmt::format(
      "<polyline class=\"series-complete\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" "
      "points=\"{}\"><title>{}</title></polyline>\n",
      polyline_points(points, axes, [](const ExperimentPoint& p) { return p.p_complete; }),
      complete);
  svg += fmt::format(
      "<polyline class=\"series-walksat\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" "
      "stroke-dasharray=\"6 4\" points=\"{}\"><title>WalkSAT</title></polyline>\n",
      polyline_points(points, axes, [](const ExperimentPoint& p) { return p.p_walksat; }));

  // Legend, bottom-left of the plot area where P is usually low.
  const double lx = kLeft + 15;
  const double ly = kBottom - 45;
  svg += "<g class=\"legend\" font-size=\"12\">\n";
  svg += fmt::format(
      "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#1f77b4\" "
      "stroke-width=\"2\"/>\n<text x=\"{3:.2f}\" y=\"{4:.2f}\">{5}</text>\n",
      lx, ly, lx + 30, lx + 38, ly + 4, complete);
  svg += fmt::format(
      "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#d62728\" "
      "stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n<text x=\"{3:.2f}\" y=\"{4:.2f}\">WalkSAT</text>\n",
      lx, ly + 20, lx + 30, lx + 38, ly + 24);
  svg += "</g>\n</svg>\n";
  return svg;
}

void emit_plot_svg(std::span<const ExperimentPoint> points, std::ostream& sink,
                   std::string_view complete_label) {
  sink << emit_plot_svg(points, complete_label);
  sink.flush();
  if (!sink) throw IoError("failed to write SVG output");
}

}  // namespace cnfsat
