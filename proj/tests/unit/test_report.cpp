#include <doctest.h>

#include <sstream>

#include "cnfsat/report.hpp"

using namespace cnfsat;

namespace {
std::size_t occurrences(const std::string& hay, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

// Value of the points attribute of the polyline with the given class.
std::string points_of(const std::string& svg, std::string_view cls) {
  const auto at = svg.find("class=\"" + std::string(cls) + "\"");
  REQUIRE(at != std::string::npos);
  const auto start = svg.find("points=\"", at) + 8;
  return svg.substr(start, svg.find('"', start) - start);
}
}  // namespace

TEST_CASE("csv header and rows") {
  const std::vector<ExperimentPoint> pts{{0.02, 1.0, 0.94, 0.0, 1.5, 0.25, 100, 0},
                                         {0.2, 0.375, 0.1, 0.125, 12.0, 0.5, 100, 0}};
  CHECK(emit_csv(pts) ==
        "e,P_complete,P_walksat,unknown_complete,mean_rt_complete_ms,mean_rt_walksat_ms\n"
        "0.020000,1.000000,0.940000,0.000000,1.500000,0.250000\n"
        "0.200000,0.375000,0.100000,0.125000,12.000000,0.500000\n");
  std::ostringstream os;
  emit_csv(pts, os);
  CHECK(os.str() == emit_csv(pts));
}

TEST_CASE("csv of no points is the header alone") {
  CHECK(emit_csv(std::vector<ExperimentPoint>{}) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("csv sink failure") {
  std::ostringstream os;
  os.setstate(std::ios::badbit);
  CHECK_THROWS_AS(emit_csv(std::vector<ExperimentPoint>{}, os), IoError);
}

TEST_CASE("plot has both series, a legend and axis labels") {
  const std::vector<ExperimentPoint> pts{{0.02, 1.0, 0.9}, {0.1, 0.6, 0.3}, {0.2, 0.2, 0.0}};
  const auto svg = emit_plot_svg(pts);
  CHECK(svg.starts_with("<?xml"));
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(occurrences(svg, "<polyline") == 2);
  CHECK(occurrences(svg, "class=\"series-complete\"") == 1);
  CHECK(occurrences(svg, "class=\"series-walksat\"") == 1);
  CHECK(svg.find("<g class=\"legend\"") != std::string::npos);
  CHECK(svg.find(">e</text>") != std::string::npos);
  CHECK(svg.find(">P</text>") != std::string::npos);
  CHECK(svg.find("PL-Resolution") != std::string::npos);
  CHECK(svg.find("WalkSAT") != std::string::npos);
  CHECK(occurrences(points_of(svg, "series-complete"), ",") == 3);

  CHECK(emit_plot_svg(pts, "A<B").find("A&lt;B") != std::string::npos);
}

TEST_CASE("constant P = 1 sits on the top of the plot area") {
  const std::vector<ExperimentPoint> pts{{0.0, 1.0, 1.0}, {0.5, 1.0, 0.0}};
  const auto svg = emit_plot_svg(pts);
  CHECK(points_of(svg, "series-complete") == "70.00,50.00 600.00,50.00");
  CHECK(points_of(svg, "series-walksat") == "70.00,50.00 600.00,360.00");
}

TEST_CASE("single point is centred") {
  const std::vector<ExperimentPoint> pts{{0.1, 0.5, 0.5}};
  const auto svg = emit_plot_svg(pts);
  CHECK(points_of(svg, "series-complete") == "335.00,205.00");
}

TEST_CASE("empty plot input") {
  CHECK_THROWS_AS((void)emit_plot_svg(std::vector<ExperimentPoint>{}), EmptyInput);
}
