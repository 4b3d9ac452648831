#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "cnfsat/experiment.hpp"

namespace cnfsat {

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::string_view kCsvHeader =
    "e,P_complete,P_walksat,unknown_complete,mean_rt_complete_ms,mean_rt_walksat_ms";

/// Header plus one row per point, every number with six decimals.
[[nodiscard]] std::string emit_csv(std::span<const ExperimentPoint> points);
/// Throws IoError if the stream fails.
void emit_csv(std::span<const ExperimentPoint> points, std::ostream& sink);

/// Standalone SVG of P against e: one polyline per solver, y fixed to [0, 1].
/// Throws EmptyInput for an empty point list.
[[nodiscard]] std::string emit_plot_svg(std::span<const ExperimentPoint> points,
                                        std::string_view complete_label = "PL-Resolution");
void emit_plot_svg(std::span<const ExperimentPoint> points, std::ostream& sink,
                   std::string_view complete_label = "PL-Resolution");

}  // namespace cnfsat
