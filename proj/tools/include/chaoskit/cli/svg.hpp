#pragma once

#include <iosfwd>

#include "chaoskit/bifurcation.hpp"
#include "chaoskit/map_core.hpp"

namespace chaoskit::cli {

inline constexpr int kPlotWidth = 800;
inline constexpr int kPlotHeight = 600;

// Both documents place their geometry in data coordinates inside one
// <g class="data"> whose transform maps data space onto the plot area.

/// Map graph (<polyline class="map">), the diagonal (<line class="diagonal">),
/// and one <polyline class="cobweb-step"> per iterate:
/// (x_k, x_k) -> (x_k, x_{k+1}) -> (x_{k+1}, x_{k+1}).
/// Throws DomainError for steps == 0 or x0 outside (0, 1).
void write_cobweb_svg(std::ostream& out, const MapParams& params, double x0, std::size_t steps,
                      int width = kPlotWidth, int height = kPlotHeight);

/// One <line class="sample"> of zero length per attractor sample.
void write_bifurcation_svg(std::ostream& out, const BifurcationDiagram& diagram, int width = kPlotWidth,
                           int height = kPlotHeight);

}  // namespace chaoskit::cli
