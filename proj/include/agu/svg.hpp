#pragma once

#include <string>
#include <vector>

#include "agu/geometry.hpp"

namespace agu {

/// Figure description: sample and summary points render as red 1px
/// circles, centers as blue 4px circles, plus optional covering disks of
/// `disk_radius` (input units) around the centers.
struct SvgScene {
    std::vector<Point2D> samples;
    std::vector<Point2D> summary;
    std::vector<Point2D> centers;
    double disk_radius = 0.0;
};

/// Standalone 800x800 SVG; byte-identical output for identical scenes.
std::string render_svg(const SvgScene& scene);

void emit_svg(const SvgScene& scene, const std::string& path);

}  // namespace agu
