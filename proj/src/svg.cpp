#include "agu/svg.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace agu {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kPad = 20.0;

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    out += buf;
}

void append_circle(std::string& out, double cx, double cy, double r, const char* style) {
    out += "<circle cx=\"";
    append_number(out, cx);
    out += "\" cy=\"";
    append_number(out, cy);
    out += "\" r=\"";
    append_number(out, r);
    out += "\" ";
    out += style;
    out += " />\n";
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
    BoundingBox box;
    for (const auto& p : scene.samples) box.expand(p);
    for (const auto& p : scene.summary) box.expand(p);
    for (const auto& p : scene.centers) box.expand(p);
    if (box.empty) box.expand(Point2D{0.0, 0.0});

    const double side = box.longer_side() > 0.0 ? box.longer_side() : 1.0;
    const double scale = (kCanvas - 2.0 * kPad) / side;
    const auto map_x = [&](double x) { return kPad + (x - box.min_x) * scale; };
    // SVG y grows downward
    const auto map_y = [&](double y) { return kCanvas - kPad - (y - box.min_y) * scale; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    for (const auto& p : scene.samples)
        append_circle(out, map_x(p.x), map_y(p.y), 1.0, "fill=\"red\"");
    for (const auto& p : scene.summary)
        append_circle(out, map_x(p.x), map_y(p.y), 1.0, "fill=\"red\"");
    if (scene.disk_radius > 0.0) {
        for (const auto& p : scene.centers)
            append_circle(out, map_x(p.x), map_y(p.y), scene.disk_radius * scale,
                          "fill=\"none\" stroke=\"blue\" stroke-width=\"0.5\"");
    }
    for (const auto& p : scene.centers)
        append_circle(out, map_x(p.x), map_y(p.y), 4.0, "fill=\"blue\"");
    out += "</svg>\n";
    return out;
}

void emit_svg(const SvgScene& scene, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_svg(scene);
}

}  // namespace agu
