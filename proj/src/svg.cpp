#include "apxpoly/svg.hpp"

#include <cmath>
#include <cstdio>

#include "apxpoly/convert.hpp"
#include "apxpoly/geom2d.hpp"
#include "apxpoly/errors.hpp"

namespace apxpoly {

namespace {

constexpr double kCanvas = 640.0;

double approx(const Rational& q) {
    return static_cast<double>(num(q).convert_to<double>()) /
           static_cast<double>(den(q).convert_to<double>());
}

struct Mapper {
    double half_width;
    double sx(double x) const { return (x + half_width) / (2 * half_width) * kCanvas; }
    double sy(double y) const { return kCanvas - (y + half_width) / (2 * half_width) * kCanvas; }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void check_planar(const RatVec& v) {
    if (v.size() != 2) throw UnsupportedDimension();
}

}  // namespace

std::string render_svg(const Scene2D& scene) {
    for (const auto& p : scene.witness_points) check_planar(p);
    for (const auto& g : scene.cone_generators) check_planar(g);
    for (const auto& s : scene.segments) {
        check_planar(s.first);
        check_planar(s.second);
    }
    if (scene.body_hform && scene.body_hform->ambient_dim != 2) throw UnsupportedDimension();

    const Mapper m{scene.half_width};
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    out += "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";

    // axes
    out += "<line x1=\"0\" y1=\"" + fmt(m.sy(0)) + "\" x2=\"640\" y2=\"" + fmt(m.sy(0)) +
           "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + fmt(m.sx(0)) + "\" y1=\"0\" x2=\"" + fmt(m.sx(0)) +
           "\" y2=\"640\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    // cone shading as a fan from the origin
    if (!scene.cone_generators.empty()) {
        std::string pts = fmt(m.sx(0)) + "," + fmt(m.sy(0));
        for (const auto& g : scene.cone_generators) {
            const double gx = approx(g[0]), gy = approx(g[1]);
            const double len = std::max(std::abs(gx), std::abs(gy));
            if (len == 0) continue;
            const double scale = 2.0 * scene.half_width / len;
            pts += " " + fmt(m.sx(gx * scale)) + "," + fmt(m.sy(gy * scale));
        }
        out += "<polygon points=\"" + pts + "\" fill=\"#dce9f7\" stroke=\"none\"/>\n";
    }

    // body boundary
    if (scene.body_kind && *scene.body_kind != BodyKind::HPolyBacked) {
        const bool parabola = *scene.body_kind == BodyKind::Parabola;
        std::string path;
        const int samples = 160;
        for (int i = 0; i <= samples; ++i) {
            const double x = -scene.half_width + 2 * scene.half_width * i / samples;
            const double y = parabola ? x * x : std::sqrt(x * x + 1);
            path += (i == 0 ? "M" : " L");
            path += fmt(m.sx(x)) + " " + fmt(m.sy(y));
        }
        out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
    } else if (scene.body_hform) {
        const VPolyhedron v = vrep_of(*scene.body_hform);
        std::string pts;
        for (const auto& p : convex_hull_2d(v.points)) {
            if (!pts.empty()) pts += " ";
            pts += fmt(m.sx(approx(p[0]))) + "," + fmt(m.sy(approx(p[1])));
        }
        out += "<polygon points=\"" + pts +
               "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
    }

    for (const auto& s : scene.segments) {
        out += "<line x1=\"" + fmt(m.sx(approx(s.first[0]))) + "\" y1=\"" +
               fmt(m.sy(approx(s.first[1]))) + "\" x2=\"" + fmt(m.sx(approx(s.second[0]))) +
               "\" y2=\"" + fmt(m.sy(approx(s.second[1]))) +
               "\" stroke=\"#b03030\" stroke-width=\"1.5\"/>\n";
    }

    for (const auto& p : scene.witness_points) {
        out += "<circle cx=\"" + fmt(m.sx(approx(p[0]))) + "\" cy=\"" +
               fmt(m.sy(approx(p[1]))) + "\" r=\"4\" fill=\"#b03030\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace apxpoly
