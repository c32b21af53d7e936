#ifndef APXPOLY_SVG_HPP
#define APXPOLY_SVG_HPP

#include <optional>
#include <string>

#include "apxpoly/oracle.hpp"

namespace apxpoly {

/**
 * A plane scene: one body (epigraph curve or polyhedron), optional cone
 * shading, witness points and their certificate segments. Coordinates are
 * rounded for display only.
 */
struct Scene2D {
    std::optional<BodyKind> body_kind;
    std::optional<HPolyhedron> body_hform;
    RatMat cone_generators;
    RatMat witness_points;
    std::vector<std::pair<RatVec, RatVec>> segments;
    double half_width = 8.0;  // world units shown on each side of the origin
};

/** Deterministic standalone SVG text for the scene. */
std::string render_svg(const Scene2D& scene);

}  // namespace apxpoly

#endif  // APXPOLY_SVG_HPP
