#ifndef APXPOLY_CONES_HPP
#define APXPOLY_CONES_HPP

#include <optional>

#include "apxpoly/convert.hpp"
#include "apxpoly/polyhedron.hpp"

namespace apxpoly {

/**
 * Recession cone of a non-empty H-polyhedron: same normals, zero offsets.
 * Independent of the offsets. Throws EmptyPolyhedron.
 */
PolyhedralCone recession_cone(const HPolyhedron& p);

/** Exact basis of the largest linear subspace inside the recession cone,
 * i.e. of {x : normal . x = 0 for every row}. Throws EmptyPolyhedron. */
RatMat lineality_space(const HPolyhedron& p);

/**
 * Polar of a cone, swapping representations: generators g become rows
 * {u : u . g <= 0}; rows n become generators cone(n).
 */
PolyhedralCone polar_cone(const PolyhedralCone& k);

/** Appends the cone's generators to the rays of q. */
VPolyhedron minkowski_sum_cone(const VPolyhedron& q, const PolyhedralCone& k);

/** Generator list, converting from rows when needed (double description). */
RatMat cone_generator_list(const PolyhedralCone& k);

/** Row list, converting from generators when needed. */
RatMat cone_row_list(const PolyhedralCone& k);

bool cone_contains(const PolyhedralCone& k, const RatVec& x);

/** A generator of a that violates some row of b; nullopt when a is inside b. */
std::optional<RatVec> cone_subset_witness(const PolyhedralCone& a, const PolyhedralCone& b);

bool cone_subset(const PolyhedralCone& a, const PolyhedralCone& b);
bool cone_equal(const PolyhedralCone& a, const PolyhedralCone& b);

/** True when the cone is exactly the origin. */
bool cone_is_trivial(const PolyhedralCone& k);

}  // namespace apxpoly

#endif  // APXPOLY_CONES_HPP
