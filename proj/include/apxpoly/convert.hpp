#ifndef APXPOLY_CONVERT_HPP
#define APXPOLY_CONVERT_HPP

#include "apxpoly/polyhedron.hpp"

namespace apxpoly {

/**
 * Representation conversion uses the double description method, whose output
 * can grow combinatorially with dimension; conversions above this cap are
 * refused rather than attempted.
 */
inline constexpr std::size_t kDimensionCap = 8;

struct ConeGenerators {
    RatMat lines;  // each line contributes both signs
    RatMat rays;
};

/** Extreme rays and lineality of {x : rows . x <= 0}. */
ConeGenerators cone_generators_from_rows(const RatMat& rows, std::size_t dim);

/** Half-space rows of cone(generators): {x : row . x <= 0 for all rows}. */
RatMat cone_rows_from_generators(const RatMat& generators, std::size_t dim);

/**
 * Exact generator representation of the same set. Lines of the input appear
 * as opposite ray pairs. Throws EmptyPolyhedron / DimensionCapExceeded.
 */
VPolyhedron vrep_of(const HPolyhedron& p, std::size_t dim_cap = kDimensionCap);

/** Exact half-space representation of conv(points) + cone(rays). */
HPolyhedron hrep_of(const VPolyhedron& q, std::size_t dim_cap = kDimensionCap);

}  // namespace apxpoly

#endif  // APXPOLY_CONVERT_HPP
