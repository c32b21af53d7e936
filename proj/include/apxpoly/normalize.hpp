#ifndef APXPOLY_NORMALIZE_HPP
#define APXPOLY_NORMALIZE_HPP

#include "apxpoly/polyhedron.hpp"

namespace apxpoly {

// Optional normalization pass. Redundant rows and generators are legal
// everywhere; these strip them when a minimal description is wanted.

/** Drops rows implied by the remaining ones (exact support programs). */
HPolyhedron minimal_hform(const HPolyhedron& p);

/** Drops points inside the hull of the rest and rays inside the cone of the
 * rest. At least one point always remains. */
VPolyhedron minimal_vform(const VPolyhedron& q);

}  // namespace apxpoly

#endif  // APXPOLY_NORMALIZE_HPP
