#ifndef APXPOLY_SUPPORT_HPP
#define APXPOLY_SUPPORT_HPP

#include <variant>

#include "apxpoly/lp.hpp"
#include "apxpoly/polyhedron.hpp"

namespace apxpoly {

bool is_nonempty(const HPolyhedron& p);

/** A point of p, when one exists. */
std::optional<RatVec> feasible_point(const HPolyhedron& p);

/**
 * Exact min over x in p of ||point - x||. Throws EmptyPolyhedron.
 * Zero exactly when the point satisfies every row of p.
 */
Rational point_distance(const RatVec& point, const HPolyhedron& p, Norm norm);

struct SupportFinite {
    Rational value;
    RatVec attains;
};

/** The direction is unbounded over the set along this recession ray. */
struct SupportInfinite {
    RatVec ray;  // recession ray with direction . ray > 0
};

using SupportOutcome = std::variant<SupportFinite, SupportInfinite>;

/** sup over p of direction . x, with an attaining point or a witness ray. */
SupportOutcome support_value(const HPolyhedron& p, const RatVec& direction);

/** Same sup over conv(points) + cone(rays); no solver needed. */
SupportOutcome support_value(const VPolyhedron& q, const RatVec& direction);

bool support_is_finite(const SupportOutcome& s);

/** Exact equality of support values (finite vs finite, or both infinite). */
bool support_equal(const SupportOutcome& a, const SupportOutcome& b);

}  // namespace apxpoly

#endif  // APXPOLY_SUPPORT_HPP
