#ifndef APXPOLY_HAUSDORFF_HPP
#define APXPOLY_HAUSDORFF_HPP

#include <string>
#include <utility>
#include <variant>

#include "apxpoly/cones.hpp"
#include "apxpoly/oracle.hpp"
#include "apxpoly/polyhedron.hpp"

namespace apxpoly {

struct HausdorffFinite {
    Rational value;
};

/** witness is a recession direction of exactly one of the two sets. */
struct HausdorffInfinite {
    RatVec witness;
};

struct ProbeReport {
    std::vector<std::pair<Rational, Rational>> probes;  // (radius, gap estimate)
    std::string note;
};

struct HausdorffUndecided {
    ProbeReport report;
};

using HausdorffOutcome = std::variant<HausdorffFinite, HausdorffInfinite, HausdorffUndecided>;

bool hausdorff_is_finite(const HausdorffOutcome& o);
const Rational& hausdorff_value(const HausdorffOutcome& o);

/**
 * sup over p of dist(., q). Infinite exactly when some recession generator
 * of p leaves the recession cone of q; otherwise the sup is attained at a
 * generator point of p and is computed exactly.
 */
HausdorffOutcome directed_distance(const HPolyhedron& p, const HPolyhedron& q, Norm norm);

/** max of the two directed distances; Finite iff the recession cones agree. */
HausdorffOutcome hausdorff_distance(const HPolyhedron& p, const HPolyhedron& q, Norm norm);

/**
 * Smallest t > 0 (first crossing) with |dist(c0 + t v, body) - eps| <= tol.
 * For an H-polyhedron the crossing is exact: it is the exit parameter of the
 * ray from the inflated body, so dist equals eps exactly. For oracle bodies
 * the exact predicate dist <= s is bisected and the returned t satisfies
 * eps < dist <= eps + tol.
 * Requires c0 in the body, v outside its recession cone, eps > 0.
 */
Rational ray_level_search(const RatVec& c0, const RatVec& v, const Rational& eps,
                          const HPolyhedron& body, Norm norm, const Rational& tol);
Rational ray_level_search(const RatVec& c0, const RatVec& v, const Rational& eps,
                          const ConvexBodyOracle& body, Norm norm, const Rational& tol);

/**
 * A radius r and the truncation (a intersect rB) + cone, with the truncation
 * non-empty and within Hausdorff distance eps of a. Doubles r until the
 * bound holds, then bisects to within eps/4. Requires recession_cone(a) = p.
 */
struct Truncation {
    Rational radius;
    VPolyhedron body;
};
Truncation truncation_radius(const HPolyhedron& a, const PolyhedralCone& p, const Rational& eps,
                             Norm norm, std::size_t doubling_budget = 60);

/**
 * Exact evaluation of both sides of the offset-scaling bound
 *   d(P_offsets, P_0) <= d(P_0, P_1) * max(offsets)
 * for non-negative offsets. Returns (lhs, rhs).
 */
std::pair<Rational, Rational> scaling_bound_check(const RatMat& normals, const RatVec& offsets,
                                                  Norm norm);

}  // namespace apxpoly

#endif  // APXPOLY_HAUSDORFF_HPP
