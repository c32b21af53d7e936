#ifndef APXPOLY_GEOM2D_HPP
#define APXPOLY_GEOM2D_HPP

#include "apxpoly/norm.hpp"
#include "apxpoly/polyhedron.hpp"

namespace apxpoly {

/** Counterclockwise convex hull, collinear points dropped. Exact. */
RatMat convex_hull_2d(const RatMat& points);

/** Exact distance from a point to the segment [a, b] under either norm. */
Rational dist_to_segment(const RatVec& p, const RatVec& a, const RatVec& b, Norm norm);

/**
 * The region conv(points) + cone{(0,1)}: x confined to the hull's range,
 * bounded below by the lower hull chain, unbounded upward. Membership and
 * distances are exact; distance queries prune edges by an x-window, so they
 * stay fast on long chains.
 */
class EpiRegion2D {
  public:
    explicit EpiRegion2D(const RatMat& points);

    bool contains(const RatVec& p) const;
    Rational distance(const RatVec& p, Norm norm) const;

    /** Lower boundary value; requires x within the hull range. */
    Rational lower_at(const Rational& x) const;

    const RatMat& lower_chain() const { return chain_; }
    const Rational& x_min() const { return x_min_; }
    const Rational& x_max() const { return x_max_; }

  private:
    RatMat chain_;  // lower hull, x strictly increasing
    Rational x_min_;
    Rational x_max_;
};

}  // namespace apxpoly

#endif  // APXPOLY_GEOM2D_HPP
