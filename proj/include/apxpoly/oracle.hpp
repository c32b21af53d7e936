#ifndef APXPOLY_ORACLE_HPP
#define APXPOLY_ORACLE_HPP

#include <optional>
#include <utility>

#include "apxpoly/polyhedron.hpp"
#include "apxpoly/support.hpp"

namespace apxpoly {

enum class BodyKind { Parabola, Hyperbola, HPolyBacked };

/** Finiteness report for sup of a direction over an oracle body. No ray
 * certificate is possible here: a non-polyhedral body can be unbounded in a
 * direction without owning a recession ray for it. */
struct OracleSupport {
    bool finite = false;
    std::optional<Rational> exact;                    // set when the sup is rational
    std::optional<std::pair<Rational, Rational>> enclosure;  // [lo, hi] otherwise
};

/**
 * A closed convex set given by exact queries: membership of rational points,
 * the predicate dist(p, C) <= s for rational s, the recession cone, and
 * support finiteness. Built-in kinds are the two plane epigraphs
 *   parabola   y >= x^2
 *   hyperbola  y >= 0 and y^2 >= x^2 + 1,
 * plus a wrapper that answers all queries for an H-polyhedron through the
 * exact solver. The epigraph queries reduce to comparing one square root
 * against rationals, so every answer is exact.
 */
class ConvexBodyOracle {
  public:
    static ConvexBodyOracle parabola();
    static ConvexBodyOracle hyperbola();
    static ConvexBodyOracle from_hpolyhedron(HPolyhedron p);

    BodyKind kind() const { return kind_; }
    std::size_t ambient_dim() const;
    bool is_epigraph() const { return kind_ != BodyKind::HPolyBacked; }

    bool contains(const RatVec& point) const;
    bool distance_leq(const RatVec& point, const Rational& s, Norm norm) const;

    /** Certified dist(point, C) enclosure of width <= tol, by bisecting the
     * exact predicate. first = largest refuted s (so dist > first whenever
     * first > 0), second = smallest confirmed s. */
    std::pair<Rational, Rational> distance_enclosure(const RatVec& point, const Rational& tol,
                                                     Norm norm) const;

    PolyhedralCone recession_cone() const;
    bool recession_contains(const RatVec& v) const;

    OracleSupport support(const RatVec& direction, const Rational& tol) const;

    /** A designated interior point (epigraph kinds). */
    RatVec interior_point() const;

    /** Frame (e1, e2): e1 spans/leads the recession cone, e2 the transverse
     * direction along which the body is unbounded (epigraph kinds). */
    std::pair<RatVec, RatVec> aligned_basis() const;

    /** Smallest-possible rational y with (x, y) in C, rounded up by < prec. */
    Rational boundary_inner_y(const Rational& x, const Rational& prec) const;

    /** Bound on how far the chord of two boundary points can sit above the
     * true boundary over [x0, x1]. */
    Rational sagitta_bound(const Rational& x0, const Rational& x1) const;

    /** |x| range where the boundary stays inside the sup-ball of radius r. */
    Rational x_window(const Rational& r) const;

    const HPolyhedron& backing() const;

  private:
    explicit ConvexBodyOracle(BodyKind kind) : kind_(kind) {}

    BodyKind kind_;
    std::optional<HPolyhedron> backing_;
};

/**
 * Inner polygonization of an epigraph body over [x_lo, x_hi] at the given
 * step: boundary samples inside C, with total outer error (chord sagitta
 * plus rounding) at most the returned bound.
 */
struct EpigraphPolygon {
    RatMat samples;       // ordered by x
    Rational error_bound; // sup over the window of dist(true boundary, chord)
};
EpigraphPolygon polygonize_epigraph(const ConvexBodyOracle& body, const Rational& x_lo,
                                    const Rational& x_hi, const Rational& step,
                                    const Rational& prec);

}  // namespace apxpoly

#endif  // APXPOLY_ORACLE_HPP
