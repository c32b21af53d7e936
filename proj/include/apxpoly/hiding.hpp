#ifndef APXPOLY_HIDING_HPP
#define APXPOLY_HIDING_HPP

#include <optional>

#include "apxpoly/geom2d.hpp"
#include "apxpoly/hausdorff.hpp"
#include "apxpoly/oracle.hpp"
#include "apxpoly/quotient.hpp"

namespace apxpoly {

/** A certified crossing of the segment [points[i], points[j]] with the body:
 * point = points[i] + t * (points[j] - points[i]) is a body member. */
struct PairCertificate {
    std::size_t i = 0;
    std::size_t j = 0;
    Rational t;
    RatVec point;
};

/**
 * A finite hidden set with machine-checkable evidence: every point is
 * outside the body with the stated distance lower bound, and every pair of
 * points is separated by a certified crossing.
 */
struct HidingWitness {
    RatMat points;
    BodyKind body_kind = BodyKind::HPolyBacked;
    std::optional<HPolyhedron> body_hform;  // present for half-space bodies
    RatVec distance_lower_bounds;
    std::vector<PairCertificate> certificates;
};

struct BiorthogonalPair {
    RatVec x;
    RatVec xstar;  // functional coefficients; unit in the dual norm
    Norm norm = Norm::Sup;
};

/**
 * Finds a rational parameter t in [0,1] with a + t(b-a) inside the body.
 * Exact decision for half-space bodies and the parabola; for the hyperbola
 * the concave depth profile is bisected by its exact slope sign, so an
 * interval of length below tol may be reported as empty.
 */
std::optional<Rational> segment_member(const RatVec& a, const RatVec& b,
                                       const ConvexBodyOracle& body, const Rational& tol);

/**
 * Certifies that A is hidden behind the body: every point strictly outside,
 * every segment between two of them crossing the body. Throws
 * PointInsideBody / SegmentMissesBody with the offending indices.
 */
HidingWitness verify_hidden_set(const RatMat& a, const ConvexBodyOracle& body,
                                const Rational& tol, Norm norm = Norm::Sup);

/**
 * Exact convex-combination bookkeeping for transferring a hidden pair into
 * hulls: given x = t_x a + (1-t_x) c_x, y = t_y b + (1-t_y) c_y and a
 * crossing c = t a + (1-t) b, produces u and hull weights alpha, alpha_x,
 * alpha_y with u x + (1-u) y = alpha c + alpha_x c_x + alpha_y c_y and
 * alpha + alpha_x + alpha_y = 1, all identities exact.
 */
struct HullTransfer {
    Rational u;
    Rational alpha;
    Rational alpha_x;
    Rational alpha_y;
};
HullTransfer hull_hiding_transfer(const RatVec& a, const RatVec& b, const RatVec& x,
                                  const RatVec& y, const RatVec& c, const RatVec& c_x,
                                  const RatVec& c_y, const Rational& t_x, const Rational& t_y,
                                  const Rational& t);

/**
 * Scales a set hidden behind a cone inside the body into a witness whose
 * k-th point sits at distance above k: each scale comes from a level search
 * at level k+1, and the pairwise crossings scale along with the points by
 * the exact weight u = tau t_m / (tau t_m + (1 - tau) t_n).
 * Requires 0 in the body and the cone generated inside it.
 */
HidingWitness inflate_hidden_set(const RatMat& a, const ConvexBodyOracle& body,
                                 const PolyhedralCone& cone, const Rational& tol,
                                 Norm norm = Norm::Sup);

/**
 * Lifts a set hidden behind the quotient image of the body back to the
 * ambient space: coset representatives inherit every crossing exactly
 * because the kernel sits inside the body's lineality space.
 */
RatMat lift_hidden_set(const QuotientMap& map, const RatMat& a_tilde, const HPolyhedron& body);

/**
 * The plane construction: n points behind an epigraph body whose recession
 * cone is one ray or a wedge and whose transverse coordinate is unbounded
 * below, with dist(a_k, body) > k and all pairwise crossings certified.
 * The k-th step walks a ray from a deep interior boundary point, keeping
 * the frame coordinates strictly monotone with a decreasing slope ratio.
 */
HidingWitness hidden_set_2d(const ConvexBodyOracle& body, std::size_t n, const Rational& tol,
                            Norm norm = Norm::Sup, std::size_t budget = 40);

/**
 * The 2^k family conv(C u beta) over subsets beta of a hidden set at level
 * eps, represented by inner polygonizations, with the exact pairwise
 * distance matrix of the stand-ins. Every off-diagonal entry is at least
 * eps and approximates the true pairwise distance within delta_report.
 */
struct PackingFamily {
    RatMat base_points;                 // the hidden level set (one per index)
    std::vector<VPolyhedron> sets;      // indexed by subset bitmask
    std::vector<std::vector<Rational>> distances;
    Rational delta_report;
};
PackingFamily packing_family(const ConvexBodyOracle& body, const Rational& eps, std::size_t k,
                             const Rational& tol, Norm norm = Norm::Sup);

/**
 * Biorthogonal pairs for a bounded body with 0 interior: each functional is
 * unit in the dual norm and kills all previous vectors; each vector is the
 * exact minimum-norm solution of the interpolation program, accepted only
 * below norm 4. When a functional is too close to the span of its
 * predecessors (minimum norm at least 4), the certifying combination's
 * norm-attaining point is added to the kill list and the step retries —
 * the finite-dimensional stand-in for separating off an eighth-net.
 */
std::vector<BiorthogonalPair> biorthogonal_sequence(const HPolyhedron& body, std::size_t k,
                                                    Norm norm);

/**
 * A positively hiding polyhedral approximant within eps of the body: the
 * eps-ball sum capped by k functional rows at level sup + eps/8, hiding the
 * points c_n + (eps/4) x_n at certified distance at least eps/16.
 */
struct Approximant {
    HPolyhedron body;
    HidingWitness witness;
    std::vector<BiorthogonalPair> pairs;
    RatVec sup_values;  // sup of each functional over the input body
};
Approximant positively_hiding_approximant(const HPolyhedron& body, const Rational& eps,
                                          std::size_t k, Norm norm);

}  // namespace apxpoly

#endif  // APXPOLY_HIDING_HPP
