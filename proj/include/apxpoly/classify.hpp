#ifndef APXPOLY_CLASSIFY_HPP
#define APXPOLY_CLASSIFY_HPP

#include "apxpoly/hiding.hpp"

namespace apxpoly {

/** Certified lower estimate of the body-to-cone gap, resolved to tolerance. */
struct GapEvidence {
    Rational value;
    Rational tolerance;
};

struct ApproximativelyPolyhedral {
    PolyhedralCone cone;
    std::variant<Rational, GapEvidence> dist_to_cone;  // exact for half-space bodies
    VPolyhedron approximant;
};

struct InfinitelyHidingVerdict {
    HidingWitness witness;
};

struct UndecidedVerdict {
    ProbeReport report;
};

using Classification =
    std::variant<ApproximativelyPolyhedral, InfinitelyHidingVerdict, UndecidedVerdict>;

struct ClassifyOptions {
    Rational eps = make_rational(1, 100);
    Rational tol = make_rational(1, 1000000000);
    Norm norm = Norm::Sup;
    std::size_t budget = 40;                  // doubling radii to probe
    Rational divergence_threshold = 1000000;  // gap size that counts as escaped
    Rational growth_ratio = make_rational(13, 10);  // per-doubling growth that counts as growing
    std::size_t witness_count = 5;
};

/** Half-space bodies classify as approximately polyhedral with their exact
 * recession-cone distance and themselves (in generator form) as approximant. */
Classification classify(const HPolyhedron& body, const ClassifyOptions& options = {});

/**
 * Oracle bodies: probes the gap between the body and its recession cone over
 * doubling radii. A gap that escapes the threshold while still growing
 * yields an infinitely-hiding verdict with a constructed witness; a gap that
 * stabilizes within eps/4 yields an approximant; otherwise undecided.
 */
Classification classify(const ConvexBodyOracle& body, const ClassifyOptions& options = {});

struct EpsilonNet {
    RatMat grid_points;
    VPolyhedron approximant;          // conv(grid points) + recession cone
    Rational certified_distance;      // exact distance of the approximant to the body
};

/**
 * Inner grid cover of the truncated body: grid points of the given spacing
 * inside the body and the truncation ball, hulled and re-equipped with the
 * recession cone. The returned distance is re-computed exactly and is below
 * 2 * eps whenever the cover succeeded (GridTooCoarse otherwise).
 */
EpsilonNet epsilon_net(const HPolyhedron& a, const Rational& eps, const Rational& grid_step,
                       Norm norm);

}  // namespace apxpoly

#endif  // APXPOLY_CLASSIFY_HPP
