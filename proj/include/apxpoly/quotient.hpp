#ifndef APXPOLY_QUOTIENT_HPP
#define APXPOLY_QUOTIENT_HPP

#include "apxpoly/polyhedron.hpp"

namespace apxpoly {

/**
 * Quotient by a subspace Z, realized through the complement spanned by the
 * coordinate vectors completing a basis of Z. The projector fixes that
 * complement and kills Z; quotient coordinates are the complement
 * coordinates, so every image stays rational.
 */
struct QuotientMap {
    std::size_t ambient_dim = 0;
    RatMat kernel_basis;                        // reduced basis of Z
    RatMat projector;                           // idempotent, kernel = Z
    std::vector<std::size_t> complement_coords; // quotient axes, ascending
};

QuotientMap make_quotient(const RatMat& kernel_vectors, std::size_t dim);

/** x -> coordinates of its coset representative (quotient coordinates). */
RatVec quotient_apply(const QuotientMap& m, const RatVec& x);

/** Places quotient coordinates back on the complement axes. */
RatVec quotient_embed(const QuotientMap& m, const RatVec& y);

/**
 * Image of p, in quotient coordinates. H-form requires the kernel to lie in
 * the lineality space of p (KernelNotInLineality otherwise); generator form
 * is always projectable.
 */
HPolyhedron quotient_project(const QuotientMap& m, const HPolyhedron& p);
VPolyhedron quotient_project(const QuotientMap& m, const VPolyhedron& q);

/** min over the coset x + Z of the ambient norm — an exact program. */
Rational quotient_norm(const QuotientMap& m, const RatVec& x, Norm norm);

}  // namespace apxpoly

#endif  // APXPOLY_QUOTIENT_HPP
