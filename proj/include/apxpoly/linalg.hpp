#ifndef APXPOLY_LINALG_HPP
#define APXPOLY_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "apxpoly/rational.hpp"

namespace apxpoly {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

RatVec zero_vec(std::size_t n);
RatVec unit_vec(std::size_t n, std::size_t i);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rational& s, const RatVec& a);
Rational dot(const RatVec& a, const RatVec& b);
bool is_zero_vec(const RatVec& a);

/** Scales so the largest |coordinate| is 1; zero vectors are returned as-is. */
RatVec sup_normalize(const RatVec& a);

RatMat identity_mat(std::size_t n);
RatVec mat_apply(const RatMat& m, const RatVec& x);
RatMat mat_mul(const RatMat& a, const RatMat& b);

/**
 * In-place reduced row echelon form. Returns the pivot column of each pivot
 * row, in order; rank is the number of pivots.
 */
std::vector<std::size_t> rref(RatMat& m);

/** Basis of { x : m x = 0 }, one vector per free column of m. */
RatMat nullspace(const RatMat& m);

/** Solves a square system exactly; nullopt when the matrix is singular. */
std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b);

/** Inverse of a square matrix; nullopt when singular. */
std::optional<RatMat> invert(const RatMat& a);

}  // namespace apxpoly

#endif  // APXPOLY_LINALG_HPP
