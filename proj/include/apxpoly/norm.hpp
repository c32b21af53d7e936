#ifndef APXPOLY_NORM_HPP
#define APXPOLY_NORM_HPP

#include <string>
#include <vector>

#include "apxpoly/linalg.hpp"

namespace apxpoly {

/**
 * Polyhedral norms. Every distance in the library is an exact linear
 * program under one of these; the dual of Sup is Sum and vice versa.
 */
enum class Norm { Sup, Sum };

Norm dual_norm(Norm n);

Rational norm_value(Norm n, const RatVec& x);

/** Unit-ball rows {x : row.x <= r}. Sum-norm emits all 2^dim sign rows. */
std::vector<std::pair<RatVec, Rational>> ball_rows(Norm n, std::size_t dim, const Rational& r);

/** Unit-ball vertices scaled by r. Sup-norm emits all 2^dim sign vertices. */
RatMat ball_vertices(Norm n, std::size_t dim, const Rational& r);

std::string norm_name(Norm n);
Norm parse_norm(const std::string& name);

}  // namespace apxpoly

#endif  // APXPOLY_NORM_HPP
