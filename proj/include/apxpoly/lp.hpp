#ifndef APXPOLY_LP_HPP
#define APXPOLY_LP_HPP

#include <variant>
#include <vector>

#include "apxpoly/linalg.hpp"

namespace apxpoly {

enum class Sense { Min, Max };

struct LpRow {
    RatVec normal;  // normal . x <= rhs
    Rational rhs;
};

struct LpProblem {
    RatVec objective;
    std::vector<LpRow> rows;
    Sense sense = Sense::Max;
};

/**
 * Optimal outcome carries an exact duality certificate: dual >= 0 with
 * sum_i dual[i] * rows[i].normal == +-objective (sign per sense) and
 * dual . rhs == +-value. check_duality re-verifies the identity.
 */
struct LpOptimal {
    Rational value;
    RatVec point;
    RatVec dual;  // one multiplier per constraint row
};

/** Ray satisfies rows.normal . ray <= 0 and strictly improves the objective. */
struct LpUnbounded {
    RatVec ray;
};

struct LpInfeasible {};

using LpOutcome = std::variant<LpOptimal, LpUnbounded, LpInfeasible>;

/**
 * Exact rational simplex over free variables: optimize objective . x subject
 * to rows. Two phases, Bland's rule throughout, so termination is guaranteed
 * and every returned certificate is exact. Duplicate or zero rows are legal.
 */
LpOutcome lp_solve(const LpProblem& problem);

/** True when the optimal certificate verifies exactly against the problem. */
bool check_duality(const LpProblem& problem, const LpOptimal& opt);

inline bool lp_is_optimal(const LpOutcome& o) { return std::holds_alternative<LpOptimal>(o); }
inline bool lp_is_unbounded(const LpOutcome& o) { return std::holds_alternative<LpUnbounded>(o); }
inline bool lp_is_infeasible(const LpOutcome& o) { return std::holds_alternative<LpInfeasible>(o); }

}  // namespace apxpoly

#endif  // APXPOLY_LP_HPP
