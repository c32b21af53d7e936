#include "apxpoly/support.hpp"

#include "apxpoly/errors.hpp"

namespace apxpoly {

namespace {

LpProblem feasibility_problem(const HPolyhedron& p) {
    LpProblem lp;
    lp.objective = zero_vec(p.ambient_dim);
    lp.sense = Sense::Max;
    for (const auto& r : p.rows) lp.rows.push_back(LpRow{r.normal, r.offset});
    return lp;
}

}  // namespace

bool is_nonempty(const HPolyhedron& p) { return !lp_is_infeasible(lp_solve(feasibility_problem(p))); }

std::optional<RatVec> feasible_point(const HPolyhedron& p) {
    const LpOutcome out = lp_solve(feasibility_problem(p));
    if (const auto* opt = std::get_if<LpOptimal>(&out)) return opt->point;
    return std::nullopt;
}

Rational point_distance(const RatVec& point, const HPolyhedron& p, Norm norm) {
    if (point.size() != p.ambient_dim) throw DimensionMismatch("point dimension");
    const std::size_t n = p.ambient_dim;
    LpProblem lp;
    lp.sense = Sense::Min;
    if (norm == Norm::Sup) {
        // variables (x, t): minimize t with |x_i - point_i| <= t, x in p
        lp.objective = zero_vec(n + 1);
        lp.objective[n] = 1;
        for (const auto& r : p.rows) {
            RatVec row = r.normal;
            row.push_back(Rational(0));
            lp.rows.push_back(LpRow{std::move(row), r.offset});
        }
        for (std::size_t i = 0; i < n; ++i) {
            RatVec up = zero_vec(n + 1);
            up[i] = 1;
            up[n] = -1;
            lp.rows.push_back(LpRow{std::move(up), point[i]});
            RatVec down = zero_vec(n + 1);
            down[i] = -1;
            down[n] = -1;
            lp.rows.push_back(LpRow{std::move(down), -point[i]});
        }
    } else {
        // variables (x, u): minimize sum u_i with |x_i - point_i| <= u_i
        lp.objective = zero_vec(2 * n);
        for (std::size_t i = 0; i < n; ++i) lp.objective[n + i] = 1;
        for (const auto& r : p.rows) {
            RatVec row = r.normal;
            row.resize(2 * n, Rational(0));
            lp.rows.push_back(LpRow{std::move(row), r.offset});
        }
        for (std::size_t i = 0; i < n; ++i) {
            RatVec up = zero_vec(2 * n);
            up[i] = 1;
            up[n + i] = -1;
            lp.rows.push_back(LpRow{std::move(up), point[i]});
            RatVec down = zero_vec(2 * n);
            down[i] = -1;
            down[n + i] = -1;
            lp.rows.push_back(LpRow{std::move(down), -point[i]});
        }
    }
    const LpOutcome out = lp_solve(lp);
    if (lp_is_infeasible(out)) throw EmptyPolyhedron();
    if (!lp_is_optimal(out)) throw Error("distance program cannot be unbounded");
    return std::get<LpOptimal>(out).value;
}

SupportOutcome support_value(const HPolyhedron& p, const RatVec& direction) {
    if (direction.size() != p.ambient_dim) throw DimensionMismatch("direction dimension");
    LpProblem lp;
    lp.sense = Sense::Max;
    lp.objective = direction;
    for (const auto& r : p.rows) lp.rows.push_back(LpRow{r.normal, r.offset});
    const LpOutcome out = lp_solve(lp);
    if (lp_is_infeasible(out)) throw EmptyPolyhedron();
    if (const auto* opt = std::get_if<LpOptimal>(&out)) {
        return SupportFinite{opt->value, opt->point};
    }
    return SupportInfinite{std::get<LpUnbounded>(out).ray};
}

SupportOutcome support_value(const VPolyhedron& q, const RatVec& direction) {
    if (direction.size() != q.ambient_dim) throw DimensionMismatch("direction dimension");
    for (const auto& ray : q.rays) {
        if (dot(direction, ray) > 0) return SupportInfinite{ray};
    }
    Rational best = dot(direction, q.points.front());
    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < q.points.size(); ++i) {
        const Rational v = dot(direction, q.points[i]);
        if (v > best) {
            best = v;
            best_idx = i;
        }
    }
    return SupportFinite{best, q.points[best_idx]};
}

bool support_is_finite(const SupportOutcome& s) { return std::holds_alternative<SupportFinite>(s); }

bool support_equal(const SupportOutcome& a, const SupportOutcome& b) {
    if (support_is_finite(a) != support_is_finite(b)) return false;
    if (!support_is_finite(a)) return true;
    return std::get<SupportFinite>(a).value == std::get<SupportFinite>(b).value;
}

}  // namespace apxpoly
