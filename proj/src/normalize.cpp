#include "apxpoly/normalize.hpp"

#include "apxpoly/lp.hpp"
#include "apxpoly/support.hpp"

namespace apxpoly {

HPolyhedron minimal_hform(const HPolyhedron& p) {
    std::vector<HalfSpace> kept = p.rows;
    std::size_t i = 0;
    while (i < kept.size()) {
        LpProblem lp;
        lp.sense = Sense::Max;
        lp.objective = kept[i].normal;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j != i) lp.rows.push_back(LpRow{kept[j].normal, kept[j].offset});
        }
        const LpOutcome o = lp_solve(lp);
        const auto* opt = std::get_if<LpOptimal>(&o);
        if (opt && opt->value <= kept[i].offset) {
            kept.erase(kept.begin() + i);
        } else {
            ++i;
        }
    }
    return HPolyhedron(p.ambient_dim, std::move(kept));
}

namespace {

// is target a convex combination of points plus a conic one of rays?
bool generated_by(const RatVec& target, const RatMat& points, const RatMat& rays,
                  bool affine_part) {
    const std::size_t n = target.size();
    const std::size_t vars = points.size() + rays.size();
    if (vars == 0) return false;
    LpProblem lp;
    lp.sense = Sense::Max;
    lp.objective = zero_vec(vars);
    const auto equality = [&](const RatVec& coeffs, const Rational& rhs) {
        lp.rows.push_back(LpRow{coeffs, rhs});
        lp.rows.push_back(LpRow{vec_scale(-1, coeffs), -rhs});
    };
    for (std::size_t c = 0; c < n; ++c) {
        RatVec coeffs(vars);
        for (std::size_t j = 0; j < points.size(); ++j) coeffs[j] = points[j][c];
        for (std::size_t j = 0; j < rays.size(); ++j) coeffs[points.size() + j] = rays[j][c];
        equality(coeffs, target[c]);
    }
    if (affine_part) {
        RatVec ones = zero_vec(vars);
        for (std::size_t j = 0; j < points.size(); ++j) ones[j] = 1;
        equality(ones, Rational(1));
    }
    for (std::size_t j = 0; j < vars; ++j) {
        RatVec row = zero_vec(vars);
        row[j] = -1;
        lp.rows.push_back(LpRow{std::move(row), Rational(0)});
    }
    return !lp_is_infeasible(lp_solve(lp));
}

}  // namespace

VPolyhedron minimal_vform(const VPolyhedron& q) {
    RatMat rays = q.rays;
    std::size_t i = 0;
    while (i < rays.size()) {
        RatMat others;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            if (j != i) others.push_back(rays[j]);
        }
        if (generated_by(rays[i], {}, others, false)) {
            rays.erase(rays.begin() + i);
        } else {
            ++i;
        }
    }
    RatMat points = q.points;
    i = 0;
    while (i < points.size() && points.size() > 1) {
        RatMat others;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i) others.push_back(points[j]);
        }
        if (generated_by(points[i], others, rays, true)) {
            points.erase(points.begin() + i);
        } else {
            ++i;
        }
    }
    return VPolyhedron(q.ambient_dim, std::move(points), std::move(rays));
}

}  // namespace apxpoly
