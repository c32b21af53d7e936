#include "apxpoly/hausdorff.hpp"

#include <algorithm>

#include "apxpoly/errors.hpp"
#include "apxpoly/support.hpp"

namespace apxpoly {

bool hausdorff_is_finite(const HausdorffOutcome& o) {
    return std::holds_alternative<HausdorffFinite>(o);
}

const Rational& hausdorff_value(const HausdorffOutcome& o) {
    return std::get<HausdorffFinite>(o).value;
}

namespace {

// sup over conv(points)+cone(rays) of dist(., q): with every ray of the
// source inside the recession cone of q, dist(., q) cannot increase along
// rays, and convexity pins the sup to the points.
Rational directed_value_from_points(const RatMat& points, const HPolyhedron& q, Norm norm) {
    Rational best = 0;
    for (const auto& pt : points) {
        best = std::max(best, point_distance(pt, q, norm));
    }
    return best;
}

HPolyhedron intersect_with_ball(const HPolyhedron& p, Norm norm, const Rational& r) {
    HPolyhedron out = p;
    for (auto& row : ball_rows(norm, p.ambient_dim, r)) {
        out.add_row(std::move(row.first), row.second);
    }
    return out;
}

}  // namespace

HausdorffOutcome directed_distance(const HPolyhedron& p, const HPolyhedron& q, Norm norm) {
    if (p.ambient_dim != q.ambient_dim) throw DimensionMismatch("operand dimensions differ");
    if (!is_nonempty(p) || !is_nonempty(q)) throw EmptyPolyhedron();
    const PolyhedralCone rec_p = recession_cone(p);
    const PolyhedralCone rec_q = recession_cone(q);
    if (auto witness = cone_subset_witness(rec_p, rec_q)) {
        return HausdorffInfinite{std::move(*witness)};
    }
    const VPolyhedron vp = vrep_of(p);
    return HausdorffFinite{directed_value_from_points(vp.points, q, norm)};
}

HausdorffOutcome hausdorff_distance(const HPolyhedron& p, const HPolyhedron& q, Norm norm) {
    const HausdorffOutcome forward = directed_distance(p, q, norm);
    if (std::holds_alternative<HausdorffInfinite>(forward)) return forward;
    const HausdorffOutcome backward = directed_distance(q, p, norm);
    if (std::holds_alternative<HausdorffInfinite>(backward)) return backward;
    return HausdorffFinite{std::max(hausdorff_value(forward), hausdorff_value(backward))};
}

Rational ray_level_search(const RatVec& c0, const RatVec& v, const Rational& eps,
                          const HPolyhedron& body, Norm norm, const Rational& tol) {
    if (eps <= 0) throw Error("level must be positive");
    if (!body.contains(c0)) throw PointNotInBody();
    bool in_recession = true;
    for (const auto& row : body.rows) {
        if (dot(row.normal, v) > 0) in_recession = false;
    }
    if (in_recession || is_zero_vec(v)) throw RayInsideCone();

    if (body.ambient_dim <= kDimensionCap) {
        // exact crossing: the inflated body (body + eps ball) is polyhedral,
        // and the crossing is where the ray exits it
        const VPolyhedron vb = vrep_of(body);
        RatMat sum_points;
        for (const auto& p : vb.points) {
            for (const auto& b : ball_vertices(norm, body.ambient_dim, eps)) {
                sum_points.push_back(vec_add(p, b));
            }
        }
        const HPolyhedron inflated = hrep_of(VPolyhedron(body.ambient_dim, sum_points, vb.rays));
        bool bounded_along_v = false;
        Rational best;
        for (const auto& row : inflated.rows) {
            const Rational speed = dot(row.normal, v);
            if (speed <= 0) continue;
            const Rational t = (row.offset - dot(row.normal, c0)) / speed;
            if (!bounded_along_v || t < best) best = t;
            bounded_along_v = true;
        }
        if (!bounded_along_v) throw RayInsideCone();
        if (best <= 0) throw Error("crossing parameter must be positive");
        return best;
    }

    // above the conversion cap, bisect the exact predicate dist <= eps
    const Rational speed = norm_value(norm, v);
    Rational hi = 1;
    std::size_t guard = 0;
    while (point_distance(vec_add(c0, vec_scale(hi, v)), body, norm) <= eps) {
        hi *= 2;
        if (++guard > 200) throw BudgetExceeded("level bracket did not close");
    }
    Rational lo = 0;
    while ((hi - lo) * speed > tol) {
        const Rational mid = (lo + hi) / 2;
        if (point_distance(vec_add(c0, vec_scale(mid, v)), body, norm) <= eps) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

Rational ray_level_search(const RatVec& c0, const RatVec& v, const Rational& eps,
                          const ConvexBodyOracle& body, Norm norm, const Rational& tol) {
    if (body.kind() == BodyKind::HPolyBacked) {
        return ray_level_search(c0, v, eps, body.backing(), norm, tol);
    }
    if (eps <= 0) throw Error("level must be positive");
    if (tol <= 0) throw Error("tolerance must be positive");
    if (!body.contains(c0)) throw PointNotInBody();
    if (body.recession_contains(v)) throw RayInsideCone();

    const Rational speed = norm_value(norm, v);
    Rational hi = 1;
    std::size_t guard = 0;
    while (body.distance_leq(vec_add(c0, vec_scale(hi, v)), eps, norm)) {
        hi *= 2;
        if (++guard > 200) throw BudgetExceeded("level bracket did not close");
    }
    Rational lo = 0;
    while ((hi - lo) * speed > tol) {
        const Rational mid = (lo + hi) / 2;
        if (body.distance_leq(vec_add(c0, vec_scale(mid, v)), eps, norm)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;  // dist at hi exceeds eps by at most tol
}

Truncation truncation_radius(const HPolyhedron& a, const PolyhedralCone& p, const Rational& eps,
                             Norm norm, std::size_t doubling_budget) {
    if (eps <= 0) throw Error("eps must be positive");
    if (!is_nonempty(a)) throw EmptyPolyhedron();
    if (!cone_equal(recession_cone(a), p)) throw ConeMismatch();
    const RatMat cone_gens = cone_generator_list(p);

    const auto truncate = [&](const Rational& r) -> std::optional<VPolyhedron> {
        const HPolyhedron capped = intersect_with_ball(a, norm, r);
        if (!is_nonempty(capped)) return std::nullopt;
        const VPolyhedron hull = vrep_of(capped);
        return VPolyhedron(a.ambient_dim, hull.points, cone_gens);
    };
    const auto close_enough = [&](const VPolyhedron& body) {
        const HausdorffOutcome d = hausdorff_distance(hrep_of(body), a, norm);
        return hausdorff_is_finite(d) && hausdorff_value(d) <= eps;
    };

    Rational hi = 1;
    std::optional<VPolyhedron> body = truncate(hi);
    std::size_t steps = 0;
    while (!body || !close_enough(*body)) {
        if (++steps > doubling_budget) throw BudgetExceeded("truncation radius search exhausted its doublings");
        hi *= 2;
        body = truncate(hi);
    }
    Rational lo = 0;
    while (hi - lo > eps / 4) {
        const Rational mid = (lo + hi) / 2;
        const auto candidate = truncate(mid);
        if (candidate && close_enough(*candidate)) {
            hi = mid;
            body = candidate;
        } else {
            lo = mid;
        }
    }
    return Truncation{hi, std::move(*body)};
}

std::pair<Rational, Rational> scaling_bound_check(const RatMat& normals, const RatVec& offsets,
                                                  Norm norm) {
    if (normals.size() != offsets.size()) throw DimensionMismatch("one offset per normal");
    Rational max_offset = 0;
    for (const auto& a : offsets) {
        if (a < 0) throw NegativeOffset();
        max_offset = std::max(max_offset, a);
    }
    if (normals.empty()) return {Rational(0), Rational(0)};
    const std::size_t dim = normals.front().size();
    HPolyhedron p_a(dim, {}), p_0(dim, {}), p_1(dim, {});
    for (std::size_t i = 0; i < normals.size(); ++i) {
        p_a.add_row(normals[i], offsets[i]);
        p_0.add_row(normals[i], Rational(0));
        p_1.add_row(normals[i], Rational(1));
    }
    const HausdorffOutcome lhs = hausdorff_distance(p_a, p_0, norm);
    const HausdorffOutcome unit = hausdorff_distance(p_0, p_1, norm);
    if (!hausdorff_is_finite(lhs) || !hausdorff_is_finite(unit)) {
        throw Error("offset scaling keeps recession cones equal; distances must be finite");
    }
    return {hausdorff_value(lhs), hausdorff_value(unit) * max_offset};
}

}  // namespace apxpoly
