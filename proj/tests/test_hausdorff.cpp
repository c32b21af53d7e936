#include <cmath>

#include "doctest.h"

#include "apxpoly/hausdorff.hpp"
#include "generators.hpp"

using namespace apxpoly;
using namespace apxpoly::testgen;

namespace {

HPolyhedron ray_body(const RatVec& from, const RatVec& dir) {
    return hrep_of(VPolyhedron(from.size(), {from}, {dir}));
}

HPolyhedron wedge_x2_ge_abs_x1() {
    HPolyhedron w(2, {});
    w.add_row({Rational(1), Rational(-1)}, Rational(0));
    w.add_row({Rational(-1), Rational(-1)}, Rational(0));
    return w;
}

}  // namespace

TEST_CASE("identical sets are at distance zero") {
    std::uint64_t s = 1;
    const HPolyhedron p = random_hpoly(s, 2, 3, 1);
    const HausdorffOutcome d = hausdorff_distance(p, p, Norm::Sup);
    REQUIRE(hausdorff_is_finite(d));
    CHECK(hausdorff_value(d) == 0);
}

TEST_CASE("recession mismatch gives an infinite outcome with a valid witness") {
    HPolyhedron p(2, {});
    p.add_row({Rational(0), Rational(-1)}, Rational(0));  // upper half plane
    const HPolyhedron q = wedge_x2_ge_abs_x1();
    const HausdorffOutcome d = directed_distance(p, q, Norm::Sup);
    REQUIRE(std::holds_alternative<HausdorffInfinite>(d));
    const RatVec w = std::get<HausdorffInfinite>(d).witness;
    CHECK(cone_contains(recession_cone(p), w));
    CHECK(!cone_contains(recession_cone(q), w));
}

TEST_CASE("parallel rays at unit offset") {
    const HPolyhedron p = ray_body({Rational(0), Rational(1)}, {Rational(1), Rational(0)});
    const HPolyhedron q = ray_body({Rational(0), Rational(0)}, {Rational(1), Rational(0)});
    const HausdorffOutcome d = directed_distance(p, q, Norm::Sup);
    REQUIRE(hausdorff_is_finite(d));
    CHECK(hausdorff_value(d) == 1);

    // dense sampling of p stays within the computed distance of q
    double worst = 0;
    for (int i = 0; i <= 400; ++i) {
        const double t = i / 10.0;
        // point (t, 1) against the ray {(u, 0)}: best over u >= 0
        double best = 1e30;
        for (int j = 0; j <= 500; ++j) {
            const double u = j / 10.0;
            best = std::min(best, std::max(std::abs(t - u), 1.0));
        }
        worst = std::max(worst, best);
    }
    CHECK(worst == doctest::Approx(1.0));
}

TEST_CASE("translated cone and square against the origin") {
    const HPolyhedron p = ray_body({Rational(0), Rational(0)}, {Rational(1), Rational(0)});
    const HPolyhedron q = ray_body({Rational(0), Rational(1)}, {Rational(1), Rational(0)});
    const HausdorffOutcome d = hausdorff_distance(p, q, Norm::Sup);
    REQUIRE(hausdorff_is_finite(d));
    CHECK(hausdorff_value(d) == 1);

    HPolyhedron square(2, {});
    square.add_row({Rational(1), Rational(0)}, Rational(1));
    square.add_row({Rational(-1), Rational(0)}, Rational(0));
    square.add_row({Rational(0), Rational(1)}, Rational(1));
    square.add_row({Rational(0), Rational(-1)}, Rational(0));
    const HPolyhedron origin = hrep_of(VPolyhedron(2, {{Rational(0), Rational(0)}}, {}));
    const HausdorffOutcome e = hausdorff_distance(square, origin, Norm::Sup);
    REQUIRE(hausdorff_is_finite(e));
    CHECK(hausdorff_value(e) == 1);
}

TEST_CASE("vertical ray against the wedge is infinite") {
    const HPolyhedron p = ray_body({Rational(0), Rational(0)}, {Rational(0), Rational(1)});
    const HPolyhedron q = wedge_x2_ge_abs_x1();
    const HausdorffOutcome d = hausdorff_distance(p, q, Norm::Sup);
    REQUIRE(std::holds_alternative<HausdorffInfinite>(d));
    const RatVec w = std::get<HausdorffInfinite>(d).witness;
    const bool in_p = cone_contains(recession_cone(p), w);
    const bool in_q = cone_contains(recession_cone(q), w);
    CHECK(in_p != in_q);
}

TEST_CASE("symmetry and triangle inequality on a shared-cone family") {
    std::uint64_t s = 17;
    for (int i = 0; i < 8; ++i) {
        const std::size_t dim = 2 + mix(s) % 2;
        RatMat rays;
        if (mix(s) % 2) rays.push_back(vec_in(s, dim, -2, 2));
        const auto sample = [&](std::uint64_t salt) {
            std::uint64_t t = s + salt;
            RatMat pts;
            const std::size_t k = 2 + mix(t) % 3;
            for (std::size_t j = 0; j < k; ++j) pts.push_back(vec_in(t, dim, -3, 3));
            RatMat rcopy;
            for (const auto& r : rays) {
                if (!is_zero_vec(r)) rcopy.push_back(r);
            }
            return hrep_of(VPolyhedron(dim, pts, rcopy));
        };
        const HPolyhedron a = sample(1), b = sample(2), c = sample(3);
        const HausdorffOutcome ab = hausdorff_distance(a, b, Norm::Sup);
        const HausdorffOutcome ba = hausdorff_distance(b, a, Norm::Sup);
        const HausdorffOutcome ac = hausdorff_distance(a, c, Norm::Sup);
        const HausdorffOutcome cb = hausdorff_distance(c, b, Norm::Sup);
        REQUIRE(hausdorff_is_finite(ab));
        CHECK(hausdorff_value(ab) == hausdorff_value(ba));
        CHECK(hausdorff_value(ab) <= hausdorff_value(ac) + hausdorff_value(cb));
    }
}

TEST_CASE("finiteness matches exact cone equality on random pairs") {
    std::uint64_t s = 2718;
    int finite_seen = 0, infinite_seen = 0;
    for (int i = 0; i < 40; ++i) {
        const std::size_t dim = 2 + mix(s) % 3;
        const VPolyhedron va = random_vpoly(s, dim, 2, 1 + mix(s) % 2);
        RatMat rays_b = va.rays;
        if (mix(s) % 2) rays_b[mix(s) % rays_b.size()] = vec_in(s, dim, -2, 2);
        bool ok = true;
        for (const auto& r : rays_b) ok &= !is_zero_vec(r);
        if (!ok) continue;
        std::uint64_t t = s;
        RatMat pts_b;
        for (std::size_t j = 0; j < 2; ++j) pts_b.push_back(vec_in(t, dim, -3, 3));
        const HPolyhedron a = hrep_of(va);
        const HPolyhedron b = hrep_of(VPolyhedron(dim, pts_b, rays_b));
        const bool cones_equal = cone_equal(recession_cone(a), recession_cone(b));
        const HausdorffOutcome d = hausdorff_distance(a, b, Norm::Sup);
        CHECK(hausdorff_is_finite(d) == cones_equal);
        (hausdorff_is_finite(d) ? finite_seen : infinite_seen)++;
    }
    CHECK(finite_seen > 3);
    CHECK(infinite_seen > 3);
}

TEST_CASE("level search on the unit ball is exact") {
    HPolyhedron ball(2, {});
    ball.add_row({Rational(1), Rational(0)}, Rational(1));
    ball.add_row({Rational(-1), Rational(0)}, Rational(1));
    ball.add_row({Rational(0), Rational(1)}, Rational(1));
    ball.add_row({Rational(0), Rational(-1)}, Rational(1));
    const Rational t = ray_level_search({Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                                        Rational(2), ball, Norm::Sup, make_rational(1, 1000));
    CHECK(t == 3);
    CHECK(point_distance({t, Rational(0)}, ball, Norm::Sup) == 2);
}

TEST_CASE("level search on a half plane is exact") {
    HPolyhedron half(2, {});
    half.add_row({Rational(0), Rational(1)}, Rational(0));
    const Rational t = ray_level_search({Rational(0), Rational(0)}, {Rational(0), Rational(1)},
                                        Rational(5), half, Norm::Sup, make_rational(1, 1000));
    CHECK(t == 5);
}

TEST_CASE("level search on the parabola brackets the analytic crossing") {
    const ConvexBodyOracle parabola = ConvexBodyOracle::parabola();
    const Rational tol = make_rational(1, 1 << 20);
    const Rational t = ray_level_search({Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                                        Rational(1), parabola, Norm::Sup, tol);
    // the crossing solves (t - s)^2 = s at s = 1, so t = 2 exactly
    CHECK(t > 2);
    CHECK(t - 2 <= tol);
    CHECK(!parabola.distance_leq({t, Rational(0)}, Rational(1), Norm::Sup));
    CHECK(parabola.distance_leq({t, Rational(0)}, Rational(1) + tol, Norm::Sup));
}

TEST_CASE("level search rejects recession directions and outside bases") {
    HPolyhedron half(2, {});
    half.add_row({Rational(0), Rational(1)}, Rational(0));
    CHECK_THROWS_AS(ray_level_search({Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                                     Rational(1), half, Norm::Sup, make_rational(1, 8)),
                    RayInsideCone);
    CHECK_THROWS_AS(ray_level_search({Rational(0), Rational(7)}, {Rational(0), Rational(1)},
                                     Rational(1), half, Norm::Sup, make_rational(1, 8)),
                    PointNotInBody);
    const ConvexBodyOracle parabola = ConvexBodyOracle::parabola();
    CHECK_THROWS_AS(ray_level_search({Rational(0), Rational(0)}, {Rational(0), Rational(1)},
                                     Rational(1), parabola, Norm::Sup, make_rational(1, 8)),
                    RayInsideCone);
}

TEST_CASE("level search stays monotone: a smaller parameter stays below the level") {
    const ConvexBodyOracle parabola = ConvexBodyOracle::parabola();
    const Rational tol = make_rational(1, 4096);
    const Rational t = ray_level_search({Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                                        Rational(3), parabola, Norm::Sup, tol);
    const Rational probe = t - tol / 2;
    CHECK(parabola.distance_leq({probe, Rational(0)}, Rational(3) + tol, Norm::Sup));
}

TEST_CASE("truncation of a segment plus ray") {
    const VPolyhedron v(2, {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}},
                        {{Rational(1), Rational(0)}});
    const HPolyhedron a = hrep_of(v);
    const PolyhedralCone p = PolyhedralCone::from_generators(2, {{Rational(1), Rational(0)}});
    const Truncation tr = truncation_radius(a, p, make_rational(1, 2), Norm::Sup);
    const HausdorffOutcome d = hausdorff_distance(hrep_of(tr.body), a, Norm::Sup);
    REQUIRE(hausdorff_is_finite(d));
    CHECK(hausdorff_value(d) <= make_rational(1, 2));
    CHECK(tr.radius <= 2);
}

TEST_CASE("truncating a cone succeeds at tiny radii") {
    const HPolyhedron cone = wedge_x2_ge_abs_x1();
    const PolyhedralCone p = PolyhedralCone::from_generators(
        2, {{Rational(1), Rational(1)}, {Rational(-1), Rational(1)}});
    const Truncation tr = truncation_radius(cone, p, Rational(1), Norm::Sup);
    CHECK(tr.radius <= 1);
    const HausdorffOutcome d = hausdorff_distance(hrep_of(tr.body), cone, Norm::Sup);
    REQUIRE(hausdorff_is_finite(d));
    CHECK(hausdorff_value(d) == 0);
}

TEST_CASE("truncation rejects a mismatched cone") {
    const HPolyhedron a = wedge_x2_ge_abs_x1();
    const PolyhedralCone wrong = PolyhedralCone::from_generators(2, {{Rational(1), Rational(0)}});
    CHECK_THROWS_AS(truncation_radius(a, wrong, Rational(1), Norm::Sup), ConeMismatch);
}

TEST_CASE("truncation of a square captures every vertex") {
    HPolyhedron square(2, {});
    square.add_row({Rational(1), Rational(0)}, Rational(1));
    square.add_row({Rational(-1), Rational(0)}, Rational(1));
    square.add_row({Rational(0), Rational(1)}, Rational(1));
    square.add_row({Rational(0), Rational(-1)}, Rational(1));
    const Truncation tr = truncation_radius(square, PolyhedralCone::trivial(2),
                                            make_rational(1, 2), Norm::Sup);
    const HausdorffOutcome d = hausdorff_distance(hrep_of(tr.body), square, Norm::Sup);
    REQUIRE(hausdorff_is_finite(d));
    CHECK(hausdorff_value(d) <= make_rational(1, 2));
}

TEST_CASE("offset scaling bound, pinned instances") {
    const RatMat normals{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    const auto zero = scaling_bound_check(normals, {Rational(0), Rational(0)}, Norm::Sup);
    CHECK(zero.first == 0);
    CHECK(zero.second == 0);

    const auto ones = scaling_bound_check(normals, {Rational(1), Rational(1)}, Norm::Sup);
    CHECK(ones.first == ones.second);

    const auto mixed = scaling_bound_check(normals, {Rational(2), Rational(3)}, Norm::Sup);
    CHECK(mixed.first <= mixed.second);
    CHECK(mixed.second == 3 * ones.first);
}

TEST_CASE("offset scaling bound on random rows") {
    std::uint64_t s = 31415;
    int checked = 0;
    while (checked < 15) {
        const std::size_t dim = 2 + mix(s) % 2;
        const std::size_t rows = 2 + mix(s) % 3;
        RatMat normals;
        RatVec offsets;
        for (std::size_t r = 0; r < rows; ++r) {
            RatVec n = vec_in(s, dim, -2, 2);
            if (is_zero_vec(n)) n = unit_vec(dim, 0);
            normals.push_back(std::move(n));
            offsets.push_back(rat_in(s, 0, 6));
        }
        const auto sides = scaling_bound_check(normals, offsets, Norm::Sup);
        CHECK(sides.first <= sides.second);
        ++checked;
    }
}

TEST_CASE("directed distance matches dense sampling on random instances") {
    std::uint64_t s = 999;
    int done = 0;
    while (done < 6) {
        const std::size_t dim = 2 + mix(s) % 2;
        const VPolyhedron vp = random_vpoly(s, dim, 3, 1);
        const VPolyhedron vq = random_vpoly(s, dim, 3, 1);
        RatMat shared = vp.rays;
        const HPolyhedron p = hrep_of(vp);
        const HPolyhedron q = hrep_of(VPolyhedron(dim, vq.points, shared));
        const HausdorffOutcome d = directed_distance(p, q, Norm::Sup);
        if (!hausdorff_is_finite(d)) continue;
        // samples of p: its generator points, pairwise midpoints, and pushes
        // along its rays, none of which may exceed the reported sup
        const VPolyhedron gen = vrep_of(p);
        Rational sampled = 0;
        for (std::size_t i = 0; i < gen.points.size(); ++i) {
            sampled = std::max(sampled, point_distance(gen.points[i], q, Norm::Sup));
            for (std::size_t j = i + 1; j < gen.points.size(); ++j) {
                const RatVec mid = vec_scale(make_rational(1, 2),
                                             vec_add(gen.points[i], gen.points[j]));
                CHECK(point_distance(mid, q, Norm::Sup) <= hausdorff_value(d));
            }
            for (const auto& ray : gen.rays) {
                const RatVec push = vec_add(gen.points[i], vec_scale(Rational(3), ray));
                CHECK(point_distance(push, q, Norm::Sup) <= hausdorff_value(d));
            }
        }
        CHECK(sampled == hausdorff_value(d));  // attained at a generator point
        ++done;
    }
}
