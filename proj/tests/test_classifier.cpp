#include "doctest.h"

#include "apxpoly/classify.hpp"
#include "apxpoly/support.hpp"
#include "generators.hpp"

using namespace apxpoly;
using namespace apxpoly::testgen;

TEST_CASE("the parabola is infinitely hiding") {
    const Classification c = classify(ConvexBodyOracle::parabola());
    REQUIRE(std::holds_alternative<InfinitelyHidingVerdict>(c));
    const auto& verdict = std::get<InfinitelyHidingVerdict>(c);
    CHECK(verdict.witness.points.size() == 5);
    for (std::size_t i = 0; i < verdict.witness.points.size(); ++i) {
        CHECK(verdict.witness.distance_lower_bounds[i] > Rational(static_cast<long>(i)));
    }
}

TEST_CASE("the hyperbola is approximatively polyhedral at unit cone distance") {
    const Classification c = classify(ConvexBodyOracle::hyperbola());
    REQUIRE(std::holds_alternative<ApproximativelyPolyhedral>(c));
    const auto& verdict = std::get<ApproximativelyPolyhedral>(c);
    const auto& gap = std::get<GapEvidence>(verdict.dist_to_cone);
    CHECK(rat_abs(gap.value - 1) <= make_rational(1, 1000000));
    // the cone is the wedge spanned by (1,1), (-1,1)
    CHECK(cone_contains(verdict.cone, {Rational(1), Rational(1)}));
    CHECK(cone_contains(verdict.cone, {Rational(-1), Rational(1)}));
    CHECK(!cone_contains(verdict.cone, {Rational(1), Rational(0)}));
    CHECK(!verdict.approximant.points.empty());
    CHECK(verdict.approximant.rays.size() == 2);
}

TEST_CASE("verdicts are stable across budgets above the default") {
    ClassifyOptions wide;
    wide.budget = 48;
    CHECK(std::holds_alternative<InfinitelyHidingVerdict>(
        classify(ConvexBodyOracle::parabola(), wide)));
    CHECK(std::holds_alternative<ApproximativelyPolyhedral>(
        classify(ConvexBodyOracle::hyperbola(), wide)));
}

TEST_CASE("half-space bodies classify as their own approximants") {
    std::uint64_t s = 23;
    for (int i = 0; i < 6; ++i) {
        const HPolyhedron p = random_hpoly(s, 2 + mix(s) % 2, 3, 1);
        const Classification c = classify(p);
        REQUIRE(std::holds_alternative<ApproximativelyPolyhedral>(c));
        const auto& verdict = std::get<ApproximativelyPolyhedral>(c);
        REQUIRE(std::holds_alternative<Rational>(verdict.dist_to_cone));
        CHECK(cone_equal(verdict.cone, recession_cone(p)));
        // the generator-form approximant denotes the same set
        for (int probe = 0; probe < 20; ++probe) {
            const RatVec u = vec_in(s, p.ambient_dim, -4, 4);
            CHECK(support_equal(support_value(verdict.approximant, u), support_value(p, u)));
        }
    }
}

TEST_CASE("polyhedral cone distance obeys the unit-offset scaling bound") {
    std::uint64_t s = 57;
    for (int i = 0; i < 8; ++i) {
        const std::size_t dim = 2 + mix(s) % 2;
        RatMat normals;
        RatVec offsets;
        Rational max_offset = 0;
        for (std::size_t r = 0; r < 3; ++r) {
            RatVec n = vec_in(s, dim, -2, 2);
            if (is_zero_vec(n)) n = unit_vec(dim, 0);
            normals.push_back(n);
            const Rational b = rat_in(s, 0, 4);
            offsets.push_back(b);
            max_offset = std::max(max_offset, b);
        }
        HPolyhedron p(dim, {});
        for (std::size_t r = 0; r < 3; ++r) p.add_row(normals[r], offsets[r]);
        const Classification c = classify(p);
        const auto& verdict = std::get<ApproximativelyPolyhedral>(c);
        const Rational dist = std::get<Rational>(verdict.dist_to_cone);
        const auto unit = scaling_bound_check(normals, RatVec(3, Rational(1)), Norm::Sup);
        CHECK(dist <= unit.first * max_offset);
    }
}

TEST_CASE("epsilon net on the unit square") {
    HPolyhedron square(2, {});
    square.add_row({Rational(1), Rational(0)}, Rational(1));
    square.add_row({Rational(-1), Rational(0)}, Rational(1));
    square.add_row({Rational(0), Rational(1)}, Rational(1));
    square.add_row({Rational(0), Rational(-1)}, Rational(1));
    const EpsilonNet net = epsilon_net(square, make_rational(1, 4), make_rational(1, 8), Norm::Sup);
    CHECK(!net.grid_points.empty());
    CHECK(net.certified_distance < make_rational(1, 2));  // the 2-eps bound
    // independent recomputation agrees with the certificate
    const HausdorffOutcome again = hausdorff_distance(hrep_of(net.approximant), square, Norm::Sup);
    REQUIRE(hausdorff_is_finite(again));
    CHECK(hausdorff_value(again) == net.certified_distance);
}

TEST_CASE("epsilon net on a segment with a ray") {
    const VPolyhedron v(2, {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}},
                        {{Rational(1), Rational(0)}});
    const HPolyhedron a = hrep_of(v);
    const EpsilonNet net = epsilon_net(a, make_rational(1, 2), make_rational(1, 2), Norm::Sup);
    CHECK(net.certified_distance < 1);
    CHECK(net.approximant.rays.size() == 1);
}

TEST_CASE("epsilon net collapses to a single on-grid point") {
    const VPolyhedron v(2, {{Rational(0), Rational(0)}}, {{Rational(1), Rational(0)}});
    const HPolyhedron a = hrep_of(v);
    const EpsilonNet net = epsilon_net(a, Rational(1), Rational(1), Norm::Sup);
    const HausdorffOutcome d = hausdorff_distance(hrep_of(net.approximant), a, Norm::Sup);
    REQUIRE(hausdorff_is_finite(d));
    CHECK(hausdorff_value(d) == 0);
}

TEST_CASE("epsilon net rejects a coarse grid honestly") {
    // a thin sliver away from the grid
    HPolyhedron sliver(2, {});
    sliver.add_row({Rational(1), Rational(0)}, make_rational(7, 16));
    sliver.add_row({Rational(-1), Rational(0)}, make_rational(-5, 16));
    sliver.add_row({Rational(0), Rational(1)}, make_rational(7, 16));
    sliver.add_row({Rational(0), Rational(-1)}, make_rational(-5, 16));
    CHECK_THROWS_AS(epsilon_net(sliver, Rational(1), Rational(1), Norm::Sup), GridTooCoarse);
}
