#include <thread>

#include "doctest.h"

#include "apxpoly/normalize.hpp"
#include "apxpoly/hausdorff.hpp"
#include "generators.hpp"

using namespace apxpoly;
using namespace apxpoly::testgen;

TEST_CASE("redundant rows are stripped") {
    HPolyhedron square(2, {});
    square.add_row({Rational(1), Rational(0)}, Rational(1));
    square.add_row({Rational(-1), Rational(0)}, Rational(1));
    square.add_row({Rational(0), Rational(1)}, Rational(1));
    square.add_row({Rational(0), Rational(-1)}, Rational(1));
    square.add_row({Rational(1), Rational(0)}, Rational(1));   // duplicate
    square.add_row({Rational(1), Rational(1)}, Rational(5));   // slack
    const HPolyhedron minimal = minimal_hform(square);
    CHECK(minimal.rows.size() == 4);
    // same set afterwards
    const HausdorffOutcome d = hausdorff_distance(square, minimal, Norm::Sup);
    REQUIRE(hausdorff_is_finite(d));
    CHECK(hausdorff_value(d) == 0);
}

TEST_CASE("interior generators are stripped") {
    const VPolyhedron v(2,
                        {{Rational(0), Rational(0)},
                         {Rational(2), Rational(0)},
                         {Rational(0), Rational(2)},
                         {Rational(1), Rational(1)},   // inside the hull + ray
                         {Rational(1), make_rational(1, 2)}},
                        {{Rational(1), Rational(0)}, {Rational(2), Rational(0)}});
    const VPolyhedron minimal = minimal_vform(v);
    CHECK(minimal.points.size() == 2);  // (0,0) and (0,2) remain
    CHECK(minimal.rays.size() == 1);
    std::uint64_t s = 5;
    for (int i = 0; i < 40; ++i) {
        const RatVec u = vec_in(s, 2, -4, 4);
        CHECK(support_equal(support_value(v, u), support_value(minimal, u)));
    }
}

TEST_CASE("normalization keeps at least one point") {
    const VPolyhedron single(2, {{Rational(1), Rational(2)}, {Rational(1), Rational(2)}}, {});
    const VPolyhedron minimal = minimal_vform(single);
    CHECK(minimal.points.size() == 1);
}

TEST_CASE("zero distance iff equal support values") {
    std::uint64_t s = 61;
    for (int i = 0; i < 10; ++i) {
        const VPolyhedron v = random_vpoly(s, 2, 3, 1);
        const HPolyhedron a = hrep_of(v);
        if (a.rows.empty()) continue;
        HPolyhedron padded = a;  // same set, one slackened duplicate row
        padded.add_row(a.rows[0].normal, a.rows[0].offset + 1);
        const HausdorffOutcome d = hausdorff_distance(a, padded, Norm::Sup);
        REQUIRE(hausdorff_is_finite(d));
        CHECK(hausdorff_value(d) == 0);
        std::uint64_t t = s;
        for (int probe = 0; probe < 20; ++probe) {
            const RatVec u = vec_in(t, 2, -4, 4);
            CHECK(support_equal(support_value(a, u), support_value(padded, u)));
        }
    }
}

TEST_CASE("solver instances share no state across threads") {
    // the same programs solved concurrently give identical outcomes
    std::uint64_t s = 17;
    const HPolyhedron body = random_hpoly(s, 3, 4, 1);
    const RatVec probe = vec_in(s, 3, -4, 4);
    const Rational expected = point_distance(probe, body, Norm::Sup);
    std::vector<std::thread> workers;
    std::vector<Rational> results(8);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] { results[t] = point_distance(probe, body, Norm::Sup); });
    }
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r == expected);
}
