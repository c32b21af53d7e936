#include <cstdint>

#include "doctest.h"

#include "apxpoly/lp.hpp"

using namespace apxpoly;

namespace {

std::uint64_t mix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rational small_rat(std::uint64_t& s) {
    const std::int64_t n = static_cast<std::int64_t>(mix(s) % 21) - 10;
    const std::int64_t d = 1 + static_cast<std::int64_t>(mix(s) % 4);
    return make_rational(BigInt(n), BigInt(d));
}

}  // namespace

TEST_CASE("single bound attains") {
    LpProblem p;
    p.objective = {Rational(1)};
    p.sense = Sense::Max;
    p.rows.push_back(LpRow{{Rational(1)}, Rational(1)});
    const LpOutcome o = lp_solve(p);
    REQUIRE(lp_is_optimal(o));
    const auto& opt = std::get<LpOptimal>(o);
    CHECK(opt.value == 1);
    CHECK(opt.point == RatVec{Rational(1)});
    CHECK(check_duality(p, opt));
}

TEST_CASE("unbounded half line") {
    LpProblem p;
    p.objective = {Rational(1)};
    p.sense = Sense::Max;
    p.rows.push_back(LpRow{{Rational(-1)}, Rational(0)});
    const LpOutcome o = lp_solve(p);
    REQUIRE(lp_is_unbounded(o));
    const RatVec ray = std::get<LpUnbounded>(o).ray;
    CHECK(dot(p.objective, ray) > 0);
    CHECK(dot(p.rows[0].normal, ray) <= 0);
}

TEST_CASE("box corner, expected value frozen from the 2x2 vertex system") {
    // the box {x <= 1/3, y <= 1/7} has the single candidate corner computed
    // by solving the two active rows exactly: (1/3, 1/7), objective 10/21
    LpProblem p;
    p.objective = {Rational(1), Rational(1)};
    p.sense = Sense::Max;
    p.rows.push_back(LpRow{{Rational(1), Rational(0)}, make_rational(1, 3)});
    p.rows.push_back(LpRow{{Rational(0), Rational(1)}, make_rational(1, 7)});
    const LpOutcome o = lp_solve(p);
    REQUIRE(lp_is_optimal(o));
    const auto& opt = std::get<LpOptimal>(o);
    CHECK(opt.value == make_rational(10, 21));
    CHECK(opt.point == RatVec{make_rational(1, 3), make_rational(1, 7)});
    CHECK(check_duality(p, opt));
}

TEST_CASE("infeasible pair") {
    LpProblem p;
    p.objective = {Rational(0)};
    p.rows.push_back(LpRow{{Rational(1)}, Rational(-1)});
    p.rows.push_back(LpRow{{Rational(-1)}, Rational(-1)});
    CHECK(lp_is_infeasible(lp_solve(p)));
}

TEST_CASE("dimension mismatch is rejected") {
    LpProblem p;
    p.objective = {Rational(1), Rational(1)};
    p.rows.push_back(LpRow{{Rational(1)}, Rational(1)});
    CHECK_THROWS_AS(lp_solve(p), DimensionMismatch);
}

TEST_CASE("min sense with negative offsets") {
    // min x + y over x >= 1, y >= 2  (as -x <= -1, -y <= -2)
    LpProblem p;
    p.objective = {Rational(1), Rational(1)};
    p.sense = Sense::Min;
    p.rows.push_back(LpRow{{Rational(-1), Rational(0)}, Rational(-1)});
    p.rows.push_back(LpRow{{Rational(0), Rational(-1)}, Rational(-2)});
    const LpOutcome o = lp_solve(p);
    REQUIRE(lp_is_optimal(o));
    const auto& opt = std::get<LpOptimal>(o);
    CHECK(opt.value == 3);
    CHECK(check_duality(p, opt));
}

TEST_CASE("degenerate data tolerated") {
    LpProblem p;
    p.objective = {Rational(1), Rational(0)};
    p.sense = Sense::Max;
    p.rows.push_back(LpRow{{Rational(1), Rational(1)}, Rational(2)});
    p.rows.push_back(LpRow{{Rational(1), Rational(1)}, Rational(2)});  // duplicate
    p.rows.push_back(LpRow{{Rational(0), Rational(0)}, Rational(0)});  // zero row
    p.rows.push_back(LpRow{{Rational(0), Rational(-1)}, Rational(0)});
    const LpOutcome o = lp_solve(p);
    REQUIRE(lp_is_optimal(o));
    const auto& opt = std::get<LpOptimal>(o);
    CHECK(opt.value == 2);
    CHECK(check_duality(p, opt));
}

TEST_CASE("duality certificate on random feasible programs") {
    std::uint64_t s = 2024;
    int optimal_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + mix(s) % 4;
        const std::size_t m = 1 + mix(s) % 6;
        LpProblem p;
        p.sense = (mix(s) % 2) ? Sense::Max : Sense::Min;
        p.objective.resize(n);
        for (auto& c : p.objective) c = small_rat(s);
        for (std::size_t i = 0; i < m; ++i) {
            LpRow row;
            row.normal.resize(n);
            for (auto& c : row.normal) c = small_rat(s);
            row.rhs = small_rat(s);
            p.rows.push_back(std::move(row));
        }
        const LpOutcome o = lp_solve(p);
        if (const auto* opt = std::get_if<LpOptimal>(&o)) {
            ++optimal_seen;
            CHECK(check_duality(p, *opt));
        } else if (const auto* ray = std::get_if<LpUnbounded>(&o)) {
            for (const auto& row : p.rows) CHECK(dot(row.normal, ray->ray) <= 0);
            const Rational gain = dot(p.objective, ray->ray);
            if (p.sense == Sense::Max) {
                CHECK(gain > 0);
            } else {
                CHECK(gain < 0);
            }
        }
    }
    CHECK(optimal_seen > 10);  // the generator must exercise the main path
}
