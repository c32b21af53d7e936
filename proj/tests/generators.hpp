#ifndef APXPOLY_TESTS_GENERATORS_HPP
#define APXPOLY_TESTS_GENERATORS_HPP

#include <cstdint>

#include "apxpoly/convert.hpp"
#include "apxpoly/polyhedron.hpp"

namespace apxpoly::testgen {

inline std::uint64_t mix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline Rational rat_in(std::uint64_t& s, int lo, int hi, int max_den = 4) {
    const std::int64_t span = hi - lo;
    const std::int64_t n = lo + static_cast<std::int64_t>(mix(s) % (span + 1));
    const std::int64_t d = 1 + static_cast<std::int64_t>(mix(s) % max_den);
    return make_rational(BigInt(n * d + static_cast<std::int64_t>(mix(s) % d)), BigInt(d));
}

inline RatVec vec_in(std::uint64_t& s, std::size_t dim, int lo, int hi) {
    RatVec v(dim);
    for (auto& c : v) c = rat_in(s, lo, hi);
    return v;
}

/** Random non-empty generator form: a few points, optionally a few rays. */
inline VPolyhedron random_vpoly(std::uint64_t& s, std::size_t dim, std::size_t npts,
                                std::size_t nrays) {
    RatMat pts;
    for (std::size_t i = 0; i < npts; ++i) pts.push_back(vec_in(s, dim, -3, 3));
    RatMat rays;
    while (rays.size() < nrays) {
        RatVec r = vec_in(s, dim, -2, 2);
        if (!is_zero_vec(r)) rays.push_back(std::move(r));
    }
    return VPolyhedron(dim, std::move(pts), std::move(rays));
}

inline HPolyhedron random_hpoly(std::uint64_t& s, std::size_t dim, std::size_t npts,
                                std::size_t nrays) {
    return hrep_of(random_vpoly(s, dim, npts, nrays));
}

}  // namespace apxpoly::testgen

#endif
