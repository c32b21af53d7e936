#include "apxpoly/polyhedron.hpp"

#include "apxpoly/errors.hpp"

namespace apxpoly {

HPolyhedron::HPolyhedron(std::size_t dim, std::vector<HalfSpace> rs)
    : ambient_dim(dim), rows(std::move(rs)) {
    for (const auto& r : rows) {
        if (r.normal.size() != ambient_dim) throw DimensionMismatch("half-space normal length");
    }
}

HPolyhedron& HPolyhedron::add_row(RatVec normal, Rational offset) {
    if (normal.size() != ambient_dim) throw DimensionMismatch("half-space normal length");
    rows.push_back(HalfSpace{std::move(normal), std::move(offset)});
    return *this;
}

bool HPolyhedron::contains(const RatVec& point) const {
    if (point.size() != ambient_dim) throw DimensionMismatch("point dimension");
    for (const auto& r : rows) {
        if (dot(r.normal, point) > r.offset) return false;
    }
    return true;
}

VPolyhedron::VPolyhedron(std::size_t dim, RatMat pts, RatMat rys)
    : ambient_dim(dim), points(std::move(pts)), rays(std::move(rys)) {
    if (points.empty()) throw Error("a generator representation needs at least one point");
    for (const auto& p : points) {
        if (p.size() != ambient_dim) throw DimensionMismatch("generator point dimension");
    }
    for (const auto& r : rays) {
        if (r.size() != ambient_dim) throw DimensionMismatch("generator ray dimension");
    }
}

PolyhedralCone PolyhedralCone::from_rows(std::size_t dim, RatMat normals) {
    for (const auto& n : normals) {
        if (n.size() != dim) throw DimensionMismatch("cone normal dimension");
    }
    return PolyhedralCone(dim, std::move(normals), true);
}

PolyhedralCone PolyhedralCone::from_generators(std::size_t dim, RatMat generators) {
    RatMat gens;
    for (auto& g : generators) {
        if (g.size() != dim) throw DimensionMismatch("cone generator dimension");
        if (!is_zero_vec(g)) gens.push_back(std::move(g));
    }
    return PolyhedralCone(dim, std::move(gens), false);
}

PolyhedralCone PolyhedralCone::trivial(std::size_t dim) {
    return PolyhedralCone(dim, RatMat{}, false);
}

HPolyhedron PolyhedralCone::as_hpolyhedron() const {
    if (!h_form_) throw Error("cone is stored in generator form");
    HPolyhedron h(dim_, {});
    for (const auto& n : data_) h.add_row(n, Rational(0));
    return h;
}

VPolyhedron PolyhedralCone::as_vpolyhedron() const {
    if (h_form_) throw Error("cone is stored in half-space form");
    return VPolyhedron(dim_, RatMat{zero_vec(dim_)}, data_);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RatMat probe_directions(std::size_t dim, std::size_t count, std::uint64_t seed) {
    RatMat dirs;
    std::uint64_t state = seed;
    while (dirs.size() < count) {
        RatVec d(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const std::int64_t numerator = static_cast<std::int64_t>(splitmix64(state) % 41) - 20;
            const std::int64_t denominator = 1 + static_cast<std::int64_t>(splitmix64(state) % 7);
            d[i] = make_rational(BigInt(numerator), BigInt(denominator));
        }
        if (!is_zero_vec(d)) dirs.push_back(std::move(d));
    }
    return dirs;
}

}  // namespace apxpoly
