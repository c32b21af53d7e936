#include "apxpoly/cones.hpp"

#include "apxpoly/errors.hpp"
#include "apxpoly/support.hpp"

namespace apxpoly {

PolyhedralCone recession_cone(const HPolyhedron& p) {
    if (!is_nonempty(p)) throw EmptyPolyhedron();
    RatMat normals;
    for (const auto& r : p.rows) normals.push_back(r.normal);
    return PolyhedralCone::from_rows(p.ambient_dim, std::move(normals));
}

RatMat lineality_space(const HPolyhedron& p) {
    if (!is_nonempty(p)) throw EmptyPolyhedron();
    RatMat normals;
    for (const auto& r : p.rows) {
        if (!is_zero_vec(r.normal)) normals.push_back(r.normal);
    }
    if (normals.empty()) {
        RatMat basis;
        for (std::size_t i = 0; i < p.ambient_dim; ++i) basis.push_back(unit_vec(p.ambient_dim, i));
        return basis;
    }
    return nullspace(normals);
}

PolyhedralCone polar_cone(const PolyhedralCone& k) {
    if (k.is_h_form()) {
        return PolyhedralCone::from_generators(k.ambient_dim(), k.data());
    }
    return PolyhedralCone::from_rows(k.ambient_dim(), k.data());
}

VPolyhedron minkowski_sum_cone(const VPolyhedron& q, const PolyhedralCone& k) {
    if (q.ambient_dim != k.ambient_dim()) throw DimensionMismatch("summand dimensions differ");
    RatMat rays = q.rays;
    for (const auto& g : cone_generator_list(k)) rays.push_back(g);
    return VPolyhedron(q.ambient_dim, q.points, std::move(rays));
}

RatMat cone_generator_list(const PolyhedralCone& k) {
    if (!k.is_h_form()) return k.data();
    const ConeGenerators gen = cone_generators_from_rows(k.data(), k.ambient_dim());
    RatMat out = gen.rays;
    for (const auto& l : gen.lines) {
        out.push_back(l);
        out.push_back(vec_scale(-1, l));
    }
    return out;
}

RatMat cone_row_list(const PolyhedralCone& k) {
    if (k.is_h_form()) return k.data();
    return cone_rows_from_generators(k.data(), k.ambient_dim());
}

bool cone_contains(const PolyhedralCone& k, const RatVec& x) {
    if (x.size() != k.ambient_dim()) throw DimensionMismatch("cone membership dimension");
    for (const auto& row : cone_row_list(k)) {
        if (dot(row, x) > 0) return false;
    }
    return true;
}

std::optional<RatVec> cone_subset_witness(const PolyhedralCone& a, const PolyhedralCone& b) {
    const RatMat rows_b = cone_row_list(b);
    for (const auto& g : cone_generator_list(a)) {
        for (const auto& row : rows_b) {
            if (dot(row, g) > 0) return g;
        }
    }
    return std::nullopt;
}

bool cone_subset(const PolyhedralCone& a, const PolyhedralCone& b) {
    return !cone_subset_witness(a, b).has_value();
}

bool cone_equal(const PolyhedralCone& a, const PolyhedralCone& b) {
    return cone_subset(a, b) && cone_subset(b, a);
}

bool cone_is_trivial(const PolyhedralCone& k) {
    for (const auto& g : cone_generator_list(k)) {
        if (!is_zero_vec(g)) return false;
    }
    return true;
}

}  // namespace apxpoly
