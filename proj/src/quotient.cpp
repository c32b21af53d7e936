#include "apxpoly/quotient.hpp"

#include "apxpoly/errors.hpp"
#include "apxpoly/support.hpp"

namespace apxpoly {

QuotientMap make_quotient(const RatMat& kernel_vectors, std::size_t dim) {
    QuotientMap m;
    m.ambient_dim = dim;

    RatMat basis;
    for (const auto& v : kernel_vectors) {
        if (v.size() != dim) throw DimensionMismatch("kernel vector dimension");
        basis.push_back(v);
    }
    std::vector<std::size_t> pivots;
    if (!basis.empty()) {
        pivots = rref(basis);
        basis.resize(pivots.size());  // drop zero rows
    }
    m.kernel_basis = basis;

    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!is_pivot[i]) m.complement_coords.push_back(i);
    }

    const std::size_t k = basis.size();
    // change of basis: kernel vectors first, completing coordinate axes after
    RatMat b(dim, zero_vec(dim));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < dim; ++i) b[i][j] = basis[j][i];
    }
    for (std::size_t j = 0; j < m.complement_coords.size(); ++j) {
        b[m.complement_coords[j]][k + j] = 1;
    }
    const auto b_inv = invert(b);
    if (!b_inv) throw Error("kernel basis and completing axes do not span");
    RatMat mask(dim, zero_vec(dim));
    for (std::size_t j = k; j < dim; ++j) mask[j][j] = 1;
    m.projector = mat_mul(mat_mul(b, mask), *b_inv);
    return m;
}

RatVec quotient_apply(const QuotientMap& m, const RatVec& x) {
    if (x.size() != m.ambient_dim) throw DimensionMismatch("quotient input dimension");
    const RatVec proj = mat_apply(m.projector, x);
    RatVec y(m.complement_coords.size());
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = proj[m.complement_coords[j]];
    return y;
}

RatVec quotient_embed(const QuotientMap& m, const RatVec& y) {
    if (y.size() != m.complement_coords.size()) throw DimensionMismatch("quotient coordinate count");
    RatVec x = zero_vec(m.ambient_dim);
    for (std::size_t j = 0; j < y.size(); ++j) x[m.complement_coords[j]] = y[j];
    return x;
}

HPolyhedron quotient_project(const QuotientMap& m, const HPolyhedron& p) {
    if (p.ambient_dim != m.ambient_dim) throw DimensionMismatch("quotient input dimension");
    for (const auto& v : m.kernel_basis) {
        for (const auto& row : p.rows) {
            if (dot(row.normal, v) != 0) throw KernelNotInLineality();
        }
    }
    HPolyhedron image(m.complement_coords.size(), {});
    for (const auto& row : p.rows) {
        RatVec normal(m.complement_coords.size());
        for (std::size_t j = 0; j < normal.size(); ++j) normal[j] = row.normal[m.complement_coords[j]];
        image.add_row(std::move(normal), row.offset);
    }
    return image;
}

VPolyhedron quotient_project(const QuotientMap& m, const VPolyhedron& q) {
    if (q.ambient_dim != m.ambient_dim) throw DimensionMismatch("quotient input dimension");
    RatMat points;
    for (const auto& p : q.points) points.push_back(quotient_apply(m, p));
    RatMat rays;
    for (const auto& r : q.rays) {
        RatVec image = quotient_apply(m, r);
        if (!is_zero_vec(image)) rays.push_back(std::move(image));
    }
    return VPolyhedron(m.complement_coords.size(), std::move(points), std::move(rays));
}

Rational quotient_norm(const QuotientMap& m, const RatVec& x, Norm norm) {
    if (x.size() != m.ambient_dim) throw DimensionMismatch("quotient input dimension");
    if (m.kernel_basis.empty()) return norm_value(norm, x);
    // the subspace as an H-form: annihilated by every direction orthogonal
    // to it, i.e. by a basis of the null space of the kernel rows
    const RatMat ann = nullspace(m.kernel_basis);
    HPolyhedron z(m.ambient_dim, {});
    for (const auto& w : ann) {
        z.add_row(w, Rational(0));
        z.add_row(vec_scale(-1, w), Rational(0));
    }
    return point_distance(x, z, norm);
}

}  // namespace apxpoly
