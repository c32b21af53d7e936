#include "apxpoly/norm.hpp"

#include "apxpoly/errors.hpp"

namespace apxpoly {

Norm dual_norm(Norm n) { return n == Norm::Sup ? Norm::Sum : Norm::Sup; }

Rational norm_value(Norm n, const RatVec& x) {
    Rational v = 0;
    if (n == Norm::Sup) {
        for (const auto& c : x) v = std::max(v, rat_abs(c));
    } else {
        for (const auto& c : x) v += rat_abs(c);
    }
    return v;
}

std::vector<std::pair<RatVec, Rational>> ball_rows(Norm n, std::size_t dim, const Rational& r) {
    std::vector<std::pair<RatVec, Rational>> rows;
    if (n == Norm::Sup) {
        for (std::size_t i = 0; i < dim; ++i) {
            rows.emplace_back(unit_vec(dim, i), r);
            rows.emplace_back(vec_scale(-1, unit_vec(dim, i)), r);
        }
        return rows;
    }
    // sum norm: one row per sign pattern
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        RatVec row(dim);
        for (std::size_t i = 0; i < dim; ++i) row[i] = (mask >> i) & 1 ? Rational(1) : Rational(-1);
        rows.emplace_back(std::move(row), r);
    }
    return rows;
}

RatMat ball_vertices(Norm n, std::size_t dim, const Rational& r) {
    RatMat verts;
    if (n == Norm::Sum) {
        for (std::size_t i = 0; i < dim; ++i) {
            verts.push_back(vec_scale(r, unit_vec(dim, i)));
            verts.push_back(vec_scale(-r, unit_vec(dim, i)));
        }
        return verts;
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        RatVec v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = (mask >> i) & 1 ? r : Rational(-r);
        verts.push_back(std::move(v));
    }
    return verts;
}

std::string norm_name(Norm n) { return n == Norm::Sup ? "sup" : "sum"; }

Norm parse_norm(const std::string& name) {
    if (name == "sup" || name == "supnorm") return Norm::Sup;
    if (name == "sum" || name == "sumnorm") return Norm::Sum;
    throw ParseError("unknown norm: " + name);
}

}  // namespace apxpoly
