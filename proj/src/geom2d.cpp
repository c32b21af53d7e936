#include "apxpoly/geom2d.hpp"

#include <algorithm>

#include "apxpoly/errors.hpp"

namespace apxpoly {

namespace {

Rational cross(const RatVec& o, const RatVec& a, const RatVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

RatMat convex_hull_2d(const RatMat& points) {
    RatMat pts;
    for (const auto& p : points) {
        if (p.size() != 2) throw DimensionMismatch("hull input must be planar");
        pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    RatMat hull(2 * n, RatVec{});
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower_end = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper
        while (k >= lower_end && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

Rational dist_to_segment(const RatVec& p, const RatVec& a, const RatVec& b, Norm norm) {
    // the norm of (X(t), Y(t)) = a + t(b-a) - p is piecewise linear in t;
    // minimize over the breakpoint candidates
    const Rational dx = b[0] - a[0], dy = b[1] - a[1];
    const Rational cx = a[0] - p[0], cy = a[1] - p[1];
    std::vector<Rational> candidates{Rational(0), Rational(1)};
    const auto add_root = [&](const Rational& numer, const Rational& denom) {
        if (denom == 0) return;
        const Rational t = numer / denom;
        if (t > 0 && t < 1) candidates.push_back(t);
    };
    add_root(-cx, dx);            // X(t) = 0
    add_root(-cy, dy);            // Y(t) = 0
    add_root(cy - cx, dx - dy);   // X(t) = Y(t)
    add_root(-cy - cx, dx + dy);  // X(t) = -Y(t)
    Rational best;
    bool first = true;
    for (const auto& t : candidates) {
        const RatVec q{cx + t * dx, cy + t * dy};
        const Rational v = norm_value(norm, q);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

EpiRegion2D::EpiRegion2D(const RatMat& points) {
    RatMat pts = points;
    for (const auto& p : pts) {
        if (p.size() != 2) throw DimensionMismatch("region point must be planar");
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) throw Error("region needs at least one point");
    // lower convex chain over x; for ties in x only the lowest y matters
    RatMat filtered;
    for (const auto& p : pts) {
        if (!filtered.empty() && filtered.back()[0] == p[0]) continue;  // sorted: first y is lowest
        filtered.push_back(p);
    }
    for (const auto& p : filtered) {
        while (chain_.size() >= 2 && cross(chain_[chain_.size() - 2], chain_.back(), p) <= 0) {
            chain_.pop_back();
        }
        chain_.push_back(p);
    }
    x_min_ = chain_.front()[0];
    x_max_ = chain_.back()[0];
}

Rational EpiRegion2D::lower_at(const Rational& x) const {
    if (x < x_min_ || x > x_max_) throw Error("abscissa outside the region range");
    std::size_t lo = 0, hi = chain_.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (chain_[mid][0] <= x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (chain_[lo][0] == x || hi == lo) return chain_[lo][1];
    const RatVec& a = chain_[lo];
    const RatVec& b = chain_[hi];
    return a[1] + (x - a[0]) * (b[1] - a[1]) / (b[0] - a[0]);
}

bool EpiRegion2D::contains(const RatVec& p) const {
    if (p.size() != 2) throw DimensionMismatch("region point must be planar");
    if (p[0] < x_min_ || p[0] > x_max_) return false;
    return p[1] >= lower_at(p[0]);
}

Rational EpiRegion2D::distance(const RatVec& p, Norm norm) const {
    if (contains(p)) return Rational(0);
    // cost of reaching the vertical extrusion of a boundary point: the
    // vertical gap only counts when the point is above us
    const auto point_cost = [&](const RatVec& v) {
        const Rational dx = rat_abs(v[0] - p[0]);
        const Rational dy = std::max(Rational(0), Rational(v[1] - p[1]));
        return norm == Norm::Sup ? std::max(dx, dy) : Rational(dx + dy);
    };
    // minimum cost over one edge's extrusion: piecewise linear in the edge
    // parameter, decided exactly at the breakpoint candidates
    const auto edge_cost = [&](const RatVec& a, const RatVec& b) {
        const Rational dx = b[0] - a[0], dy = b[1] - a[1];
        const Rational cx = a[0] - p[0], cy = a[1] - p[1];
        Rational best_here = std::min(point_cost(a), point_cost(b));
        const auto probe = [&](const Rational& numer, const Rational& denom) {
            if (denom == 0) return;
            const Rational t = numer / denom;
            if (t <= 0 || t >= 1) return;
            best_here = std::min(best_here, point_cost(RatVec{a[0] + t * dx, a[1] + t * dy}));
        };
        probe(-cx, dx);            // X(t) = px
        probe(-cy, dy);            // Y(t) = py
        probe(cy - cx, dx - dy);   // X - px = Y - py
        probe(-cy - cx, dx + dy);  // -(X - px) = Y - py
        return best_here;
    };
    // the cost along the chain is convex in the abscissa: locate the vertex
    // where consecutive differences turn non-negative, then only its two
    // incident edges can hold the minimum
    std::size_t lo = 0;
    std::size_t hi = chain_.size() - 1;
    while (lo < hi) {  // first index with cost(v[i+1]) >= cost(v[i])
        const std::size_t mid = (lo + hi) / 2;
        if (point_cost(chain_[mid + 1]) < point_cost(chain_[mid])) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Rational best = point_cost(chain_[lo]);
    if (lo > 0) best = std::min(best, edge_cost(chain_[lo - 1], chain_[lo]));
    if (lo + 1 < chain_.size()) best = std::min(best, edge_cost(chain_[lo], chain_[lo + 1]));
    return best;
}

}  // namespace apxpoly
