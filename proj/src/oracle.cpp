#include "apxpoly/oracle.hpp"

#include <algorithm>

#include "apxpoly/errors.hpp"
#include "apxpoly/lp.hpp"

namespace apxpoly {

namespace {

// min of x^2 over [lo, hi]
Rational min_square_over(const Rational& lo, const Rational& hi) {
    if (lo <= 0 && 0 <= hi) return Rational(0);
    const Rational a = lo * lo;
    const Rational b = hi * hi;
    return std::min(a, b);
}

}  // namespace

ConvexBodyOracle ConvexBodyOracle::parabola() { return ConvexBodyOracle(BodyKind::Parabola); }

ConvexBodyOracle ConvexBodyOracle::hyperbola() { return ConvexBodyOracle(BodyKind::Hyperbola); }

ConvexBodyOracle ConvexBodyOracle::from_hpolyhedron(HPolyhedron p) {
    ConvexBodyOracle o(BodyKind::HPolyBacked);
    o.backing_ = std::move(p);
    return o;
}

std::size_t ConvexBodyOracle::ambient_dim() const {
    return is_epigraph() ? 2 : backing_->ambient_dim;
}

const HPolyhedron& ConvexBodyOracle::backing() const {
    if (!backing_) throw UnsupportedBody("oracle has no half-space backing");
    return *backing_;
}

bool ConvexBodyOracle::contains(const RatVec& point) const {
    if (point.size() != ambient_dim()) throw DimensionMismatch("oracle point dimension");
    switch (kind_) {
        case BodyKind::Parabola:
            return point[1] >= point[0] * point[0];
        case BodyKind::Hyperbola:
            return point[1] >= 0 && point[1] * point[1] >= point[0] * point[0] + 1;
        case BodyKind::HPolyBacked:
            return backing_->contains(point);
    }
    return false;
}

bool ConvexBodyOracle::distance_leq(const RatVec& point, const Rational& s, Norm norm) const {
    if (point.size() != ambient_dim()) throw DimensionMismatch("oracle point dimension");
    if (s < 0) return false;
    const Rational px = is_epigraph() ? point[0] : Rational(0);
    const Rational py = is_epigraph() ? point[1] : Rational(0);
    switch (kind_) {
        case BodyKind::Parabola: {
            if (norm == Norm::Sup) {
                return min_square_over(px - s, px + s) <= py + s;
            }
            // candidates: kinks of |x-px| and of max(0, x^2-py), plus the
            // smooth vertices of the quadratic pieces at x = -1/2, 1/2
            const auto value_leq_at = [&](const Rational& x) {
                const Rational cost = rat_abs(x - px) + std::max(Rational(0), Rational(x * x - py));
                return cost <= s;
            };
            if (value_leq_at(px)) return true;
            if (value_leq_at(make_rational(1, 2))) return true;
            if (value_leq_at(make_rational(-1, 2))) return true;
            if (py >= 0) {
                // g(+sqrt(py)) = |sqrt(py) - px| <= s, one radical per side
                if (compare_sqrt(py, px - s) >= 0 && compare_sqrt(py, px + s) <= 0) return true;
                if (compare_sqrt(py, -px - s) >= 0 && compare_sqrt(py, -px + s) <= 0) return true;
            }
            return false;
        }
        case BodyKind::Hyperbola: {
            if (norm == Norm::Sup) {
                if (py + s < 1) return false;
                return min_square_over(px - s, px + s) <= (py + s) * (py + s) - 1;
            }
            // cost at x = px is the vertical reach
            if (py + s >= 1 && px * px + 1 <= (py + s) * (py + s)) return true;
            if (py >= 1) {
                // g(+-sqrt(py^2-1)) = |x - px|
                const Rational w = py * py - 1;
                if (compare_sqrt(w, px - s) >= 0 && compare_sqrt(w, px + s) <= 0) return true;
                if (compare_sqrt(w, -px - s) >= 0 && compare_sqrt(w, -px + s) <= 0) return true;
            }
            return false;
        }
        case BodyKind::HPolyBacked:
            return point_distance(point, *backing_, norm) <= s;
    }
    return false;
}

std::pair<Rational, Rational> ConvexBodyOracle::distance_enclosure(const RatVec& point,
                                                                   const Rational& tol,
                                                                   Norm norm) const {
    if (tol <= 0) throw Error("distance enclosure needs positive tolerance");
    if (kind_ == BodyKind::HPolyBacked) {
        const Rational d = point_distance(point, *backing_, norm);
        return {d, d};
    }
    if (distance_leq(point, Rational(0), norm)) return {Rational(0), Rational(0)};
    Rational hi = 1;
    while (!distance_leq(point, hi, norm)) hi *= 2;
    Rational lo = 0;
    while (hi - lo > tol) {
        const Rational mid = (lo + hi) / 2;
        if (distance_leq(point, mid, norm)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {lo, hi};
}

PolyhedralCone ConvexBodyOracle::recession_cone() const {
    switch (kind_) {
        case BodyKind::Parabola:
            return PolyhedralCone::from_generators(2, {RatVec{Rational(0), Rational(1)}});
        case BodyKind::Hyperbola:
            return PolyhedralCone::from_generators(
                2, {RatVec{Rational(1), Rational(1)}, RatVec{Rational(-1), Rational(1)}});
        case BodyKind::HPolyBacked: {
            RatMat normals;
            for (const auto& r : backing_->rows) normals.push_back(r.normal);
            return PolyhedralCone::from_rows(backing_->ambient_dim, std::move(normals));
        }
    }
    throw UnsupportedBody();
}

bool ConvexBodyOracle::recession_contains(const RatVec& v) const {
    switch (kind_) {
        case BodyKind::Parabola:
            return v[0] == 0 && v[1] >= 0;
        case BodyKind::Hyperbola:
            return v[1] >= rat_abs(v[0]);
        case BodyKind::HPolyBacked: {
            for (const auto& r : backing_->rows) {
                if (dot(r.normal, v) > 0) return false;
            }
            return true;
        }
    }
    return false;
}

OracleSupport ConvexBodyOracle::support(const RatVec& direction, const Rational& tol) const {
    OracleSupport out;
    if (kind_ == BodyKind::HPolyBacked) {
        const SupportOutcome s = support_value(*backing_, direction);
        out.finite = support_is_finite(s);
        if (out.finite) out.exact = std::get<SupportFinite>(s).value;
        return out;
    }
    const Rational ux = direction[0];
    const Rational uy = direction[1];
    if (uy > 0 || (uy == 0 && ux != 0)) {
        out.finite = false;
        return out;
    }
    if (ux == 0 && uy == 0) {
        out.finite = true;
        out.exact = Rational(0);
        return out;
    }
    out.finite = true;
    if (kind_ == BodyKind::Parabola) {
        // max of ux*x + uy*x^2 at x = -ux/(2*uy)
        out.exact = -(ux * ux) / (4 * uy);
        return out;
    }
    // hyperbola, uy < 0: finite iff |ux| <= |uy|; value -sqrt(uy^2 - ux^2)
    if (rat_abs(ux) > rat_abs(uy)) {
        out.finite = false;
        return out;
    }
    const Rational radicand = uy * uy - ux * ux;
    const BigInt rn = num(radicand), rd = den(radicand);
    const BigInt sn = isqrt_floor(rn), sd = isqrt_floor(rd);
    if (sn * sn == rn && sd * sd == rd) {
        out.exact = -make_rational(sn, sd);
        return out;
    }
    const Rational lo = sqrt_lower(radicand, tol), hi = sqrt_upper(radicand, tol);
    out.enclosure = std::make_pair(-hi, -lo);
    return out;
}

RatVec ConvexBodyOracle::interior_point() const {
    switch (kind_) {
        case BodyKind::Parabola:
            return RatVec{Rational(0), Rational(1)};
        case BodyKind::Hyperbola:
            return RatVec{Rational(0), Rational(2)};
        case BodyKind::HPolyBacked: {
            // widest inscribed sup-ball center
            const std::size_t n = backing_->ambient_dim;
            LpProblem lp;
            lp.sense = Sense::Max;
            lp.objective = zero_vec(n + 1);
            lp.objective[n] = 1;
            for (const auto& r : backing_->rows) {
                RatVec row = r.normal;
                row.push_back(norm_value(Norm::Sum, r.normal));
                lp.rows.push_back(LpRow{std::move(row), r.offset});
            }
            RatVec cap = zero_vec(n + 1);
            cap[n] = 1;
            lp.rows.push_back(LpRow{std::move(cap), Rational(1)});
            const LpOutcome o = lp_solve(lp);
            const auto* opt = std::get_if<LpOptimal>(&o);
            if (!opt || opt->value <= 0) throw PreconditionUnsatisfied("body has no interior point");
            return RatVec(opt->point.begin(), opt->point.begin() + n);
        }
    }
    throw UnsupportedBody();
}

std::pair<RatVec, RatVec> ConvexBodyOracle::aligned_basis() const {
    switch (kind_) {
        case BodyKind::Parabola:
            return {RatVec{Rational(0), Rational(1)}, RatVec{Rational(1), Rational(0)}};
        case BodyKind::Hyperbola:
            return {RatVec{Rational(1), Rational(1)}, RatVec{Rational(-1), Rational(1)}};
        case BodyKind::HPolyBacked:
            throw UnsupportedBody("aligned frame is defined for the epigraph kinds");
    }
    throw UnsupportedBody();
}

Rational ConvexBodyOracle::boundary_inner_y(const Rational& x, const Rational& prec) const {
    switch (kind_) {
        case BodyKind::Parabola:
            return x * x;
        case BodyKind::Hyperbola:
            return sqrt_upper(x * x + 1, prec);
        case BodyKind::HPolyBacked:
            throw UnsupportedBody("boundary profile is defined for the epigraph kinds");
    }
    throw UnsupportedBody();
}

Rational ConvexBodyOracle::sagitta_bound(const Rational& x0, const Rational& x1) const {
    const Rational dx = rat_abs(x1 - x0);
    switch (kind_) {
        case BodyKind::Parabola:
            return dx * dx / 4;  // exact chord deviation of x^2
        case BodyKind::Hyperbola:
            return dx * dx / 8;  // curvature of sqrt(x^2+1) is at most 1
        case BodyKind::HPolyBacked:
            throw UnsupportedBody("boundary profile is defined for the epigraph kinds");
    }
    throw UnsupportedBody();
}

Rational ConvexBodyOracle::x_window(const Rational& r) const {
    switch (kind_) {
        case BodyKind::Parabola: {
            if (r < 0) return Rational(0);
            // largest |x| with x^2 <= r, rounded down to keep samples inside
            const Rational lo = sqrt_lower(r, make_rational(1, 16));
            return std::min(lo, r);
        }
        case BodyKind::Hyperbola: {
            if (r < 1) return Rational(0);
            const Rational lo = sqrt_lower(r * r - 1, make_rational(1, 16));
            return std::min(lo, r);
        }
        case BodyKind::HPolyBacked:
            throw UnsupportedBody("boundary profile is defined for the epigraph kinds");
    }
    throw UnsupportedBody();
}

EpigraphPolygon polygonize_epigraph(const ConvexBodyOracle& body, const Rational& x_lo,
                                    const Rational& x_hi, const Rational& step,
                                    const Rational& prec) {
    if (!body.is_epigraph()) throw UnsupportedBody("polygonization needs an epigraph body");
    if (step <= 0 || x_hi < x_lo) throw Error("bad polygonization window");
    EpigraphPolygon out;
    Rational worst_gap = 0;
    Rational x = x_lo;
    Rational prev = x_lo;
    bool first = true;
    for (;;) {
        out.samples.push_back(RatVec{x, body.boundary_inner_y(x, prec)});
        if (!first) worst_gap = std::max(worst_gap, body.sagitta_bound(prev, x));
        first = false;
        prev = x;
        if (x == x_hi) break;
        x = std::min(Rational(x + step), x_hi);
    }
    out.error_bound = worst_gap + prec;
    return out;
}

}  // namespace apxpoly
