#include "apxpoly/hiding.hpp"

#include <algorithm>
#include <map>

#include "apxpoly/convert.hpp"
#include "apxpoly/errors.hpp"
#include "apxpoly/lp.hpp"
#include "apxpoly/support.hpp"

namespace apxpoly {

namespace {

// sign of dy*sqrt(w) - b with w >= 0 rational: one radical, exact
int sign_with_radical(const Rational& dy, const Rational& w, const Rational& b) {
    if (dy == 0) return -rat_sign(b);
    if (dy > 0) {
        if (b <= 0) return 1;
        return rat_sign(dy * dy * w - b * b);
    }
    if (b >= 0) return -1;
    return -rat_sign(dy * dy * w - b * b);
}

std::optional<Rational> segment_member_hpoly(const RatVec& a, const RatVec& b,
                                             const HPolyhedron& body) {
    Rational lo = 0, hi = 1;
    const RatVec d = vec_sub(b, a);
    for (const auto& row : body.rows) {
        const Rational speed = dot(row.normal, d);
        const Rational slack = row.offset - dot(row.normal, a);
        if (speed == 0) {
            if (slack < 0) return std::nullopt;
        } else if (speed > 0) {
            hi = std::min(hi, Rational(slack / speed));
        } else {
            lo = std::max(lo, Rational(slack / speed));
        }
    }
    if (lo > hi) return std::nullopt;
    return (lo + hi) / 2;
}

// membership along the segment is a rational quadratic inequality
std::optional<Rational> segment_member_parabola(const RatVec& a, const RatVec& b) {
    const Rational dx = b[0] - a[0], dy = b[1] - a[1];
    const Rational alpha = dx * dx;
    const Rational beta = 2 * a[0] * dx - dy;
    const Rational gamma = a[0] * a[0] - a[1];
    const auto value = [&](const Rational& t) { return alpha * t * t + beta * t + gamma; };
    if (alpha > 0) {
        Rational vertex = -beta / (2 * alpha);
        if (vertex < 0) vertex = 0;
        if (vertex > 1) vertex = 1;
        if (value(vertex) <= 0) return vertex;
        return std::nullopt;
    }
    // alpha == 0: linear
    if (beta == 0) {
        if (gamma <= 0) return make_rational(1, 2);
        return std::nullopt;
    }
    const Rational bound = -gamma / beta;
    if (beta > 0) {
        if (bound < 0) return std::nullopt;
        return std::min(bound, Rational(1)) / 2;
    }
    if (bound > 1) return std::nullopt;
    const Rational start = std::max(bound, Rational(0));
    return (start + 1) / 2;
}

// the depth y(t) - sqrt(x(t)^2 + 1) is concave; walk its slope sign
std::optional<Rational> segment_member_hyperbola(const RatVec& a, const RatVec& b,
                                                 const ConvexBodyOracle& body,
                                                 const Rational& tol) {
    const Rational dx = b[0] - a[0], dy = b[1] - a[1];
    const auto member = [&](const Rational& t) {
        return body.contains({a[0] + t * dx, a[1] + t * dy});
    };
    const auto slope_sign = [&](const Rational& t) {
        const Rational x = a[0] + t * dx;
        return sign_with_radical(dy, x * x + 1, dx * x);
    };
    if (member(Rational(0))) return Rational(0);
    if (member(Rational(1))) return Rational(1);
    if (slope_sign(Rational(0)) <= 0) return std::nullopt;  // depth peaks at the start
    if (slope_sign(Rational(1)) >= 0) return std::nullopt;  // depth peaks at the end
    Rational lo = 0, hi = 1;
    while (hi - lo > tol) {
        const Rational mid = (lo + hi) / 2;
        if (member(mid)) return mid;
        const int s = slope_sign(mid);
        if (s == 0) return std::nullopt;  // exact peak is dry, so the segment misses
        if (s > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::nullopt;
}

ConvexBodyOracle cone_as_body(const PolyhedralCone& cone) {
    HPolyhedron h(cone.ambient_dim(), {});
    for (const auto& row : cone_row_list(cone)) h.add_row(row, Rational(0));
    return ConvexBodyOracle::from_hpolyhedron(std::move(h));
}

void fill_body_descriptor(HidingWitness& w, const ConvexBodyOracle& body) {
    w.body_kind = body.kind();
    if (body.kind() == BodyKind::HPolyBacked) w.body_hform = body.backing();
}

// --- exact norm programs used by the biorthogonal construction ---

struct NormFit {
    Rational value;
    RatVec combo;  // the optimizing linear combination (or point)
};

// min over c of ||target - sum c_i span_i|| in the given norm
NormFit distance_to_span(const RatVec& target, const RatMat& span, Norm norm) {
    const std::size_t n = target.size();
    const std::size_t k = span.size();
    if (k == 0) return NormFit{norm_value(norm, target), zero_vec(n)};
    LpProblem lp;
    lp.sense = Sense::Min;
    const std::size_t aux = norm == Norm::Sup ? 1 : n;
    lp.objective = zero_vec(k + aux);
    for (std::size_t j = 0; j < aux; ++j) lp.objective[k + j] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        RatVec up = zero_vec(k + aux);
        RatVec down = zero_vec(k + aux);
        for (std::size_t j = 0; j < k; ++j) {
            up[j] = -span[j][i];
            down[j] = span[j][i];
        }
        const std::size_t slot = norm == Norm::Sup ? k : k + i;
        up[slot] = -1;
        down[slot] = -1;
        (void)slot;
        if (norm == Norm::Sup) {
            up[k] = -1;
            down[k] = -1;
        } else {
            up[k + i] = -1;
            down[k + i] = -1;
        }
        lp.rows.push_back(LpRow{std::move(up), -target[i]});
        lp.rows.push_back(LpRow{std::move(down), target[i]});
    }
    const LpOutcome o = lp_solve(lp);
    const auto* opt = std::get_if<LpOptimal>(&o);
    if (!opt) throw Error("distance-to-span program must be solvable");
    RatVec combo = zero_vec(n);
    for (std::size_t j = 0; j < k; ++j) combo = vec_add(combo, vec_scale(opt->point[j], span[j]));
    return NormFit{opt->value, std::move(combo)};
}

// min ||x|| subject to lead . x = 1 and others . x = 0; for the sup norm a
// secondary sum-norm pass over the optimal face keeps the pick sparse
NormFit min_norm_interpolation(const RatVec& lead, const RatMat& others, Norm norm) {
    const std::size_t n = lead.size();
    const auto build = [&](Norm obj_norm, const std::optional<Rational>& sup_cap) {
        LpProblem lp;
        lp.sense = Sense::Min;
        const std::size_t aux = obj_norm == Norm::Sup ? 1 : n;
        lp.objective = zero_vec(n + aux);
        for (std::size_t j = 0; j < aux; ++j) lp.objective[n + j] = 1;
        const auto equality = [&](const RatVec& f, const Rational& rhs) {
            RatVec up = f;
            up.resize(n + aux, Rational(0));
            RatVec down = vec_scale(-1, f);
            down.resize(n + aux, Rational(0));
            lp.rows.push_back(LpRow{std::move(up), rhs});
            lp.rows.push_back(LpRow{std::move(down), -rhs});
        };
        equality(lead, Rational(1));
        for (const auto& f : others) equality(f, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            RatVec up = zero_vec(n + aux);
            RatVec down = zero_vec(n + aux);
            up[i] = 1;
            down[i] = -1;
            const std::size_t slot = obj_norm == Norm::Sup ? n : n + i;
            up[slot] = -1;
            down[slot] = -1;
            lp.rows.push_back(LpRow{std::move(up), Rational(0)});
            lp.rows.push_back(LpRow{std::move(down), Rational(0)});
        }
        if (sup_cap) {
            for (std::size_t i = 0; i < n; ++i) {
                RatVec up = zero_vec(n + aux);
                RatVec down = zero_vec(n + aux);
                up[i] = 1;
                down[i] = -1;
                lp.rows.push_back(LpRow{std::move(up), *sup_cap});
                lp.rows.push_back(LpRow{std::move(down), *sup_cap});
            }
        }
        return lp;
    };
    const LpOutcome o1 = lp_solve(build(norm, std::nullopt));
    const auto* opt1 = std::get_if<LpOptimal>(&o1);
    if (!opt1) throw DimensionExhausted("interpolation program infeasible");
    const Rational value = opt1->value;
    RatVec x(opt1->point.begin(), opt1->point.begin() + n);
    if (norm == Norm::Sup) {
        const LpOutcome o2 = lp_solve(build(Norm::Sum, value));
        if (const auto* opt2 = std::get_if<LpOptimal>(&o2)) {
            RatVec y(opt2->point.begin(), opt2->point.begin() + n);
            if (norm_value(norm, y) == value) x = std::move(y);
        }
    }
    return NormFit{value, std::move(x)};
}

RatVec norm_attaining_point(const RatVec& functional, Norm primal_norm) {
    const std::size_t n = functional.size();
    if (primal_norm == Norm::Sup) {
        RatVec w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = functional[i] < 0 ? Rational(-1) : Rational(1);
        return w;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (rat_abs(functional[i]) > rat_abs(functional[best])) best = i;
    }
    RatVec w = zero_vec(n);
    w[best] = functional[best] < 0 ? Rational(-1) : Rational(1);
    return w;
}

BigInt rat_ceil(const Rational& q) {
    const BigInt n = num(q), d = den(q);
    if (n <= 0) return n / d;
    return (n + d - 1) / d;
}

}  // namespace

std::optional<Rational> segment_member(const RatVec& a, const RatVec& b,
                                       const ConvexBodyOracle& body, const Rational& tol) {
    switch (body.kind()) {
        case BodyKind::HPolyBacked:
            return segment_member_hpoly(a, b, body.backing());
        case BodyKind::Parabola:
            return segment_member_parabola(a, b);
        case BodyKind::Hyperbola:
            return segment_member_hyperbola(a, b, body, tol);
    }
    throw UnsupportedBody();
}

HidingWitness verify_hidden_set(const RatMat& a, const ConvexBodyOracle& body,
                                const Rational& tol, Norm norm) {
    if (a.size() < 2) throw PreconditionUnsatisfied("a hidden set needs at least two points");
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] == a[j]) throw PreconditionUnsatisfied("hidden-set points must be distinct");
        }
    }
    HidingWitness w;
    w.points = a;
    fill_body_descriptor(w, body);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (body.contains(a[i])) throw PointInsideBody(i);
        w.distance_lower_bounds.push_back(body.distance_enclosure(a[i], tol, norm).first);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const auto t = segment_member(a[i], a[j], body, tol);
            if (!t) throw SegmentMissesBody(i, j);
            PairCertificate cert;
            cert.i = i;
            cert.j = j;
            cert.t = *t;
            cert.point = vec_add(a[i], vec_scale(*t, vec_sub(a[j], a[i])));
            if (!body.contains(cert.point)) throw Error("certificate point must verify exactly");
            w.certificates.push_back(std::move(cert));
        }
    }
    return w;
}

HullTransfer hull_hiding_transfer(const RatVec& a, const RatVec& b, const RatVec& x,
                                  const RatVec& y, const RatVec& c, const RatVec& c_x,
                                  const RatVec& c_y, const Rational& t_x, const Rational& t_y,
                                  const Rational& t) {
    if (t_x <= 0 || t_x > 1 || t_y <= 0 || t_y > 1 || t < 0 || t > 1) {
        throw DegenerateDecomposition("weights outside their ranges");
    }
    const auto combo = [](const Rational& w, const RatVec& p, const RatVec& q) {
        return vec_add(vec_scale(w, p), vec_scale(1 - w, q));
    };
    if (x != combo(t_x, a, c_x)) throw DegenerateDecomposition("x decomposition fails");
    if (y != combo(t_y, b, c_y)) throw DegenerateDecomposition("y decomposition fails");
    if (c != combo(t, a, b)) throw DegenerateDecomposition("crossing decomposition fails");

    const Rational denom = t * t_y + (1 - t) * t_x;
    if (denom == 0) throw DegenerateDecomposition("zero mixing denominator");
    HullTransfer out;
    out.u = t * t_y / denom;
    out.alpha = out.u * t_x + (1 - out.u) * t_y;
    out.alpha_x = out.u * (1 - t_x);
    out.alpha_y = (1 - out.u) * (1 - t_y);
    if (out.alpha + out.alpha_x + out.alpha_y != 1) throw Error("hull weights must sum to one");
    const RatVec left = combo(out.u, x, y);
    RatVec right = vec_scale(out.alpha, c);
    right = vec_add(right, vec_scale(out.alpha_x, c_x));
    right = vec_add(right, vec_scale(out.alpha_y, c_y));
    if (left != right) throw Error("hull transfer identity must hold exactly");
    return out;
}

HidingWitness inflate_hidden_set(const RatMat& a, const ConvexBodyOracle& body,
                                 const PolyhedralCone& cone, const Rational& tol, Norm norm) {
    const std::size_t dim = body.ambient_dim();
    if (!body.contains(zero_vec(dim))) {
        throw PreconditionUnsatisfied("the origin must lie in the body");
    }
    for (const auto& g : cone_generator_list(cone)) {
        if (!body.recession_contains(g)) {
            throw PreconditionUnsatisfied("the cone must sit inside the body");
        }
    }
    const ConvexBodyOracle cone_body = cone_as_body(cone);
    HidingWitness base;
    try {
        base = verify_hidden_set(a, cone_body, tol, norm);
    } catch (const PointInsideBody&) {
        throw NotHidden("a point of the set lies inside the cone");
    } catch (const SegmentMissesBody&) {
        throw NotHidden("a segment of the set misses the cone");
    }
    for (const auto& p : a) {
        if (body.recession_contains(p)) throw RayInsideCone();
    }
    std::vector<Rational> scales;
    RatMat points;
    HidingWitness w;
    fill_body_descriptor(w, body);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational level = Rational(static_cast<long>(i) + 1);
        const Rational t = ray_level_search(zero_vec(dim), a[i], level, body, norm, tol);
        scales.push_back(t);
        points.push_back(vec_scale(t, a[i]));
        w.distance_lower_bounds.push_back(level);
    }
    w.points = points;
    for (const auto& cert : base.certificates) {
        // crossing a_i + tau (a_j - a_i) means weight (1 - tau) on a_i
        const Rational big_t = 1 - cert.t;
        const Rational denom = big_t * scales[cert.j] + (1 - big_t) * scales[cert.i];
        const Rational u = big_t * scales[cert.j] / denom;
        PairCertificate scaled;
        scaled.i = cert.i;
        scaled.j = cert.j;
        scaled.t = 1 - u;
        scaled.point = vec_add(points[cert.i],
                               vec_scale(scaled.t, vec_sub(points[cert.j], points[cert.i])));
        // the scaled crossing is a positive multiple of the original one
        const Rational scale = scales[cert.i] * scales[cert.j] / denom;
        if (scaled.point != vec_scale(scale, cert.point)) {
            throw Error("scaled crossing must match the positive rescaling exactly");
        }
        if (!cone_body.contains(scaled.point) || !body.contains(scaled.point)) {
            throw Error("scaled crossing must stay inside the cone");
        }
        w.certificates.push_back(std::move(scaled));
    }
    return w;
}

RatMat lift_hidden_set(const QuotientMap& map, const RatMat& a_tilde, const HPolyhedron& body) {
    for (const auto& k : map.kernel_basis) {
        for (const auto& row : body.rows) {
            if (dot(row.normal, k) != 0) throw KernelNotInLineality();
        }
    }
    const HPolyhedron image = quotient_project(map, body);
    std::vector<PairCertificate> certs;
    if (a_tilde.size() >= 2) {
        HidingWitness base;
        try {
            base = verify_hidden_set(a_tilde, ConvexBodyOracle::from_hpolyhedron(image),
                                     make_rational(1, 1024));
        } catch (const PointInsideBody&) {
            throw NotHidden("a point of the set lies inside the image");
        } catch (const SegmentMissesBody&) {
            throw NotHidden("a segment of the set misses the image");
        }
        certs = base.certificates;
    }
    RatMat lifted;
    for (const auto& p : a_tilde) lifted.push_back(quotient_embed(map, p));
    // coset representatives keep every crossing: the representative of an
    // image member stays in the body because the kernel is lineality
    for (const auto& cert : certs) {
        const RatVec crossing =
            vec_add(lifted[cert.i], vec_scale(cert.t, vec_sub(lifted[cert.j], lifted[cert.i])));
        if (!body.contains(crossing)) throw LiftInfeasible();
    }
    return lifted;
}

HidingWitness hidden_set_2d(const ConvexBodyOracle& body, std::size_t n, const Rational& tol,
                            Norm norm, std::size_t budget) {
    if (n == 0) throw PreconditionUnsatisfied("need at least one point");
    if (body.ambient_dim() != 2) throw UnsupportedBody("plane construction only");
    const PolyhedralCone cone = body.recession_cone();
    RatMat gens;
    if (cone.is_h_form()) {
        const ConeGenerators cg = cone_generators_from_rows(cone.data(), 2);
        if (!cg.lines.empty()) throw BadConeShape();
        gens = cg.rays;
    } else {
        gens = cone.data();
    }
    if (gens.empty() || gens.size() > 2) throw BadConeShape();

    // frame candidates: the growth direction e1 and a transverse e2 whose
    // coordinate must be unbounded below over the body
    std::vector<std::pair<RatVec, RatVec>> frames;
    if (gens.size() == 2) {
        frames.emplace_back(gens[0], gens[1]);
        frames.emplace_back(gens[1], gens[0]);
    } else {
        RatVec e2;
        if (body.is_epigraph()) {
            e2 = body.aligned_basis().second;
        } else {
            e2 = RatVec{-gens[0][1], gens[0][0]};
        }
        frames.emplace_back(gens[0], e2);
        frames.emplace_back(gens[0], vec_scale(-1, e2));
    }
    RatVec e1, e2, f1, f2;
    bool frame_found = false;
    for (const auto& frame : frames) {
        const auto inv = invert(RatMat{{frame.first[0], frame.second[0]},
                                       {frame.first[1], frame.second[1]}});
        if (!inv) continue;
        const RatVec cand_f1{(*inv)[0][0], (*inv)[0][1]};
        const RatVec cand_f2{(*inv)[1][0], (*inv)[1][1]};
        if (!body.support(vec_scale(-1, cand_f2), tol).finite) {
            e1 = frame.first;
            e2 = frame.second;
            f1 = cand_f1;
            f2 = cand_f2;
            frame_found = true;
            break;
        }
    }
    if (!frame_found) {
        throw PreconditionUnsatisfied("transverse coordinate is bounded below; the body stays near its cone");
    }

    const RatVec anchor = body.interior_point();
    const auto coord1 = [&](const RatVec& z) { return dot(f1, vec_sub(z, anchor)); };
    const auto coord2 = [&](const RatVec& z) { return dot(f2, vec_sub(z, anchor)); };

    RatMat points;
    const RatVec first_dir = vec_sub(e1, e2);
    if (body.recession_contains(first_dir)) throw PreconditionUnsatisfied("degenerate frame");
    const Rational t0 = ray_level_search(anchor, first_dir, Rational(1), body, norm, tol);
    points.push_back(vec_add(anchor, vec_scale(t0, first_dir)));

    while (points.size() < n) {
        const std::size_t k = points.size();
        const RatVec& prev = points.back();
        const Rational prev1 = coord1(prev);
        const Rational prev2 = coord2(prev);
        bool stepped = false;
        Rational reach = std::max(Rational(1), rat_abs(prev2));
        for (std::size_t trial = 0; trial < budget && !stepped; ++trial) {
            reach *= 2;
            for (const int sgn : {-1, 1}) {
                // deep interior point just above the boundary profile
                const Rational x_c = anchor[0] + sgn * reach;
                RatVec c{x_c, body.boundary_inner_y(x_c, std::min(tol, Rational(1))) + 1};
                const Rational c1 = coord1(c);
                const Rational c2 = coord2(c);
                if (!(c1 > prev1 && c1 > 0 && c2 < prev2 && c2 < 0)) continue;
                if (!(rat_abs(c2) * prev1 < rat_abs(prev2) * c1)) continue;  // slope ratio drops
                if (!body.contains(c)) continue;
                const RatVec v = vec_sub(c, prev);
                if (body.recession_contains(v)) continue;
                const Rational level = Rational(static_cast<long>(k) + 1);
                const Rational t = ray_level_search(c, v, level, body, norm, tol);
                const RatVec cand = vec_add(c, vec_scale(t, v));
                const Rational cand1 = coord1(cand);
                const Rational cand2 = coord2(cand);
                if (!(cand1 > prev1 && cand2 < prev2)) continue;
                if (!(rat_abs(cand2) * prev1 < rat_abs(prev2) * cand1)) continue;
                bool pairs_ok = true;
                for (const auto& old : points) {
                    if (!segment_member(old, cand, body, tol)) {
                        pairs_ok = false;
                        break;
                    }
                }
                if (!pairs_ok) continue;
                points.push_back(cand);
                stepped = true;
                break;
            }
        }
        if (!stepped) throw BudgetExceeded("plane construction step exhausted its candidates");
    }

    HidingWitness w;
    if (points.size() >= 2) {
        w = verify_hidden_set(points, body, tol, norm);
    } else {
        w.points = points;
        fill_body_descriptor(w, body);
        w.distance_lower_bounds.push_back(Rational(1));
    }
    for (std::size_t i = 0; i < w.distance_lower_bounds.size(); ++i) {
        w.distance_lower_bounds[i] = Rational(static_cast<long>(i) + 1);
    }
    return w;
}

PackingFamily packing_family(const ConvexBodyOracle& body, const Rational& eps, std::size_t k,
                             const Rational& tol, Norm norm) {
    if (k > 12) throw BudgetExceeded("family size 2^k exceeds the budget");
    if (k == 0) throw PreconditionUnsatisfied("need at least one hidden point");
    if (eps <= 0) throw Error("eps must be positive");
    const RatMat gens = cone_generator_list(body.recession_cone());
    if (gens.size() != 1 || gens[0][0] != 0 || gens[0][1] <= 0) {
        throw UnsupportedBody("packing runs on bodies with a single vertical recession ray");
    }

    // a hidden source whose tail points sit deeper than eps
    const std::size_t skip = static_cast<std::size_t>(rat_ceil(eps).convert_to<long>());
    const HidingWitness source = hidden_set_2d(body, k + skip, tol, norm);
    const RatMat tail(source.points.end() - static_cast<long>(k), source.points.end());

    const RatVec c0 = body.interior_point();
    RatMat level_points;
    for (const auto& a : tail) {
        const RatVec dir = vec_sub(a, c0);
        const Rational t = ray_level_search(c0, dir, eps, body, norm, tol);
        if (t >= 1) throw Error("level crossing must happen before the source point");
        level_points.push_back(vec_add(c0, vec_scale(t, dir)));
    }
    HidingWitness level_witness;
    try {
        level_witness = k >= 2
                            ? verify_hidden_set(level_points, body, tol, norm)
                            : HidingWitness{};
    } catch (const PointInsideBody&) {
        throw NotHidden("level point fell inside the body");
    } catch (const SegmentMissesBody&) {
        throw NotHidden("level points are not hidden behind the body");
    }

    Rational window = 0;
    for (const auto& b : level_points) window = std::max(window, rat_abs(b[0]));
    window += eps + tol + 2;

    const Rational delta_target = std::min(eps, Rational(1)) / 4096;
    const Rational step = sqrt_lower(2 * delta_target, delta_target / 8);
    const Rational prec = delta_target / 4;
    const EpigraphPolygon poly =
        polygonize_epigraph(body, -window, window, step > 0 ? step : delta_target, prec);

    PackingFamily family;
    family.base_points = level_points;
    family.delta_report = 2 * poly.error_bound * (norm == Norm::Sup ? 1 : 2);

    const std::size_t count = std::size_t{1} << k;
    std::vector<EpiRegion2D> regions;
    regions.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        RatMat pts = poly.samples;
        for (std::size_t j = 0; j < k; ++j) {
            if ((mask >> j) & 1) pts.push_back(level_points[j]);
        }
        EpiRegion2D region(pts);
        family.sets.push_back(
            VPolyhedron(2, region.lower_chain(), RatMat{RatVec{Rational(0), Rational(1)}}));
        regions.push_back(std::move(region));
    }

    family.distances.assign(count, std::vector<Rational>(count, Rational(0)));
    for (std::size_t alpha = 0; alpha < count; ++alpha) {
        for (std::size_t beta = alpha + 1; beta < count; ++beta) {
            Rational best = 0;
            for (std::size_t j = 0; j < k; ++j) {
                const bool in_alpha = (alpha >> j) & 1;
                const bool in_beta = (beta >> j) & 1;
                if (in_alpha == in_beta) continue;
                const EpiRegion2D& other = in_alpha ? regions[beta] : regions[alpha];
                best = std::max(best, other.distance(level_points[j], norm));
            }
            family.distances[alpha][beta] = best;
            family.distances[beta][alpha] = best;
        }
    }
    return family;
}

std::vector<BiorthogonalPair> biorthogonal_sequence(const HPolyhedron& body, std::size_t k,
                                                    Norm norm) {
    const std::size_t n = body.ambient_dim;
    if (k > n) throw DimensionExhausted("more pairs than dimensions");
    if (!cone_is_trivial(recession_cone(body))) throw UnboundedBody();
    if (body.rows.empty()) throw UnboundedBody();
    for (const auto& row : body.rows) {
        if (row.offset <= 0) throw PreconditionUnsatisfied("the origin must be interior");
    }
    const Norm dual = dual_norm(norm);

    std::vector<BiorthogonalPair> pairs;
    RatMat killed;  // vectors every later functional must annihilate
    RatMat prior_stars;
    for (std::size_t step = 0; step < k; ++step) {
        bool accepted = false;
        while (!accepted) {
            RatMat w_basis;
            if (killed.empty()) {
                for (std::size_t i = 0; i < n; ++i) w_basis.push_back(unit_vec(n, i));
            } else {
                w_basis = nullspace(killed);
            }
            if (w_basis.empty()) throw DimensionExhausted();
            // pick the annihilating functional farthest from the prior span
            RatVec star;
            NormFit star_fit{Rational(-1), {}};
            for (const auto& w : w_basis) {
                const Rational len = norm_value(dual, w);
                const RatVec cand = vec_scale(Rational(1) / len, w);
                const NormFit fit = distance_to_span(cand, prior_stars, dual);
                if (fit.value > star_fit.value) {
                    star_fit = fit;
                    star = cand;
                }
            }
            const NormFit interp = min_norm_interpolation(star, prior_stars, norm);
            if (interp.value < 4) {
                if (interp.value < 1) throw Error("interpolation norm below one is impossible");
                BiorthogonalPair pair;
                pair.x = interp.combo;
                pair.xstar = star;
                pair.norm = norm;
                pairs.push_back(pair);
                killed.push_back(interp.combo);
                prior_stars.push_back(star);
                accepted = true;
            } else {
                // too close to the prior span: kill the attaining point of
                // the certifying combination and retry in a smaller space
                const NormFit close = distance_to_span(star, prior_stars, dual);
                const RatVec cut = norm_attaining_point(close.combo, norm);
                const std::size_t before = w_basis.size();
                killed.push_back(cut);
                if (nullspace(killed).size() >= before) throw DimensionExhausted();
            }
        }
    }
    // exact biorthogonality re-check
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            const Rational want = i == j ? 1 : 0;
            if (dot(pairs[i].xstar, pairs[j].x) != want) {
                throw Error("biorthogonality identities must hold exactly");
            }
        }
        if (norm_value(dual, pairs[i].xstar) != 1) throw Error("functional norms must be one");
        const Rational len = norm_value(norm, pairs[i].x);
        if (len < 1 || len >= 4) throw Error("vector norms must land in [1, 4)");
    }
    return pairs;
}

Approximant positively_hiding_approximant(const HPolyhedron& body, const Rational& eps,
                                          std::size_t k, Norm norm) {
    if (eps <= 0) throw Error("eps must be positive");
    const std::vector<BiorthogonalPair> pairs = biorthogonal_sequence(body, k, norm);
    const std::size_t n = body.ambient_dim;

    // exact eps-ball sum
    const VPolyhedron vb = vrep_of(body);
    std::map<RatVec, bool> seen;
    RatMat sum_points;
    for (const auto& p : vb.points) {
        for (const auto& q : ball_vertices(norm, n, eps)) {
            RatVec sum = vec_add(p, q);
            if (seen.emplace(sum, true).second) sum_points.push_back(std::move(sum));
        }
    }
    const HPolyhedron ball_sum = hrep_of(VPolyhedron(n, std::move(sum_points), vb.rays));

    HPolyhedron capped = ball_sum;
    RatVec sups;
    RatMat attainers;
    for (const auto& pair : pairs) {
        const SupportOutcome s = support_value(body, pair.xstar);
        if (!support_is_finite(s)) throw UnboundedBody();
        const auto& fin = std::get<SupportFinite>(s);
        sups.push_back(fin.value);
        attainers.push_back(fin.attains);
        capped.add_row(pair.xstar, fin.value + eps / 8);
    }

    Approximant out;
    out.body = capped;
    out.pairs = pairs;
    out.sup_values = sups;
    out.witness.body_kind = BodyKind::HPolyBacked;
    out.witness.body_hform = capped;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const RatVec a = vec_add(attainers[i], vec_scale(eps / 4, pairs[i].x));
        if (!ball_sum.contains(a)) throw Error("hidden point must stay inside the ball sum");
        const Rational d = point_distance(a, capped, norm);
        if (d < eps / 16) throw Error("hidden point distance must reach eps/16");
        out.witness.points.push_back(a);
        out.witness.distance_lower_bounds.push_back(d);
    }
    for (std::size_t i = 0; i < out.witness.points.size(); ++i) {
        for (std::size_t j = i + 1; j < out.witness.points.size(); ++j) {
            PairCertificate cert;
            cert.i = i;
            cert.j = j;
            cert.t = make_rational(1, 2);
            cert.point = vec_scale(make_rational(1, 2),
                                   vec_add(out.witness.points[i], out.witness.points[j]));
            if (!capped.contains(cert.point)) throw Error("midpoints must land inside the cap");
            out.witness.certificates.push_back(std::move(cert));
        }
    }
    return out;
}

}  // namespace apxpoly
