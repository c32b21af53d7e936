#include "apxpoly/classify.hpp"

#include <algorithm>

#include "apxpoly/convert.hpp"
#include "apxpoly/errors.hpp"
#include "apxpoly/support.hpp"

namespace apxpoly {

namespace {

HPolyhedron cone_hform(const PolyhedralCone& cone) {
    HPolyhedron h(cone.ambient_dim(), {});
    for (const auto& row : cone_row_list(cone)) h.add_row(row, Rational(0));
    return h;
}

// certified lower estimate of the two-sided gap between the body and its
// recession cone within the radius-r ball: exact point programs from body
// samples, bisected distance queries from cone samples
Rational gap_within_radius(const ConvexBodyOracle& body, const HPolyhedron& cone_h,
                           const RatMat& cone_gens, const Rational& r, const Rational& tol,
                           Norm norm) {
    Rational gap = 0;
    const Rational window = body.x_window(r);
    const int grid = 16;
    for (int i = -grid; i <= grid; ++i) {
        const Rational x = window * i / grid;
        const RatVec sample{x, body.boundary_inner_y(x, tol)};
        gap = std::max(gap, point_distance(sample, cone_h, norm));
    }
    for (const auto& g : cone_gens) {
        const RatVec unit = sup_normalize(g);
        for (int halvings = 0; halvings < 4; ++halvings) {
            const Rational t = r / (1 << halvings);
            gap = std::max(gap, body.distance_enclosure(vec_scale(t, unit), tol, norm).first);
        }
    }
    gap = std::max(gap, body.distance_enclosure(zero_vec(2), tol, norm).first);
    return gap;
}

}  // namespace

Classification classify(const HPolyhedron& body, const ClassifyOptions& options) {
    if (!is_nonempty(body)) throw EmptyPolyhedron();
    const PolyhedralCone cone = recession_cone(body);
    const HausdorffOutcome d = hausdorff_distance(body, cone_hform(cone), options.norm);
    if (!hausdorff_is_finite(d)) {
        throw Error("a half-space body sits at finite distance from its recession cone");
    }
    return ApproximativelyPolyhedral{cone, hausdorff_value(d), vrep_of(body)};
}

Classification classify(const ConvexBodyOracle& body, const ClassifyOptions& options) {
    if (body.kind() == BodyKind::HPolyBacked) return classify(body.backing(), options);
    if (body.ambient_dim() != 2) throw UnsupportedBody("oracle bodies must be planar");

    const PolyhedralCone cone = body.recession_cone();
    const HPolyhedron cone_h = cone_hform(cone);
    const RatMat cone_gens = cone_generator_list(cone);

    ProbeReport report;
    Rational radius = 1;
    Rational previous = -1;
    for (std::size_t step = 0; step <= options.budget; ++step) {
        const Rational gap = gap_within_radius(body, cone_h, cone_gens, radius, options.tol,
                                               options.norm);
        report.probes.emplace_back(radius, gap);
        if (previous >= 0) {
            if (gap > options.divergence_threshold && gap >= options.growth_ratio * previous) {
                return InfinitelyHidingVerdict{
                    hidden_set_2d(body, options.witness_count, options.tol, options.norm)};
            }
            if (rat_abs(gap - previous) < options.eps / 4) {
                // stabilized: polygonize within the current window for the
                // approximant, chord error tied to eps
                const Rational window = body.x_window(radius);
                Rational step_x = sqrt_lower(options.eps, options.eps / 8);
                if (step_x <= 0) step_x = options.eps;
                const EpigraphPolygon poly =
                    polygonize_epigraph(body, -window, window, step_x, options.eps / 8);
                VPolyhedron approximant(2, poly.samples, cone_gens);
                return ApproximativelyPolyhedral{cone, GapEvidence{gap, options.tol}, approximant};
            }
        }
        previous = gap;
        radius *= 2;
    }
    report.note = "gap neither stabilized nor escaped within the budget";
    return UndecidedVerdict{std::move(report)};
}

EpsilonNet epsilon_net(const HPolyhedron& a, const Rational& eps, const Rational& grid_step,
                       Norm norm) {
    if (eps <= 0 || grid_step <= 0) throw Error("eps and grid step must be positive");
    if (grid_step > eps) throw Error("grid step must not exceed eps");
    const PolyhedralCone cone = recession_cone(a);
    const Truncation tr = truncation_radius(a, cone, eps, norm);

    const std::size_t n = a.ambient_dim;
    const BigInt hi_idx = num(tr.radius / grid_step) / den(tr.radius / grid_step);
    const long steps = hi_idx.convert_to<long>();
    double cells = 1;
    for (std::size_t i = 0; i < n; ++i) cells *= 2.0 * static_cast<double>(steps) + 1.0;
    if (cells > 2e6) throw BudgetExceeded("grid too large at this spacing");

    RatMat grid;
    std::vector<long> index(n, -steps);
    for (;;) {
        RatVec p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = grid_step * index[i];
        if (norm_value(norm, p) <= tr.radius && a.contains(p)) grid.push_back(p);
        std::size_t carry = 0;
        while (carry < n && ++index[carry] > steps) {
            index[carry] = -steps;
            ++carry;
        }
        if (carry == n) break;
    }
    if (grid.empty()) throw GridTooCoarse("no grid point lies inside the truncated body");

    // cover certificate: the hull of the grid must track the truncation
    HPolyhedron capped = a;
    for (auto& row : ball_rows(norm, n, tr.radius)) capped.add_row(row.first, row.second);
    const HausdorffOutcome cover =
        hausdorff_distance(hrep_of(VPolyhedron(n, grid, {})), capped, norm);
    if (!hausdorff_is_finite(cover) || hausdorff_value(cover) > eps) {
        throw GridTooCoarse("grid hull misses the truncated body by more than eps");
    }

    EpsilonNet net;
    net.grid_points = grid;
    net.approximant = VPolyhedron(n, grid, cone_generator_list(cone));
    const HausdorffOutcome total = hausdorff_distance(hrep_of(net.approximant), a, norm);
    if (!hausdorff_is_finite(total)) throw Error("approximant shares the recession cone");
    net.certified_distance = hausdorff_value(total);
    if (net.certified_distance >= 2 * eps) {
        throw GridTooCoarse("re-computed distance breaches the 2 eps bound");
    }
    return net;
}

}  // namespace apxpoly
