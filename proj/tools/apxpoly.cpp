// Command-line front end: parses set descriptions, dispatches the library
// operations, and emits certificate documents (JSON) or SVG figures.

#include <cxxabi.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "apxpoly/classify.hpp"
#include "apxpoly/io.hpp"
#include "apxpoly/svg.hpp"

namespace {

using namespace apxpoly;

struct CommonOptions {
    std::string norm = "sup";
    std::string eps = "1/100";
    std::string tol = "1/1000000000";
    std::size_t budget = 40;
    std::uint64_t seed = 0;
    std::string out;
};

std::string error_kind(const Error& e) {
    int status = 0;
    char* demangled = abi::__cxa_demangle(typeid(e).name(), nullptr, nullptr, &status);
    std::string name = status == 0 && demangled ? demangled : typeid(e).name();
    std::free(demangled);
    const auto pos = name.rfind("::");
    if (pos != std::string::npos) name = name.substr(pos + 2);
    return name;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

BodyDocument load_body(const std::string& path, const std::string& inline_kind) {
    if (!inline_kind.empty()) {
        return parse_body_document(Json{{"body", Json{{"kind", inline_kind}}}});
    }
    if (path.empty()) throw ParseError("provide --in FILE or --body KIND");
    return parse_body_document(load_json(path));
}

RatVec parse_vec_arg(const std::string& text) {
    RatVec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    if (v.empty()) throw ParseError("empty vector argument");
    return v;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::ios_base::failure("cannot write " + out_path);
    out << text;
}

HPolyhedron ball_body(std::size_t dim, Norm norm) {
    HPolyhedron ball(dim, {});
    for (auto& row : ball_rows(norm, dim, Rational(1))) ball.add_row(row.first, row.second);
    return ball;
}

int run(int argc, char** argv) {
    CLI::App app{"exact convex-geometry toolkit: recession cones, Hausdorff "
                 "certificates, hidden sets, and polyhedral approximation"};
    app.require_subcommand(1);
    app.fallthrough(true);

    CommonOptions common;
    app.add_option("--norm", common.norm, "sup or sum")->capture_default_str();
    app.add_option("--eps", common.eps, "accuracy target, rational p/q")->capture_default_str();
    app.add_option("--tol", common.tol, "bisection tolerance, rational p/q")->capture_default_str();
    app.add_option("--budget", common.budget, "iteration budget")->capture_default_str();
    app.add_option("--seed", common.seed, "echoed in the output document")->capture_default_str();
    app.add_option("--out", common.out, "write the document to this path");

    std::string in_path, in_a, in_b, body_kind, from_arg, dir_arg, step_arg = "1/8", witness_path;
    std::size_t count = 5;
    std::size_t dim = 16;
    double half_width = 8.0;

    auto* cmd_classify = app.add_subcommand("classify", "classify a body against its recession cone");
    cmd_classify->add_option("--in", in_path, "body document (JSON)");
    cmd_classify->add_option("--body", body_kind, "parabola or hyperbola");
    cmd_classify->add_option("--witness-count", count, "hidden points to construct on divergence")
        ->capture_default_str();

    auto* cmd_hausdorff = app.add_subcommand("hausdorff", "Hausdorff distance of two polyhedra");
    cmd_hausdorff->add_option("--a", in_a, "first body document")->required();
    cmd_hausdorff->add_option("--b", in_b, "second body document")->required();

    auto* cmd_recession = app.add_subcommand("recession-cone", "recession cone of a polyhedron");
    cmd_recession->add_option("--in", in_path, "body document")->required();

    auto* cmd_ray = app.add_subcommand("ray-search", "first level crossing along a ray");
    cmd_ray->add_option("--in", in_path, "body document");
    cmd_ray->add_option("--body", body_kind, "parabola or hyperbola");
    cmd_ray->add_option("--from", from_arg, "ray base, comma-separated rationals")->required();
    cmd_ray->add_option("--dir", dir_arg, "ray direction")->required();

    auto* cmd_truncate = app.add_subcommand("truncate", "ball truncation at bounded distance");
    cmd_truncate->add_option("--in", in_path, "body document")->required();

    auto* cmd_hidden = app.add_subcommand("hidden-set", "hidden points behind a plane body");
    cmd_hidden->add_option("--in", in_path, "body document");
    cmd_hidden->add_option("--body", body_kind, "parabola or hyperbola");
    cmd_hidden->add_option("--count", count, "number of points")->capture_default_str();

    auto* cmd_packing = app.add_subcommand("packing", "2^k hull family with distance matrix");
    cmd_packing->add_option("--in", in_path, "body document");
    cmd_packing->add_option("--body", body_kind, "parabola or hyperbola");
    cmd_packing->add_option("--count", count, "hidden points (family size 2^count)")
        ->capture_default_str();

    auto* cmd_bi = app.add_subcommand("biorthogonal", "biorthogonal pairs for a bounded body");
    cmd_bi->add_option("--in", in_path, "body document (default: the unit ball)");
    cmd_bi->add_option("--dim", dim, "ambient dimension of the default ball")->capture_default_str();
    cmd_bi->add_option("--count", count, "number of pairs")->capture_default_str();

    auto* cmd_approx = app.add_subcommand("approximant", "positively hiding approximant");
    cmd_approx->add_option("--in", in_path, "body document (default: the unit ball)");
    cmd_approx->add_option("--dim", dim, "ambient dimension of the default ball")
        ->capture_default_str();
    cmd_approx->add_option("--count", count, "functional caps")->capture_default_str();

    auto* cmd_net = app.add_subcommand("net", "grid approximant within 2 eps");
    cmd_net->add_option("--in", in_path, "body document")->required();
    cmd_net->add_option("--step", step_arg, "grid spacing, rational")->capture_default_str();

    auto* cmd_plot = app.add_subcommand("plot", "SVG figure of a plane body and witness");
    cmd_plot->add_option("--in", in_path, "body document");
    cmd_plot->add_option("--body", body_kind, "parabola or hyperbola");
    cmd_plot->add_option("--witness", witness_path, "witness document to overlay");
    cmd_plot->add_option("--half-width", half_width, "world units on each side")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    const Norm norm = parse_norm(common.norm);
    const Rational eps = parse_rational(common.eps);
    const Rational tol = parse_rational(common.tol);

    Json doc;
    std::string raw_output;

    if (cmd_classify->parsed()) {
        ClassifyOptions options;
        options.eps = eps;
        options.tol = tol;
        options.norm = norm;
        options.budget = common.budget;
        options.witness_count = count;
        const BodyDocument body = load_body(in_path, body_kind);
        const Classification c = body.oracle ? classify(*body.oracle, options)
                                             : classify(hpoly_from_document(body), options);
        doc = classification_json(c);
    } else if (cmd_hausdorff->parsed()) {
        const HPolyhedron a = hpoly_from_document(parse_body_document(load_json(in_a)));
        const HPolyhedron b = hpoly_from_document(parse_body_document(load_json(in_b)));
        doc = outcome_json(hausdorff_distance(a, b, norm));
    } else if (cmd_recession->parsed()) {
        const HPolyhedron p = hpoly_from_document(parse_body_document(load_json(in_path)));
        doc = cone_json(recession_cone(p));
    } else if (cmd_ray->parsed()) {
        const BodyDocument body = load_body(in_path, body_kind);
        const RatVec from = parse_vec_arg(from_arg);
        const RatVec dir = parse_vec_arg(dir_arg);
        const Rational t = body.oracle
                               ? ray_level_search(from, dir, eps, *body.oracle, norm, tol)
                               : ray_level_search(from, dir, eps, hpoly_from_document(body), norm, tol);
        const RatVec point = vec_add(from, vec_scale(t, dir));
        doc = Json{{"t", rational_json(t)}, {"point", vec_json(point)}};
    } else if (cmd_truncate->parsed()) {
        const HPolyhedron a = hpoly_from_document(parse_body_document(load_json(in_path)));
        doc = truncation_json(truncation_radius(a, recession_cone(a), eps, norm, common.budget));
    } else if (cmd_hidden->parsed()) {
        const BodyDocument body = load_body(in_path, body_kind);
        doc = witness_json(hidden_set_2d(oracle_from_document(body), count, tol, norm));
    } else if (cmd_packing->parsed()) {
        const BodyDocument body = load_body(in_path, body_kind);
        doc = packing_json(packing_family(oracle_from_document(body), eps, count, tol, norm));
    } else if (cmd_bi->parsed()) {
        const HPolyhedron body = in_path.empty()
                                     ? ball_body(dim, norm)
                                     : hpoly_from_document(parse_body_document(load_json(in_path)));
        doc = biorthogonal_json(biorthogonal_sequence(body, count, norm));
    } else if (cmd_approx->parsed()) {
        const HPolyhedron body = in_path.empty()
                                     ? ball_body(dim, norm)
                                     : hpoly_from_document(parse_body_document(load_json(in_path)));
        const Approximant a = positively_hiding_approximant(body, eps, count, norm);
        doc = Json{{"body", hpoly_json(a.body).at("hrep")}, {"witness", witness_json(a.witness)}};
    } else if (cmd_net->parsed()) {
        const HPolyhedron a = hpoly_from_document(parse_body_document(load_json(in_path)));
        doc = net_json(epsilon_net(a, eps, parse_rational(step_arg), norm));
    } else if (cmd_plot->parsed()) {
        Scene2D scene;
        scene.half_width = half_width;
        const BodyDocument body = load_body(in_path, body_kind);
        if (body.oracle) {
            scene.body_kind = body.oracle->kind();
            scene.cone_generators = cone_generator_list(body.oracle->recession_cone());
        } else {
            scene.body_hform = hpoly_from_document(body);
        }
        if (!witness_path.empty()) {
            const Json w = load_json(witness_path);
            const Json& inner = w.contains("witness") ? w.at("witness") : w;
            scene.witness_points = mat_from_json(inner.at("points"));
            if (inner.contains("certificates")) {
                for (const auto& cert : inner.at("certificates")) {
                    const std::size_t i = cert.at("i").get<std::size_t>();
                    const std::size_t j = cert.at("j").get<std::size_t>();
                    scene.segments.emplace_back(scene.witness_points.at(i),
                                                scene.witness_points.at(j));
                }
            }
        }
        raw_output = render_svg(scene);
    }

    if (!raw_output.empty()) {
        emit(raw_output, common.out);
    } else {
        if (common.seed != 0) doc["seed"] = common.seed;
        emit(dump_document(doc), common.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const apxpoly::Error& e) {
        apxpoly::Json err{{"error", {{"kind", error_kind(e)}, {"detail", e.what()}}}};
        std::cout << apxpoly::dump_document(err);
        return 2;
    } catch (const apxpoly::Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
