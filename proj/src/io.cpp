#include "apxpoly/io.hpp"

#include "apxpoly/errors.hpp"

namespace apxpoly {

namespace {

void expect_keys(const Json& j, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ParseError("expected an object");
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* key : allowed) ok |= (item.key() == key);
        if (!ok) throw ParseError("unknown field: " + item.key());
    }
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (!j.is_string()) throw ParseError("rationals serialize as strings");
    return parse_rational(j.get<std::string>());
}

Json vec_json(const RatVec& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(rational_json(c));
    return a;
}

RatVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("vectors serialize as arrays");
    RatVec v;
    for (const auto& c : j) v.push_back(rational_from_json(c));
    return v;
}

Json mat_json(const RatMat& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(vec_json(row));
    return a;
}

RatMat mat_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrices serialize as arrays of arrays");
    RatMat m;
    for (const auto& row : j) m.push_back(vec_from_json(row));
    return m;
}

Json hpoly_json(const HPolyhedron& p) {
    Json a = Json::array();
    Json b = Json::array();
    for (const auto& row : p.rows) {
        a.push_back(vec_json(row.normal));
        b.push_back(rational_json(row.offset));
    }
    return Json{{"hrep", Json{{"dim", p.ambient_dim}, {"A", a}, {"b", b}}}};
}

HPolyhedron hpoly_from_json(const Json& j) {
    expect_keys(j, {"dim", "A", "b"});
    if (!j.contains("A") || !j.contains("b")) throw ParseError("hrep needs A and b");
    const RatMat a = mat_from_json(j.at("A"));
    RatVec b;
    for (const auto& c : j.at("b")) b.push_back(rational_from_json(c));
    if (a.size() != b.size()) throw ParseError("hrep needs one offset per row");
    std::size_t dim = 0;
    if (j.contains("dim")) {
        dim = j.at("dim").get<std::size_t>();
    } else if (!a.empty()) {
        dim = a.front().size();
    } else {
        throw ParseError("hrep with no rows needs an explicit dim");
    }
    HPolyhedron p(dim, {});
    for (std::size_t i = 0; i < a.size(); ++i) p.add_row(a[i], b[i]);
    return p;
}

Json vpoly_json(const VPolyhedron& q) {
    return Json{{"vrep", Json{{"points", mat_json(q.points)}, {"rays", mat_json(q.rays)}}}};
}

VPolyhedron vpoly_from_json(const Json& j) {
    expect_keys(j, {"points", "rays"});
    if (!j.contains("points")) throw ParseError("vrep needs points");
    const RatMat points = mat_from_json(j.at("points"));
    const RatMat rays = j.contains("rays") ? mat_from_json(j.at("rays")) : RatMat{};
    if (points.empty()) throw ParseError("vrep needs at least one point");
    return VPolyhedron(points.front().size(), points, rays);
}

BodyDocument parse_body_document(const Json& j) {
    expect_keys(j, {"hrep", "vrep", "body"});
    BodyDocument doc;
    if (j.contains("hrep")) {
        doc.hpoly = hpoly_from_json(j.at("hrep"));
        return doc;
    }
    if (j.contains("vrep")) {
        doc.vpoly = vpoly_from_json(j.at("vrep"));
        return doc;
    }
    if (j.contains("body")) {
        const Json& body = j.at("body");
        expect_keys(body, {"kind"});
        if (!body.contains("kind")) throw ParseError("body needs a kind");
        const std::string kind = body.at("kind").get<std::string>();
        if (kind == "parabola") {
            doc.oracle = ConvexBodyOracle::parabola();
        } else if (kind == "hyperbola") {
            doc.oracle = ConvexBodyOracle::hyperbola();
        } else {
            throw ParseError("unknown body kind: " + kind);
        }
        return doc;
    }
    throw ParseError("document must carry hrep, vrep, or body");
}

ConvexBodyOracle oracle_from_document(const BodyDocument& doc) {
    if (doc.oracle) return *doc.oracle;
    if (doc.hpoly) return ConvexBodyOracle::from_hpolyhedron(*doc.hpoly);
    if (doc.vpoly) return ConvexBodyOracle::from_hpolyhedron(hrep_of(*doc.vpoly));
    throw ParseError("empty body document");
}

HPolyhedron hpoly_from_document(const BodyDocument& doc) {
    if (doc.hpoly) return *doc.hpoly;
    if (doc.vpoly) return hrep_of(*doc.vpoly);
    throw UnsupportedBody("this operation needs a polyhedral body");
}

Json outcome_json(const HausdorffOutcome& o) {
    if (const auto* fin = std::get_if<HausdorffFinite>(&o)) {
        return Json{{"finite", rational_json(fin->value)}};
    }
    if (const auto* inf = std::get_if<HausdorffInfinite>(&o)) {
        return Json{{"infinite", Json{{"witness", vec_json(inf->witness)}}}};
    }
    const auto& undecided = std::get<HausdorffUndecided>(o);
    Json probes = Json::array();
    for (const auto& p : undecided.report.probes) {
        probes.push_back(Json{{"radius", rational_json(p.first)}, {"gap", rational_json(p.second)}});
    }
    return Json{{"undecided", Json{{"probes", probes}, {"note", undecided.report.note}}}};
}

Json witness_json(const HidingWitness& w) {
    Json body;
    switch (w.body_kind) {
        case BodyKind::Parabola:
            body = Json{{"kind", "parabola"}};
            break;
        case BodyKind::Hyperbola:
            body = Json{{"kind", "hyperbola"}};
            break;
        case BodyKind::HPolyBacked:
            body = Json{{"kind", "hpoly"}};
            if (w.body_hform) body["hrep"] = hpoly_json(*w.body_hform).at("hrep");
            break;
    }
    Json certs = Json::array();
    for (const auto& cert : w.certificates) {
        certs.push_back(Json{{"i", cert.i},
                             {"j", cert.j},
                             {"t", rational_json(cert.t)},
                             {"point", vec_json(cert.point)}});
    }
    return Json{{"points", mat_json(w.points)},
                {"bounds", vec_json(w.distance_lower_bounds)},
                {"certificates", certs},
                {"body", body}};
}

Json cone_json(const PolyhedralCone& k) {
    if (k.is_h_form()) return Json{{"cone", Json{{"normals", mat_json(k.data())}}}};
    return Json{{"cone", Json{{"generators", mat_json(k.data())}}}};
}

Json classification_json(const Classification& c) {
    if (const auto* ap = std::get_if<ApproximativelyPolyhedral>(&c)) {
        Json dist;
        if (const auto* exact = std::get_if<Rational>(&ap->dist_to_cone)) {
            dist = Json{{"exact", rational_json(*exact)}};
        } else {
            const auto& gap = std::get<GapEvidence>(ap->dist_to_cone);
            dist = Json{{"value", rational_json(gap.value)},
                        {"tolerance", rational_json(gap.tolerance)}};
        }
        return Json{{"verdict", "approximatively-polyhedral"},
                    {"cone", cone_json(ap->cone).at("cone")},
                    {"dist_to_cone", dist},
                    {"approximant", vpoly_json(ap->approximant).at("vrep")}};
    }
    if (const auto* ih = std::get_if<InfinitelyHidingVerdict>(&c)) {
        return Json{{"verdict", "infinitely-hiding"}, {"witness", witness_json(ih->witness)}};
    }
    const auto& und = std::get<UndecidedVerdict>(c);
    Json probes = Json::array();
    for (const auto& p : und.report.probes) {
        probes.push_back(Json{{"radius", rational_json(p.first)}, {"gap", rational_json(p.second)}});
    }
    return Json{{"verdict", "undecided"}, {"probes", probes}, {"note", und.report.note}};
}

Json biorthogonal_json(const std::vector<BiorthogonalPair>& pairs) {
    Json list = Json::array();
    for (const auto& pair : pairs) {
        list.push_back(Json{{"x", vec_json(pair.x)},
                            {"xstar", vec_json(pair.xstar)},
                            {"norm", norm_name(pair.norm)}});
    }
    return Json{{"pairs", list}};
}

Json packing_json(const PackingFamily& family) {
    Json sets = Json::array();
    for (const auto& s : family.sets) sets.push_back(vpoly_json(s).at("vrep"));
    Json matrix = Json::array();
    for (const auto& row : family.distances) {
        Json r = Json::array();
        for (const auto& d : row) r.push_back(rational_json(d));
        matrix.push_back(r);
    }
    return Json{{"base_points", mat_json(family.base_points)},
                {"sets", sets},
                {"distances", matrix},
                {"delta_report", rational_json(family.delta_report)}};
}

Json net_json(const EpsilonNet& net) {
    return Json{{"grid", mat_json(net.grid_points)},
                {"approximant", vpoly_json(net.approximant).at("vrep")},
                {"certified_distance", rational_json(net.certified_distance)}};
}

Json truncation_json(const Truncation& t) {
    return Json{{"radius", rational_json(t.radius)},
                {"body", vpoly_json(t.body).at("vrep")}};
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace apxpoly
