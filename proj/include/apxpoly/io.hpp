#ifndef APXPOLY_IO_HPP
#define APXPOLY_IO_HPP

#include <string>

#include "json.hpp"

#include "apxpoly/classify.hpp"
#include "apxpoly/hiding.hpp"

namespace apxpoly {

// Key order is fixed everywhere so identical inputs produce byte-identical
// documents.
using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json vec_json(const RatVec& v);
RatVec vec_from_json(const Json& j);

Json mat_json(const RatMat& m);
RatMat mat_from_json(const Json& j);

/** {"hrep": {"A": [[...]], "b": [...]}} */
Json hpoly_json(const HPolyhedron& p);
HPolyhedron hpoly_from_json(const Json& j);

/** {"vrep": {"points": [[...]], "rays": [[...]]}} */
Json vpoly_json(const VPolyhedron& q);
VPolyhedron vpoly_from_json(const Json& j);

/** Any of the accepted set descriptions, including {"body": {"kind": ...}}. */
struct BodyDocument {
    std::optional<HPolyhedron> hpoly;
    std::optional<VPolyhedron> vpoly;
    std::optional<ConvexBodyOracle> oracle;
};
BodyDocument parse_body_document(const Json& j);

/** The oracle named by the document, wrapping half-space inputs. */
ConvexBodyOracle oracle_from_document(const BodyDocument& doc);

/** The half-space form of the document, converting generator inputs. */
HPolyhedron hpoly_from_document(const BodyDocument& doc);

Json outcome_json(const HausdorffOutcome& o);
Json witness_json(const HidingWitness& w);
Json cone_json(const PolyhedralCone& k);
Json classification_json(const Classification& c);
Json biorthogonal_json(const std::vector<BiorthogonalPair>& pairs);
Json packing_json(const PackingFamily& family);
Json net_json(const EpsilonNet& net);
Json truncation_json(const Truncation& t);

std::string dump_document(const Json& j);

}  // namespace apxpoly

#endif  // APXPOLY_IO_HPP
