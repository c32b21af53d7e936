#ifndef APXPOLY_POLYHEDRON_HPP
#define APXPOLY_POLYHEDRON_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "apxpoly/linalg.hpp"
#include "apxpoly/norm.hpp"

namespace apxpoly {

struct HalfSpace {
    RatVec normal;   // normal . x <= offset
    Rational offset;
};

/**
 * Intersection of finitely many closed half-spaces. An empty row list is
 * legal and denotes the whole ambient space. May denote the empty set; use
 * is_nonempty from support.hpp to decide.
 */
struct HPolyhedron {
    std::size_t ambient_dim = 0;
    std::vector<HalfSpace> rows;

    HPolyhedron() = default;
    HPolyhedron(std::size_t dim, std::vector<HalfSpace> rs);

    HPolyhedron& add_row(RatVec normal, Rational offset);
    bool contains(const RatVec& point) const;
};

/** conv(points) + cone(rays); non-empty by construction (>= 1 point). */
struct VPolyhedron {
    std::size_t ambient_dim = 0;
    RatMat points;
    RatMat rays;

    VPolyhedron() = default;
    VPolyhedron(std::size_t dim, RatMat pts, RatMat rys);
};

/**
 * A polyhedral cone, stored as one of the two forms: rows (normals of
 * homogeneous half-spaces) or generators. Conversions live in cones.hpp.
 */
class PolyhedralCone {
  public:
    static PolyhedralCone from_rows(std::size_t dim, RatMat normals);
    static PolyhedralCone from_generators(std::size_t dim, RatMat generators);
    static PolyhedralCone trivial(std::size_t dim);  // just the origin

    std::size_t ambient_dim() const { return dim_; }
    bool is_h_form() const { return h_form_; }

    /** Normals when stored as H-form, generators when stored as V-form. */
    const RatMat& data() const { return data_; }

    HPolyhedron as_hpolyhedron() const;  // requires H-form
    VPolyhedron as_vpolyhedron() const;  // requires V-form

  private:
    PolyhedralCone(std::size_t dim, RatMat data, bool h_form)
        : dim_(dim), data_(std::move(data)), h_form_(h_form) {}

    std::size_t dim_;
    RatMat data_;
    bool h_form_;
};

/** Deterministic pseudo-random rational directions for probe-based checks. */
RatMat probe_directions(std::size_t dim, std::size_t count, std::uint64_t seed);

}  // namespace apxpoly

#endif  // APXPOLY_POLYHEDRON_HPP
