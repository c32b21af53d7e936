#ifndef APXPOLY_ERRORS_HPP
#define APXPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apxpoly {

/** Base class for all domain errors raised by this library. */
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

class EmptyPolyhedron : public Error {
  public:
    explicit EmptyPolyhedron(const std::string& what = "polyhedron is empty") : Error(what) {}
};

class DimensionCapExceeded : public Error {
  public:
    explicit DimensionCapExceeded(const std::string& what = "ambient dimension exceeds the representation-conversion cap") : Error(what) {}
};

class KernelNotInLineality : public Error {
  public:
    explicit KernelNotInLineality(const std::string& what = "quotient kernel is not contained in the lineality space") : Error(what) {}
};

class ConeMismatch : public Error {
  public:
    explicit ConeMismatch(const std::string& what = "recession cone does not match the supplied cone") : Error(what) {}
};

class NegativeOffset : public Error {
  public:
    explicit NegativeOffset(const std::string& what = "offsets must be non-negative") : Error(what) {}
};

class RayInsideCone : public Error {
  public:
    explicit RayInsideCone(const std::string& what = "direction lies in the recession cone; distance stays bounded") : Error(what) {}
};

class PointNotInBody : public Error {
  public:
    explicit PointNotInBody(const std::string& what = "base point does not belong to the body") : Error(what) {}
};

class BudgetExceeded : public Error {
  public:
    explicit BudgetExceeded(const std::string& what = "iteration budget exceeded") : Error(what) {}
};

class PointInsideBody : public Error {
  public:
    PointInsideBody(std::size_t index, const std::string& what = "hidden-set point lies inside the body")
        : Error(what + " (index " + std::to_string(index) + ")"), index(index) {}
    std::size_t index;
};

class SegmentMissesBody : public Error {
  public:
    SegmentMissesBody(std::size_t i, std::size_t j,
                      const std::string& what = "segment does not meet the body")
        : Error(what + " (pair " + std::to_string(i) + "," + std::to_string(j) + ")"), i(i), j(j) {}
    std::size_t i;
    std::size_t j;
};

class DegenerateDecomposition : public Error {
  public:
    explicit DegenerateDecomposition(const std::string& what = "decomposition coefficients are degenerate") : Error(what) {}
};

class NotHidden : public Error {
  public:
    explicit NotHidden(const std::string& what = "input set is not hidden behind the body") : Error(what) {}
};

class LiftInfeasible : public Error {
  public:
    explicit LiftInfeasible(const std::string& what = "lifted point escapes the body") : Error(what) {}
};

class BadConeShape : public Error {
  public:
    explicit BadConeShape(const std::string& what = "recession cone must be a single ray or a two-generator wedge") : Error(what) {}
};

class PreconditionUnsatisfied : public Error {
  public:
    explicit PreconditionUnsatisfied(const std::string& what = "operation precondition not satisfied") : Error(what) {}
};

class DimensionExhausted : public Error {
  public:
    explicit DimensionExhausted(const std::string& what = "ambient dimension cannot support further biorthogonal pairs") : Error(what) {}
};

class UnboundedBody : public Error {
  public:
    explicit UnboundedBody(const std::string& what = "body must be bounded (trivial recession cone)") : Error(what) {}
};

class UnsupportedBody : public Error {
  public:
    explicit UnsupportedBody(const std::string& what = "body kind/dimension not supported by this operation") : Error(what) {}
};

class GridTooCoarse : public Error {
  public:
    explicit GridTooCoarse(const std::string& what = "grid step too coarse to cover the truncated body") : Error(what) {}
};

class UnsupportedDimension : public Error {
  public:
    explicit UnsupportedDimension(const std::string& what = "only 2-D scenes can be rendered") : Error(what) {}
};

}  // namespace apxpoly

#endif  // APXPOLY_ERRORS_HPP
