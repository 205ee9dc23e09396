#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace intlink {

/// One failed invariant of an embedding or drawing. Edges are given by their
/// endpoint ids; unused fields stay at -1.
struct Violation {
  std::string kind;
  std::string detail;
  std::pair<int, int> edge1{-1, -1};
  int side1 = -1;
  std::pair<int, int> edge2{-1, -1};
  int side2 = -1;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateGeometry : public Error {
  using Error::Error;
};
class GeneralPositionViolation : public Error {
  using Error::Error;
};
class InvalidPolyline : public Error {
  using Error::Error;
};
class ApexNotGeneral : public Error {
  using Error::Error;
};
class PolylinesNotDisjoint : public Error {
  using Error::Error;
};
class NonGenericViewpoint : public Error {
  using Error::Error;
};
class GraphError : public Error {
  using Error::Error;
};
class PointsNotOnRoute : public Error {
  using Error::Error;
};
class SearchExhausted : public Error {
  using Error::Error;
};
class ApexSearchExhausted : public SearchExhausted {
  using SearchExhausted::SearchExhausted;
};
class ApexNotExtremal : public Error {
  using Error::Error;
};
class CyclesNotDisjoint : public Error {
  using Error::Error;
};
class DrawingsNotComparable : public Error {
  using Error::Error;
};
class ParseError : public Error {
  using Error::Error;
};
class ValidationError : public Error {
  using Error::Error;
};

/// Raised when a parity that is a theorem comes out wrong. Never a data
/// condition: it means the implementation is broken.
class InternalParityFailure : public Error {
  using Error::Error;
};

/// Errors that carry the offending violations.
class ViolationError : public Error {
 public:
  ViolationError(const std::string& what, std::vector<Violation> v)
      : Error(what + describe(v)), violations(std::move(v)) {}
  std::vector<Violation> violations;

 private:
  static std::string describe(const std::vector<Violation>& v) {
    if (v.empty()) return "";
    return ": " + v.front().kind + " (" + v.front().detail + ")" +
           (v.size() > 1 ? " and " + std::to_string(v.size() - 1) + " more" : "");
  }
};
class DrawingNotGeneral : public ViolationError {
  using ViolationError::ViolationError;
};
class EmbeddingInvalid : public ViolationError {
  using ViolationError::ViolationError;
};
class ProjectionNotGeneral : public ViolationError {
  using ViolationError::ViolationError;
};

}  // namespace intlink
