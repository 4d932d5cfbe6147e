#pragma once

// JSON encoding of the public types. Complex numbers are {"re", "im"};
// the boundary point ∞ is the string "inf" and rho = -∞ is "-inf".

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "horo/horo.hpp"

namespace horo::io {

using json = nlohmann::ordered_json;

/// Malformed input; the message names the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

json to_json(const Complex<double>& z);
json to_json(const Spinor<double>& k);
json to_json(const MinkVec<double>& p);
json to_json(const Flag<double>& f);
json to_json(const BoundaryPoint<double>& c);
json to_json(const DecoratedHorosphere<double>& h);
json to_json(const ComplexDistance<double>& d);
json to_json(const LambdaLength<double>& l);
json to_json(const ShapeTriple<double>& s);
json to_json(const PolygonClass& c);
json to_json(const FordCircle& c);
json to_json(const FrameBasis<double>& b);

template <typename T>
T from_json(const json& j);

template <>
Complex<double> from_json(const json& j);
template <>
NonzeroSpinor<double> from_json(const json& j);
template <>
MinkVec<double> from_json(const json& j);
template <>
Flag<double> from_json(const json& j);
template <>
BoundaryPoint<double> from_json(const json& j);
template <>
DecoratedHorosphere<double> from_json(const json& j);
template <>
ComplexDistance<double> from_json(const json& j);
template <>
FordCircle from_json(const json& j);

/// Copy of j with every floating-point number rounded to `digits`
/// significant digits and negative zero cleared.
json rounded(const json& j, int digits = 12);

}  // namespace horo::io
