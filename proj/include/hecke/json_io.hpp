#pragma once

// JSON encodings used by the command-line reports.
//
//   Rational            "num/den"
//   LaurentPoly         {"<exponent>": "num/den", ...}
//   ExtendedWeylElement {"k": int, "window": [int, ...]}
//   HeckeElement        [{"element": ..., "coefficient": ...}, ...]
//   PlaceOperator       {"perm": [images], "scale": "num/den"}

#include "json.hpp"

#include "hecke/affine_weyl.hpp"
#include "hecke/distinction.hpp"
#include "hecke/gelfand.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/laurent.hpp"
#include "hecke/rational.hpp"
#include "hecke/spherical.hpp"
#include "hecke/tensor_ops.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const LaurentPoly& p);
Json to_json(const ExtendedWeylElement& w);
Json to_json(const PlaceOperator& op);
Json to_json(const EigenReport& r);
Json to_json(const PresentationReport& r);
Json to_json(const GrowthSeries& g);
Json to_json(const IntegralReport& r);
Json to_json(const NonvanishingReport& r);
Json to_json(const GelfandReport& r);

ExtendedWeylElement weyl_element_from_json(const Json& j);

template <ExactScalar S>
Json to_json(const HeckeElement<S>& h) {
  Json arr = Json::array();
  for (const auto& [w, c] : h.terms()) arr.push_back({{"element", to_json(w)}, {"coefficient", to_json(c)}});
  return arr;
}

}  // namespace hecke
