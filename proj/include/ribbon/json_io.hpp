#pragma once
#include <nlohmann/json.hpp>

#include "ribbon/bundles.hpp"
#include "ribbon/multischeme.hpp"
#include "ribbon/surface.hpp"

namespace ribbon {

using Json = nlohmann::ordered_json;

Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json trunc_to_json(const TruncElem& e);
TruncElem trunc_from_json(const Json& j);

Json auto_to_json(const TruncAuto& a);
TruncAuto auto_from_json(const Json& j);

Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j);

Json class_to_json(const CohClass& c);

Json scheme_to_json(const MultiScheme& X);
MultiScheme scheme_from_json(const Json& j);

Json bundle_to_json(const BundleCocycle& E);
BundleCocycle bundle_from_json(const Json& j);

CurveProfile profile_from_json(const Json& j);

}  // namespace ribbon
