#pragma once

#include <json.hpp>

#include "igrkp/collections.hpp"
#include "igrkp/complexes.hpp"
#include "igrkp/staircase.hpp"

namespace igrkp {

using json = nlohmann::json;

json to_json(const Weight& w);
json to_json(const BlockWeight& w);
json to_json(const Space& s);
json to_json(const Bundle& b);
json to_json(const VirtualBundle& v);
json to_json(const ChainComplex& c);
json to_json(const StaircaseData& d);
json to_json(const Census& c);
json to_json(const Block& b);
json to_json(const FClassReport& r);
json to_json(const DualCharReport& r);
json to_json(const ExcReport& r);
json to_json(const SemiReport& r);

Weight weight_from_json(const json& j);
Space space_from_json(const json& j);
Bundle bundle_from_json(const json& j);

/* Complexes rendered as a one-line LaTeX display. */
std::string latex(const ChainComplex& c);
std::string latex(const Bundle& b);

}  // namespace igrkp
