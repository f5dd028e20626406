#pragma once

#include <json.hpp>

#include <string>

#include "univoque/baseclass.hpp"
#include "univoque/components.hpp"
#include "univoque/oracle.hpp"
#include "univoque/sft.hpp"

namespace univoque {

using Json = nlohmann::json;

// Decimal rendering of a rational, truncated toward zero after `digits` places.
std::string decimal_string(const Rat& r, int digits);

Json json_of(const EpSeq& s);
Json json_of(const AlgebraicReal& a, int decimal_digits = 12);
Json json_of(const BaseSpec& b);
Json json_of(const BaseClass& c);
Json json_of(const PointClass& p);
Json json_of(const AlphaOfOne& a, int alphabet_max);
Json json_of(const ExpansionsOfOne& e, long materialize = 0);
Json json_of(const StabilityInterval& s);
Json json_of(const ClosureComponent& c);
Json json_of(const DoublingResult& d, int alphabet_max);
Json json_of(const SmallestUnivoque& s, int alphabet_max);
Json json_of(const ForbiddenSet& f);
Json json_of(const PrefixTree& t);
Json json_of(const Constants& c);

}  // namespace univoque
