#pragma once

#include "ebg/admissible.hpp"
#include "ebg/anneal.hpp"
#include "ebg/automorphism.hpp"
#include "ebg/census.hpp"
#include "ebg/verify.hpp"

#include <json.hpp>

#include <string>

namespace ebg {

using Json = nlohmann::ordered_json;

// Unbounded values render as decimal strings; rationals as "p" or "p/q".
std::string int_str(const Int& v);
std::string rat_str(const Rat& v);

Json to_json(const Profile2& p);
Json to_json(const Profile3& p);
Json to_json(const Profile4& p);
Json to_json(const TargetProfile& t);
Json to_json(const AutResult& a);
Json to_json(const IndexReport& r);
Json to_json(const FourEdgeReport& r);
Json to_json(const Certificate& c);
Json to_json(const SmallNReport& r);
Json to_json(const AnnealConfig& c);
Json to_json(const SearchResult& r, const AnnealConfig& cfg, int n, std::int64_t k);
Json to_json(const CheckpointState& st, const AnnealConfig& cfg);

CheckpointState checkpoint_from_json(const Json& j);
AnnealConfig config_from_json(const Json& j);

}  // namespace ebg
