#pragma once

#include <json.hpp>

#include "tfg/classify.hpp"
#include "tfg/genus.hpp"
#include "tfg/models.hpp"
#include "tfg/rank.hpp"

namespace tfg {

using Json = nlohmann::json;

struct ConfigParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json to_json(const Partition& p);
Json to_json(const SurfaceConfig& cfg);
Json to_json(const GenusReport& rep);
Json to_json(const GenusOneClass& cls); // includes the matched family
Json to_json(const RankReport& rep);
Json to_json(const ModelSpec& spec);
Json to_json(const CatalogRow& row);

// Strict readers: unknown fields are rejected, partitions may be given in
// any order and are canonicalized on load.
SurfaceConfig config_from_json(const Json& j);
ModelSpec model_spec_from_json(const Json& j);
GenusOneClass class_from_json(const Json& j);

} // namespace tfg
