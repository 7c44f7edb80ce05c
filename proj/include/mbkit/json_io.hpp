#pragma once

#include <string>

#include <json.hpp>

#include "mbkit/obstructions.hpp"
#include "mbkit/realization.hpp"
#include "mbkit/search.hpp"

namespace mbk {

// External schemas. Certificates: {schema, kind, graph6, n, k, eigenvalues,
// multiplicities, matrix (row-major), tolerances, provenance, original_eigenvalues}.
// nlohmann objects keep keys sorted, and doubles print shortest-round-trip,
// so identical inputs serialize byte for byte.
nlohmann::json certificate_to_json(const RealizationCertificate& cert);
RealizationCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json pattern_report_to_json(const PatternReport& rep);
nlohmann::json bounds_report_to_json(const BoundsReport& rep);
nlohmann::json search_result_to_json(const SearchResult& res, bool include_certificate = true);
nlohmann::json search_config_to_json(const SearchConfig& cfg);
SearchConfig search_config_from_json(const nlohmann::json& j);
nlohmann::json minimal_bipartition_to_json(const MinimalBipartitionResult& res);

std::string obstruction_kind_name(ObstructionWitness::Kind k);

}  // namespace mbk
