#pragma once

#include <nlohmann/json.hpp>

#include "tricomm/census.hpp"
#include "tricomm/evaluation.hpp"
#include "tricomm/local_search.hpp"

namespace tricomm {

// Field names match the struct members. Missing optionals serialise as null.

void to_json(nlohmann::json &j, const CensusReport &report);
void to_json(nlohmann::json &j, const MetricsReport &report);
void to_json(nlohmann::json &j, const LsfConfig &config);

/// One JSON-lines trace record: {round, changed_count, modularity, objective}.
nlohmann::json trace_line(const RoundRecord &record);

} // namespace tricomm
