#pragma once

#include <string>
#include <vector>

#include "compass/ontology.hpp"
#include "compass/store.hpp"

namespace compass::testing {

// Runs each typed competency operation and the matching query listing
// (constants substituted) over every applicable subject in the store and
// returns one message per disagreement:
//   Q-3   services_matching_needs vs (service, code) rows, for each client
//   Q-6   alternative_services vs (service, code) rows, for each satisfier
//         and each requirement used by some service
//   Q-7.1 privacy_requirements vs ?dataReq, for each service
//   Q-2   service_duration_weeks vs the sum of ?weeks without DISTINCT, for
//         each client and event code
//   Q-1   priority_demographics summed per (loc, sh) vs ?count
std::vector<std::string> agreement_failures(const TripleStore& store, const Schema& schema);

}  // namespace compass::testing
