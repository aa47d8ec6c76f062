#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "compass/ontology.hpp"
#include "compass/store.hpp"
#include "compass/term.hpp"

namespace compass::competency {

struct ServiceMatch {
  Term service;
  std::set<Term> codes;
  std::set<Term> matched_satisfiers;

  bool operator==(const ServiceMatch&) const = default;
};

struct Barrier {
  Term client;
  Term service;
  Term unmet_characteristic;
  std::optional<Term> removal_service_type;

  bool operator==(const Barrier&) const = default;
};

struct Eligibility {
  std::vector<ServiceMatch> eligible;
  std::vector<ServiceMatch> blocked;  // matching services with at least one barrier
  std::vector<Barrier> barriers;
};

struct Gap {
  Term location;
  Term satisfier;
  std::size_t demanding_clients = 0;

  bool operator==(const Gap&) const = default;
};

struct Duplicate {
  Term location;
  Term service_code;
  std::set<Term> focus;
  std::set<Term> services;

  bool operator==(const Duplicate&) const = default;
};

struct CoverageReport {
  std::vector<Gap> gaps;
  std::vector<Duplicate> duplicates;
};

struct DemographicRow {
  Term location;
  Term stakeholder;
  Term service_code;
  std::size_t count = 0;

  bool operator==(const DemographicRow&) const = default;
};

struct Duration {
  std::int64_t weeks = 0;
  std::vector<Term> skipped_events;  // lacking a parseable begin or end
};

struct CharacteristicCount {
  Term characteristic;
  std::size_t count = 0;

  bool operator==(const CharacteristicCount&) const = default;
};

struct FocusGroup {
  std::optional<Term> focus;  // nullopt collects services without a focus
  std::vector<Term> services;
};

struct CommunitySize {
  Term community;
  std::uint64_t number = 0;
};

// Services providing a satisfier of one of the client's needs. Only services
// carrying a cids:hasCode are returned, as in the matching query.
// Throws Error(UnknownClient).
std::vector<ServiceMatch> services_matching_needs(const TripleStore& store, const Schema& schema,
                                                  const Term& client);

// Splits services_matching_needs into eligible and blocked services. A
// requirement is met when the client (or a stakeholder it satisfies) holds
// it as a characteristic, holds it as a code, or holds every code and part
// it is composed of.
Eligibility eligibility_and_barriers(const TripleStore& store, const Schema& schema,
                                     const Term& client);

// Throws Error(UnknownSatisfier).
std::vector<ServiceMatch> alternative_services(const TripleStore& store, const Schema& schema,
                                               const Term& satisfier, const Term& profile,
                                               const std::set<Term>& exclude = {});

// Requirement codes of `service` that are instances of `code_class`, through
// direct and composite requirements. Throws Error(UnknownService).
std::vector<Term> requirements_in_class(const TripleStore& store, const Schema& schema,
                                        const Term& service, std::string_view code_class);

// requirements_in_class(..., cp:CL-Info_Privacy).
std::vector<Term> privacy_requirements(const TripleStore& store, const Schema& schema,
                                       const Term& service);

// Sum of weeks over the client's service events coded `service_code`.
// Throws Error(UnknownClient).
Duration service_duration_weeks(const TripleStore& store, const Schema& schema, const Term& client,
                                const Term& service_code);

// Service-usage rows per (location, stakeholder, event code), counted with
// the multiplicity of the demographic-group query, sorted by count
// descending.
std::vector<DemographicRow> priority_demographics(const TripleStore& store, const Schema& schema);

// Services filtered by code class (closure over hasCode and providesService)
// and program location. Throws Error(UnknownCodeClass).
std::vector<ServiceMatch> list_services(const TripleStore& store, const Schema& schema,
                                        const std::optional<Term>& code_class,
                                        const std::optional<Term>& location);

std::vector<FocusGroup> group_by_focus(const TripleStore& store,
                                       const std::vector<ServiceMatch>& services);

// Failure events against services carrying `service_code` (a code instance,
// or a code class matched with closure), grouped by cp:hasCharacteristic.
std::vector<CharacteristicCount> barrier_aggregate(const TripleStore& store, const Schema& schema,
                                                   const Term& service_code);

CoverageReport gaps_and_duplicates(const TripleStore& store, const Schema& schema);

// Eligible services minus those with a scheduled or in-progress service
// event for the client. Throws Error(UnknownClient).
std::vector<ServiceMatch> referral_options(const TripleStore& store, const Schema& schema,
                                           const Term& client);

std::vector<CommunitySize> community_sizes(const TripleStore& store, const Schema& schema);

// Locations a service is offered at: program or service address, then
// i72:located_in.
std::set<Term> service_locations(const TripleStore& store, const Term& service);

// The published query texts, and the same texts with their bound constants
// replaced.
namespace listings {
extern const std::string_view client_q3;
extern const std::string_view client_q6;
extern const std::string_view client_q7_1;
extern const std::string_view service_q2;
extern const std::string_view outcome_q1;

std::string client_q3_for(const Term& client);
std::string client_q6_for(const Term& satisfier, const Term& profile);
std::string client_q7_1_for(const Term& service);
std::string service_q2_for(const Term& client, const Term& service_code);
}  // namespace listings

}  // namespace compass::competency
