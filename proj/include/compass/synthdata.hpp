#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "compass/store.hpp"

namespace compass {

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t client_count = 10;
  std::size_t service_count = 8;
  std::size_t event_count = 20;
  std::vector<std::string> location_names{"Area0", "Area1", "Area2"};
  // Service code class (full IRI) to relative weight.
  std::map<std::string, double> code_mix = default_code_mix();

  static std::map<std::string, double> default_code_mix();
};

// Throws std::invalid_argument for zero counts, an empty location list, or
// non-positive weights / classes without taxonomy codes.
//
// Randomness comes from std::mt19937_64 seeded with `seed`. An index below n
// is drawn as next() % n and a unit draw as (next() >> 11) * 2^-53, so the
// output does not depend on the standard library's distributions.
TripleStore generate(const GenConfig& config);

// The hand-built store behind the published result tables. Also shipped as
// data/fixture.ttl.
TripleStore fixture();

}  // namespace compass
