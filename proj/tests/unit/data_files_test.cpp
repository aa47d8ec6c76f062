#include <gtest/gtest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "compass/competency.hpp"
#include "compass/ontology.hpp"
#include "compass/synthdata.hpp"
#include "compass/turtle.hpp"

namespace compass {
namespace {

namespace listings = competency::listings;

std::string slurp(const std::string& relative) {
  std::ifstream in(std::filesystem::path(COMPASS_SOURCE_DIR) / relative, std::ios::binary);
  EXPECT_TRUE(in) << relative;
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

TEST(DataFiles, FixtureFileMatchesTheBuiltFixture) { EXPECT_EQ(slurp("data/fixture.ttl"), serialize(fixture())); }

TEST(DataFiles, FixtureSerializationHashIsPinned) {
  auto text = serialize(fixture());
  EXPECT_EQ(text.size(), 29178u);
  EXPECT_EQ(fnv1a(text), 0xcbff236a8df875bdULL);
}

TEST(DataFiles, TaxonomyFileMatchesTheBundledTable) {
  EXPECT_EQ(slurp("data/taxonomy.csv"), default_taxonomy_csv());
}

TEST(DataFiles, QueryFilesMatchTheListings) {
  EXPECT_EQ(slurp("queries/client_q3.rq"), listings::client_q3);
  EXPECT_EQ(slurp("queries/client_q6.rq"), listings::client_q6);
  EXPECT_EQ(slurp("queries/client_q7_1.rq"), listings::client_q7_1);
  EXPECT_EQ(slurp("queries/service_q2.rq"), listings::service_q2);
  EXPECT_EQ(slurp("queries/outcome_q1.rq"), listings::outcome_q1);
}

}  // namespace
}  // namespace compass
