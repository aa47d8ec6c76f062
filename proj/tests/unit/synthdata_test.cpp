#include <gtest/gtest.h>

#include <stdexcept>

#include "compass/datetime.hpp"
#include "compass/ontology.hpp"
#include "compass/synthdata.hpp"
#include "compass/turtle.hpp"
#include "compass/validator.hpp"

namespace compass {
namespace {

const Schema& S() { return compass_schema(); }

std::size_t count_typed(const TripleStore& s, const char* cls) {
  return s.match(std::nullopt, vocab::rdf_type, cp(cls)).size();
}

TEST(Generate, SameSeedIsByteIdentical) {
  GenConfig cfg;
  cfg.seed = 42;
  EXPECT_EQ(serialize(generate(cfg)), serialize(generate(cfg)));
}

TEST(Generate, DifferentSeedsDiffer) {
  GenConfig a, b;
  a.seed = 1;
  b.seed = 2;
  EXPECT_NE(serialize(generate(a)), serialize(generate(b)));
}

TEST(Generate, ClientCountIsExact) {
  GenConfig cfg;
  cfg.seed = 1;
  cfg.client_count = 10;
  EXPECT_EQ(count_typed(generate(cfg), "Client"), 10u);
  cfg.client_count = 37;
  EXPECT_EQ(count_typed(generate(cfg), "Client"), 37u);
}

TEST(Generate, CountsFollowTheConfig) {
  GenConfig cfg;
  cfg.seed = 9;
  cfg.service_count = 12;
  cfg.event_count = 30;
  cfg.location_names = {"North", "South"};
  auto s = generate(cfg);
  EXPECT_EQ(count_typed(s, "ServiceEvent"), 30u);
  EXPECT_EQ(count_typed(s, "Service") + count_typed(s, "Application"), 12u);
  EXPECT_TRUE(s.has(cp("North_Location"), vocab::rdf_type, make_iri(ns::iso5087, "CityDivision")));
  EXPECT_TRUE(s.has(cp("South_Location"), vocab::rdf_type, make_iri(ns::iso5087, "CityDivision")));
}

TEST(Generate, StructuralGuarantees) {
  for (std::uint64_t seed : {3u, 4u, 5u}) {
    GenConfig cfg;
    cfg.seed = seed;
    auto s = generate(cfg);
    for (const auto& c : s.subjects(vocab::rdf_type, cp("Client"))) {
      auto needs = s.objects(c, cp("hasNeed"));
      ASSERT_FALSE(needs.empty()) << render_full(c);
      for (const auto& n : needs) EXPECT_FALSE(s.objects(n, cp("hasNeedSatisfier")).empty());
    }
    for (const char* cls : {"Service", "Application"}) {
      for (const auto& sv : s.subjects(vocab::rdf_type, cp(cls))) {
        EXPECT_FALSE(s.objects(sv, cids("hasCode")).empty()) << render_full(sv);
        EXPECT_FALSE(s.objects(sv, cp("providesSatisfier")).empty()) << render_full(sv);
      }
    }
    for (const auto& ev : s.subjects(vocab::rdf_type, cp("ServiceEvent"))) {
      auto b = s.objects(ev, make_iri(ns::time, "hasBeginning"));
      auto e = s.objects(ev, make_iri(ns::time, "hasEnd"));
      ASSERT_EQ(b.size(), 1u);
      ASSERT_EQ(e.size(), 1u);
      auto bd = try_parse_date(b[0].value());
      auto ed = try_parse_date(e[0].value());
      ASSERT_TRUE(bd && ed);
      EXPECT_LE(*bd, *ed);
    }
  }
}

TEST(Generate, ValidatesClean) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    auto v = validate(generate(cfg), S());
    for (const auto& x : v) ADD_FAILURE() << "seed " << seed << ": " << explain(x);
  }
}

TEST(Generate, SingleCodeClassMix) {
  GenConfig cfg;
  cfg.code_mix = {{iri_of(ns::cp, "Shelter"), 1.0}};
  auto s = generate(cfg);
  for (const auto& sv : s.subjects(vocab::rdf_type, cp("Service"))) {
    for (const auto& c : s.objects(sv, cids("hasCode"))) {
      EXPECT_TRUE(is_instance_of(s, S(), c, cp("Shelter"))) << render_full(c);
    }
  }
}

TEST(Generate, RejectsInvalidConfigs) {
  auto bad = [](auto mutate) {
    GenConfig cfg;
    mutate(cfg);
    EXPECT_THROW(generate(cfg), std::invalid_argument);
  };
  bad([](GenConfig& c) { c.client_count = 0; });
  bad([](GenConfig& c) { c.service_count = 0; });
  bad([](GenConfig& c) { c.event_count = 0; });
  bad([](GenConfig& c) { c.location_names.clear(); });
  bad([](GenConfig& c) { c.code_mix.clear(); });
  bad([](GenConfig& c) { c.code_mix = {{iri_of(ns::cp, "Shelter"), 0.0}}; });
  bad([](GenConfig& c) { c.code_mix = {{iri_of(ns::cp, "Shelter"), -1.0}}; });
  bad([](GenConfig& c) { c.code_mix = {{iri_of(ns::cp, "NoSuchClass"), 1.0}}; });
}

TEST(Fixture, IsConstant) { EXPECT_EQ(fixture(), fixture()); }

TEST(Fixture, CarriesThePublishedScenario) {
  auto f = fixture();
  EXPECT_EQ(f.objects(cp("Client16"), cp("hasNeed")).size(), 2u);
  EXPECT_TRUE(f.has(cp("Client2"), vocab::rdf_type, cp("Client")));
  EXPECT_TRUE(f.has(cp("Comp-Inst-Female-Homeless-Area0"), vocab::rdf_type, cids("CompositeCharacteristic")));
  for (const char* s : {"S17-Female-Shelter", "S10-1-Shelter", "S14-Housing-For-Homeless",
                        "S15-A0-Addiction-Services", "S06-1-Counseling"}) {
    EXPECT_FALSE(f.objects(cp(s), cids("hasCode")).empty()) << s;
  }
  EXPECT_TRUE(validate(f, S()).empty());
}

TEST(Fixture, Client2CounselingIsOne301DaySpan) {
  auto f = fixture();
  std::vector<Term> events;
  for (const auto& ev : f.subjects(cp("forClient"), cp("Client2"))) {
    if (f.has(ev, cids("hasCode"), cp("INST-Counseling"))) events.push_back(ev);
  }
  ASSERT_EQ(events.size(), 1u);
  auto b = parse_date(f.objects(events[0], make_iri(ns::time, "hasBeginning")).at(0).value());
  auto e = parse_date(f.objects(events[0], make_iri(ns::time, "hasEnd")).at(0).value());
  EXPECT_EQ(e, add_days(b, 301));
}

}  // namespace
}  // namespace compass
