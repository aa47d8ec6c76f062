#include <gtest/gtest.h>

#include "compass/error.hpp"
#include "compass/store.hpp"
#include "compass/synthdata.hpp"

namespace compass {
namespace {

const TripleStore& fixture_store() {
  static const TripleStore s = fixture();
  return s;
}

Term type() { return vocab::rdf_type; }

TEST(Term, LiteralDatatypeDefaultsToString) {
  EXPECT_EQ(Term::literal("x").datatype(), xsd::string);
}

TEST(Term, EqualityIsLexical) {
  EXPECT_NE(Term::literal("1", xsd::integer), Term::literal("01", xsd::integer));
  EXPECT_NE(Term::literal("1", xsd::integer), Term::literal("1"));
  EXPECT_NE(Term::iri("urn:a"), Term::blank("urn:a"));
  EXPECT_EQ(cp("Client2"), Term::iri("http://helpseeker.co/compass#Client2"));
}

TEST(Term, RejectsMalformedIris) {
  for (const char* bad : {"", "has space", "tab\there"}) {
    try {
      Term::iri(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::MalformedTerm);
    }
  }
  EXPECT_THROW(Term::blank(""), Error);
}

TEST(Term, CompactUsesLongestNamespace) {
  PrefixMap p = default_prefixes();
  EXPECT_EQ(compact_iri(iri_of(ns::cp, "Client16"), p), "cp:Client16");
  EXPECT_EQ(compact_iri("http://example.org/x", p), "<http://example.org/x>");
  p["cpx"] = std::string(ns::cp) + "INST-";
  EXPECT_EQ(compact_iri(iri_of(ns::cp, "INST-Youth"), p), "cpx:Youth");
}

TEST(Term, ResolveAcceptsPrefixedBracketedAndBareNames) {
  const auto& p = default_prefixes();
  EXPECT_EQ(resolve_iri("cp:Client16", p), cp("Client16"));
  EXPECT_EQ(resolve_iri("<urn:x>", p), Term::iri("urn:x"));
  EXPECT_EQ(resolve_iri("http://helpseeker.co/compass#S06-1-Counseling", p), cp("S06-1-Counseling"));
  EXPECT_EQ(resolve_iri("Client16", p), cp("Client16"));
  try {
    resolve_iri("nope:x", p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UndefinedPrefix);
  }
}

TEST(Term, RenderingForms) {
  const auto& p = default_prefixes();
  EXPECT_EQ(render(Term::literal("a\"b"), p), "\"a\\\"b\"");
  EXPECT_EQ(render(Term::literal("3", xsd::integer), p), "\"3\"^^xsd:integer");
  EXPECT_EQ(render_full(Term::literal("3", xsd::integer)),
            "\"3\"^^<http://www.w3.org/2001/XMLSchema#integer>");
  EXPECT_EQ(render(Term::blank("b1"), p), "_:b1");
}

TEST(Store, DefaultPrefixesCoverTheOntologyNamespaces) {
  TripleStore s;
  for (const char* label : {"cp", "cids", "ic", "i72", "oep", "rdf", "rdfs", "time", "schema", "iso5087-2"}) {
    EXPECT_TRUE(s.prefixes().count(label)) << label;
  }
}

TEST(Store, InsertIntoEmptyStore) {
  TripleStore s;
  EXPECT_TRUE(s.insert(cp("Client2"), type(), cp("Client")));
  EXPECT_EQ(s.size(), 1u);
}

TEST(Store, DuplicateInsertIsNoOp) {
  TripleStore s;
  EXPECT_TRUE(s.insert(cp("Client2"), type(), cp("Client")));
  EXPECT_FALSE(s.insert(cp("Client2"), type(), cp("Client")));
  EXPECT_EQ(s.size(), 1u);
}

TEST(Store, EventStubMatchesByClient) {
  TripleStore s;
  s.insert(cp("SE-1"), type(), cp("ServiceEvent"));
  s.insert(cp("SE-1"), cp("forClient"), cp("Client2"));
  s.insert(cp("SE-1"), cids("hasCode"), cp("INST-Counseling"));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.match(std::nullopt, cp("forClient"), cp("Client2")).size(), 1u);
}

TEST(Store, RejectsMalformedTriples) {
  TripleStore s;
  EXPECT_THROW(s.insert(cp("a"), Term::literal("p"), cp("b")), Error);
  EXPECT_THROW(s.insert(cp("a"), Term::blank("p"), cp("b")), Error);
  EXPECT_THROW(s.insert(Term::literal("a"), cp("p"), cp("b")), Error);
  EXPECT_EQ(s.size(), 0u);
}

TEST(Store, MatchOnEmptyStoreIsEmpty) {
  TripleStore s;
  EXPECT_TRUE(s.match(std::nullopt, std::nullopt, std::nullopt).empty());
}

TEST(Store, UnboundMatchReturnsEverything) {
  const auto& s = fixture_store();
  EXPECT_EQ(s.match(std::nullopt, std::nullopt, std::nullopt).size(), s.size());
}

TEST(Store, FixtureServiceEventsByType) {
  const auto& s = fixture_store();
  auto events = s.match(std::nullopt, type(), cp("ServiceEvent"));
  std::size_t by_hand = 0;
  for (const auto& t : s.triples()) {
    if (t.predicate == type() && t.object == cp("ServiceEvent")) ++by_hand;
  }
  EXPECT_EQ(events.size(), by_hand);
  EXPECT_GT(by_hand, 10u);
}

TEST(Store, Client16HasTwoNeeds) {
  auto needs = fixture_store().objects(cp("Client16"), cp("hasNeed"));
  ASSERT_EQ(needs.size(), 2u);
}

TEST(Store, EqualityIgnoresInsertionOrder) {
  TripleStore a, b;
  a.insert(cp("x"), cp("p"), cp("y"));
  a.insert(cp("y"), cp("p"), Term::literal("1", xsd::integer));
  b.insert(cp("y"), cp("p"), Term::literal("1", xsd::integer));
  b.insert(cp("x"), cp("p"), cp("y"));
  EXPECT_EQ(a, b);
  b.insert(cp("z"), cp("p"), cp("y"));
  EXPECT_NE(a, b);
}

TEST(Store, SubjectsAndObjects) {
  TripleStore s;
  s.insert(cp("a"), cp("p"), cp("b"));
  s.insert(cp("a"), cp("p"), cp("c"));
  s.insert(cp("d"), cp("p"), cp("c"));
  EXPECT_EQ(s.objects(cp("a"), cp("p")).size(), 2u);
  EXPECT_EQ(s.subjects(cp("p"), cp("c")).size(), 2u);
  EXPECT_TRUE(s.has(cp("d"), cp("p"), cp("c")));
  EXPECT_FALSE(s.has(cp("d"), cp("p"), cp("b")));
  EXPECT_TRUE(s.objects(cp("zzz"), cp("p")).empty());
}

TEST(Store, FreshBlankLabelsDoNotCollide) {
  TripleStore s;
  auto a = s.fresh_blank_label("x");
  auto b = s.fresh_blank_label("x");
  EXPECT_EQ(a, "x");
  EXPECT_NE(a, b);
}

}  // namespace
}  // namespace compass
