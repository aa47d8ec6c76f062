#include <gtest/gtest.h>

#include "compass/competency.hpp"
#include "compass/error.hpp"
#include "compass/query.hpp"

namespace compass::query {
namespace {

namespace listings = competency::listings;

std::size_t count_patterns(const GroupPattern& g) {
  std::size_t n = 0;
  for (const auto& el : g.elements) {
    if (std::holds_alternative<TriplePattern>(el)) ++n;
  }
  return n;
}

template <typename T>
std::size_t count_of(const GroupPattern& g) {
  std::size_t n = 0;
  for (const auto& el : g.elements) n += std::holds_alternative<T>(el) ? 1 : 0;
  return n;
}

Errc error_of(std::string_view text) {
  try {
    parse_query(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return Errc::Io;
}

TEST(Parser, SinglePattern) {
  auto q = parse_query("SELECT ?s WHERE { ?s ?p ?o }");
  EXPECT_FALSE(q.distinct);
  ASSERT_EQ(q.projections.size(), 1u);
  EXPECT_EQ(q.projections[0].var, "s");
  ASSERT_EQ(q.where.elements.size(), 1u);
  const auto& tp = std::get<TriplePattern>(q.where.elements[0]);
  EXPECT_EQ(std::get<Variable>(tp.predicate).name, "p");
}

TEST(Parser, ClientQ3Listing) {
  auto q = parse_query(listings::client_q3);
  EXPECT_TRUE(q.distinct);
  EXPECT_EQ(count_patterns(q.where), 7u);
  EXPECT_EQ(count_of<Bind>(q.where), 1u);
  EXPECT_EQ(q.columns(), (std::vector<std::string>{"service", "code"}));
  const auto& bind = std::get<Bind>(q.where.elements[0]);
  EXPECT_EQ(bind.var, "client");
  EXPECT_EQ(bind.expr.constant, cp("Client16"));
}

TEST(Parser, ClientQ7ListingDesugarsBlankNodes) {
  auto q = parse_query(listings::client_q7_1);
  ASSERT_EQ(count_of<UnionPattern>(q.where), 1u);
  const UnionPattern* u = nullptr;
  for (const auto& el : q.where.elements) {
    if (auto* p = std::get_if<UnionPattern>(&el)) u = p;
  }
  ASSERT_EQ(u->branches.size(), 2u);
  EXPECT_EQ(count_patterns(u->branches[0]), 2u);
  EXPECT_EQ(count_patterns(u->branches[1]), 4u);
  std::size_t internal = 0;
  for (const auto& v : pattern_variables(q.where)) internal += is_internal_var(v) ? 1 : 0;
  EXPECT_EQ(internal, 3u);
}

TEST(Parser, OutcomeQ1ListingIsAnAggregate) {
  auto q = parse_query(listings::outcome_q1);
  EXPECT_TRUE(q.is_aggregate());
  EXPECT_EQ(q.group_by, (std::vector<std::string>{"sh", "loc"}));
  ASSERT_EQ(q.order_by.size(), 1u);
  EXPECT_TRUE(q.order_by[0].descending);
  ASSERT_TRUE(q.projections[2].count);
  EXPECT_EQ(q.projections[2].count->var, "sh");
}

TEST(Parser, ServiceQ2ListingHasNestedCalls) {
  auto q = parse_query(listings::service_q2);
  EXPECT_EQ(count_of<Bind>(q.where), 2u);
  const auto& weeks = std::get<Bind>(q.where.elements.back());
  EXPECT_EQ(weeks.var, "weeks");
  EXPECT_EQ(weeks.expr.kind, Expr::Kind::Call);
  EXPECT_EQ(weeks.expr.name, functions::weeks_between);
  ASSERT_EQ(weeks.expr.args.size(), 2u);
  EXPECT_EQ(weeks.expr.args[0].name, functions::parse_date);
}

TEST(Parser, PrefixDeclarationsExtendTheTable) {
  auto q = parse_query("PREFIX ex: <http://example.org/>\nSELECT * WHERE { ?s ex:p ex:o . }");
  const auto& tp = std::get<TriplePattern>(q.where.elements[0]);
  EXPECT_EQ(std::get<Term>(tp.predicate), Term::iri("http://example.org/p"));
  EXPECT_TRUE(q.select_all);
  EXPECT_EQ(q.columns(), (std::vector<std::string>{"s"}));
}

TEST(Parser, LiteralsAndKeywordA) {
  auto q = parse_query(R"(SELECT ?s WHERE { ?s a cp:Client ; cp:n 3 ; cp:d 2.5 ; cp:t "x" ; cp:u "1"^^xsd:integer ; cp:b true . })");
  ASSERT_EQ(count_patterns(q.where), 6u);
  EXPECT_EQ(std::get<Term>(std::get<TriplePattern>(q.where.elements[0]).predicate), vocab::rdf_type);
  EXPECT_EQ(std::get<Term>(std::get<TriplePattern>(q.where.elements[1]).object), Term::literal("3", xsd::integer));
  EXPECT_EQ(std::get<Term>(std::get<TriplePattern>(q.where.elements[2]).object), Term::literal("2.5", xsd::decimal));
  EXPECT_EQ(std::get<Term>(std::get<TriplePattern>(q.where.elements[4]).object), Term::literal("1", xsd::integer));
}

TEST(Parser, FilterExpressions) {
  auto q = parse_query("SELECT ?s WHERE { ?s cp:n ?n . FILTER(?n >= 2 && !(?n = 5) || ?s != cp:x) }");
  const auto& f = std::get<Filter>(q.where.elements[1]);
  EXPECT_EQ(f.expr.kind, Expr::Kind::Or);
  EXPECT_EQ(f.expr.args[0].kind, Expr::Kind::And);
  EXPECT_EQ(f.expr.args[0].args[1].kind, Expr::Kind::Not);
}

TEST(Parser, UnsupportedFeatures) {
  for (const char* text : {
           "SELECT ?s WHERE { ?s ?p ?o OPTIONAL { ?s ?q ?r } }",
           "SELECT ?s WHERE { ?s ?p ?o } LIMIT 5",
           "SELECT ?s WHERE { ?s ?p ?o } OFFSET 5",
           "SELECT ?s WHERE { ?s cp:a/cp:b ?o }",
           "SELECT ?s WHERE { ?s ?p ?o MINUS { ?s ?p cp:x } }",
           "ASK { ?s ?p ?o }",
           "CONSTRUCT { ?s ?p ?o } WHERE { ?s ?p ?o }",
           "BASE <http://x/> SELECT ?s WHERE { ?s ?p ?o }",
           "SELECT ?s WHERE { ?s ?p ?o FILTER(REGEX(?o, \"x\")) }",
           "SELECT (SUM(?o) AS ?t) WHERE { ?s ?p ?o }",
           "SELECT ?s WHERE { ?s ?p ?o } HAVING (?s)",
       }) {
    EXPECT_EQ(error_of(text), Errc::UnsupportedFeature) << text;
  }
}

TEST(Parser, SyntaxErrors) {
  for (const char* text : {
           "",
           "SELECT WHERE { ?s ?p ?o }",
           "SELECT ?s { ?s ?p }",
           "SELECT ?s WHERE { ?s ?p ?o ",
           "SELECT ?s WHERE { ?s ?p ?o } GARBAGE",
           "SELECT ?s ?s WHERE { ?s ?p ?o }",
           "SELECT ?x WHERE { ?s ?p ?o }",
           "SELECT ?s (COUNT(?o) AS ?n) WHERE { ?s ?p ?o }",
           "SELECT * WHERE { ?s ?p ?o } GROUP BY ?s",
           "SELECT (COUNT(?o) AS ?s) WHERE { ?s ?p ?o }",
           "SELECT ?s WHERE { ?s ?p ?o . BIND(1 AS ?o) }",
           "SELECT ?s WHERE { ?s ?p ?o FILTER(?o = ) }",
       }) {
    EXPECT_EQ(error_of(text), Errc::SyntaxError) << text;
  }
}

TEST(Parser, UndefinedPrefixIsASyntaxError) {
  try {
    parse_query("SELECT ?s WHERE { ?s nope:p ?o }");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SyntaxError);
    EXPECT_NE(std::string(e.what()).find("nope"), std::string::npos) << e.what();
  }
}

TEST(Parser, SyntaxErrorsCarryPositionAndExpectation) {
  try {
    parse_query("SELECT ?s WHERE {\n  ?s ?p\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos) << e.what();
  }
}

TEST(Parser, KeywordsAreCaseInsensitive) {
  auto q = parse_query("select distinct ?s where { ?s ?p ?o } order by desc(?s)");
  EXPECT_TRUE(q.distinct);
  EXPECT_TRUE(q.order_by.at(0).descending);
}

TEST(Parser, CountStarWithoutGroupBy) {
  auto q = parse_query("SELECT (COUNT(*) AS ?n) WHERE { ?s ?p ?o }");
  EXPECT_TRUE(q.is_aggregate());
  ASSERT_TRUE(q.projections[0].count);
  EXPECT_FALSE(q.projections[0].count->var);
}

TEST(Parser, PatternVariablesInFirstAppearanceOrder) {
  auto q = parse_query("SELECT * WHERE { ?b cp:p ?a . BIND(1 AS ?z) { ?c cp:p ?b } UNION { ?d cp:p ?b } }");
  EXPECT_EQ(pattern_variables(q.where), (std::vector<std::string>{"b", "a", "z", "c", "d"}));
}

}  // namespace
}  // namespace compass::query
