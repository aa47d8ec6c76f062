#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "compass/error.hpp"
#include "compass/synthdata.hpp"
#include "compass/turtle.hpp"

namespace compass {
namespace {

Errc error_of(std::string_view doc) {
  TripleStore s;
  try {
    load_text(s, doc);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << doc;
  return Errc::Io;
}

TEST(Turtle, EmptyDocumentLoadsNothing) {
  TripleStore s;
  EXPECT_EQ(load_text(s, ""), 0u);
  EXPECT_EQ(load_text(s, "# only a comment\n"), 0u);
}

TEST(Turtle, SingleStatement) {
  TripleStore s;
  EXPECT_EQ(load_text(s, "@prefix cp: <http://helpseeker.co/compass#> .\ncp:Client2 rdf:type cp:Client ."), 1u);
  EXPECT_TRUE(s.has(cp("Client2"), vocab::rdf_type, cp("Client")));
}

TEST(Turtle, AbbreviationsAndLiterals) {
  TripleStore s;
  auto n = load_text(s, R"(
    PREFIX ex: <http://example.org/>
    ex:a a cp:Client ;
         ex:p ex:b , ex:c ;
         ex:n 42 ; ex:d -1.5 ; ex:t true ;
         ex:s "line\nnext \"q\"" ;
         ex:dt "2020-01-06T09:00:00.000"^^xsd:dateTime ;
         ex:full <http://example.org/z> .
    _:x ex:p [ ex:q ex:r ] .
    _:x ex:p2 _:x .
  )");
  EXPECT_EQ(n, 12u);
  Term a = Term::iri("http://example.org/a");
  EXPECT_TRUE(s.has(a, vocab::rdf_type, cp("Client")));
  EXPECT_EQ(s.objects(a, Term::iri("http://example.org/p")).size(), 2u);
  EXPECT_TRUE(s.has(a, Term::iri("http://example.org/n"), Term::literal("42", xsd::integer)));
  EXPECT_TRUE(s.has(a, Term::iri("http://example.org/d"), Term::literal("-1.5", xsd::decimal)));
  EXPECT_TRUE(s.has(a, Term::iri("http://example.org/t"), Term::literal("true", xsd::boolean)));
  EXPECT_TRUE(s.has(a, Term::iri("http://example.org/s"), Term::literal("line\nnext \"q\"")));
  EXPECT_EQ(s.prefixes().at("ex"), "http://example.org/");
}

TEST(Turtle, BlankLabelsAreScopedPerDocument) {
  TripleStore s;
  load_text(s, "_:x cp:p cp:a .");
  load_text(s, "_:x cp:p cp:b .");
  auto subjects_a = s.subjects(cp("p"), cp("a"));
  auto subjects_b = s.subjects(cp("p"), cp("b"));
  ASSERT_EQ(subjects_a.size(), 1u);
  ASSERT_EQ(subjects_b.size(), 1u);
  EXPECT_NE(subjects_a[0], subjects_b[0]);
}

TEST(Turtle, ParseErrorsCarryPosition) {
  TripleStore s;
  try {
    load_text(s, "cp:a cp:p cp:b .\ncp:a cp:p .");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(Turtle, ErrorKinds) {
  EXPECT_EQ(error_of("nope:a cp:p cp:b ."), Errc::UndefinedPrefix);
  EXPECT_EQ(error_of("cp:a cp:p cp:b"), Errc::ParseError);
  EXPECT_EQ(error_of("cp:a cp:p \"x\"@en ."), Errc::ParseError);
  EXPECT_EQ(error_of("\"lit\" cp:p cp:b ."), Errc::ParseError);
  EXPECT_EQ(error_of("cp:a cp:p \"unterminated ."), Errc::ParseError);
  EXPECT_EQ(error_of("@base <http://x/> ."), Errc::ParseError);
}

TEST(Turtle, EmptyStoreSerializesToPrefixesOnly) {
  TripleStore s;
  std::string text = serialize(s);
  for (const auto& [label, base] : s.prefixes()) {
    EXPECT_NE(text.find("@prefix " + label + ": <" + base + "> ."), std::string::npos);
  }
  EXPECT_EQ(text.find(" .\n\n"), std::string::npos);
  TripleStore back;
  EXPECT_EQ(load_text(back, text), 0u);
}

TEST(Turtle, SingleTripleUsesPrefixedForm) {
  TripleStore s;
  s.insert(cp("Client2"), vocab::rdf_type, cp("Client"));
  std::string text = serialize(s);
  EXPECT_NE(text.find("\ncp:Client2 rdf:type cp:Client .\n"), std::string::npos);
}

TEST(Turtle, FixtureRoundTripIsByteStable) {
  TripleStore f = fixture();
  std::string once = serialize(f);
  TripleStore back;
  load_text(back, once);
  EXPECT_EQ(back, f);
  EXPECT_EQ(serialize(back), once);
}

TEST(Turtle, LoadFileReportsMissingFile) {
  TripleStore s;
  try {
    load_file(s, "/nonexistent/dir/data.ttl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Io);
  }
}

TEST(Turtle, LoadFileReadsWhatSerializeWrote) {
  auto path = std::filesystem::temp_directory_path() / "compass_turtle_test.ttl";
  TripleStore f = fixture();
  {
    std::ofstream out(path, std::ios::binary);
    out << serialize(f);
  }
  TripleStore back;
  EXPECT_EQ(load_file(back, path), f.size());
  EXPECT_EQ(back, f);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace compass
