#include <gtest/gtest.h>

#include <set>

#include "compass/error.hpp"
#include "compass/ontology.hpp"
#include "compass/synthdata.hpp"

namespace compass {
namespace {

const Schema& S() { return compass_schema(); }
std::string CP(std::string_view l) { return iri_of(ns::cp, l); }
std::string CIDS(std::string_view l) { return iri_of(ns::cids, l); }

const PropertyDecl* decl_for(std::string_view iri, std::string_view domain) {
  for (const auto* d : S().declarations(iri)) {
    if (d->domain.count(std::string(domain))) return d;
  }
  return nullptr;
}

TEST(Schema, EventHierarchy) {
  EXPECT_TRUE(S().is_subclass_of(CP("ClientEvent"), CP("Event")));
  EXPECT_TRUE(S().is_subclass_of(CP("ServiceEvent"), CP("Event")));
  EXPECT_TRUE(S().is_subclass_of(CP("ServiceFailureEvent"), CP("Event")));
  EXPECT_TRUE(S().is_subclass_of(CP("HomelessEvent"), CP("ClientEvent")));
  EXPECT_FALSE(S().is_subclass_of(CP("Event"), CP("ClientEvent")));
}

TEST(Schema, CoreClassesArePresent) {
  for (const auto& c : {CP("Client"), CP("Service"), CP("Application"), CP("NeedSatisfier"), CP("ClientNeed"),
                        CP("Community"), CIDS("Organization"), CIDS("Program"), CIDS("Stakeholder"),
                        CIDS("BeneficialStakeholder"), CIDS("Characteristic"), CIDS("CompositeCharacteristic"),
                        CIDS("Code"), CP("ClientCode"), CP("ServiceCode"), CP("NeedCode")}) {
    EXPECT_TRUE(S().has_class(c)) << c;
  }
  EXPECT_TRUE(S().is_subclass_of(CP("Application"), CP("Service")));
}

TEST(Schema, HasModeIsAnEnumeration) {
  auto decls = S().declarations(CP("hasMode"));
  ASSERT_EQ(decls.size(), 1u);
  const auto* e = std::get_if<EnumerationRange>(&decls[0]->range);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->values, (std::vector<std::string>{"in-person", "phone", "online", "offline"}));
}

TEST(Schema, HasStatusDependsOnDomain) {
  const auto* on_event = decl_for(CP("hasStatus"), CP("ServiceEvent"));
  ASSERT_NE(on_event, nullptr);
  const auto* e = std::get_if<EnumerationRange>(&on_event->range);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->values, (std::vector<std::string>{"scheduled", "inProgress", "completed"}));
  const auto* on_client = decl_for(CP("hasStatus"), CP("Client"));
  ASSERT_NE(on_client, nullptr);
  EXPECT_NE(on_client, on_event);
}

TEST(Schema, CodedPropertiesHaveCodeClassRanges) {
  const Schema& s = S();
  for (const auto& d : s.properties()) {
    bool code_range = std::holds_alternative<CodeClassRange>(d.range);
    EXPECT_EQ(d.coded, code_range) << d.iri;
    if (code_range) {
      const auto& cls = std::get<CodeClassRange>(d.range).iri;
      EXPECT_TRUE(s.is_subclass_of(cls, CIDS("Code"))) << d.iri << " -> " << cls;
    }
    if (auto* e = std::get_if<EnumerationRange>(&d.range)) {
      EXPECT_FALSE(e->values.empty()) << d.iri;
      EXPECT_EQ(std::set<std::string>(e->values.begin(), e->values.end()).size(), e->values.size()) << d.iri;
    }
  }
  const auto* gender = S().declarations(CP("hasGender")).at(0);
  EXPECT_TRUE(gender->coded);
  EXPECT_EQ(std::get<CodeClassRange>(gender->range).iri, CP("CL-Gender"));
}

TEST(Schema, CodeClassesSitUnderTheThreeRoots) {
  for (const auto& cls : S().classes()) {
    if (!S().is_subclass_of(cls, CIDS("Code")) || cls == CIDS("Code")) continue;
    if (cls == CP("ClientCode") || cls == CP("ServiceCode") || cls == CP("NeedCode")) continue;
    EXPECT_TRUE(S().is_subclass_of(cls, CP("ClientCode")) || S().is_subclass_of(cls, CP("ServiceCode")) ||
                S().is_subclass_of(cls, CP("NeedCode")))
        << cls;
  }
}

TEST(Schema, SubclassClosureIsReflexiveAndTransitive) {
  auto supers = S().superclasses(CP("HomelessEvent"));
  EXPECT_TRUE(supers.count(CP("HomelessEvent")));
  EXPECT_TRUE(supers.count(CP("ClientEvent")));
  EXPECT_TRUE(supers.count(CP("Event")));
  EXPECT_TRUE(S().subclasses(CP("Event")).count(CP("HomelessEvent")));
}

TEST(Schema, RejectsCycles) {
  Schema s;
  s.add_class("urn:a");
  s.add_class("urn:b", {"urn:a"});
  s.add_class("urn:c", {"urn:b"});
  try {
    s.add_subclass("urn:a", "urn:c");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownClass);
  }
}

TEST(Schema, BuildIsDeterministic) { EXPECT_EQ(build_compass_schema(), S()); }

TEST(Taxonomy, ToddlerRow) {
  auto codes = load_taxonomy(S(), "instance,codeClass,label,externalRef\nINST-Toddler,CL-Age,Toddler,\n");
  ASSERT_EQ(codes.size(), 1u);
  EXPECT_EQ(codes[0].instance, CP("INST-Toddler"));
  EXPECT_EQ(codes[0].code_class, CP("CL-Age"));
  EXPECT_EQ(codes[0].label, "Toddler");
  EXPECT_FALSE(codes[0].external_ref);
}

TEST(Taxonomy, HeaderOnlyIsEmpty) {
  EXPECT_TRUE(load_taxonomy(S(), "instance,codeClass,label,externalRef\n").empty());
}

TEST(Taxonomy, QuotedCellsAndExternalRefs) {
  auto codes = load_taxonomy(
      S(), "instance,codeClass,label,externalRef\ncp:INST-X,cp:CL-Age,\"Old, very\",http://example.org/x\n");
  ASSERT_EQ(codes.size(), 1u);
  EXPECT_EQ(codes[0].label, "Old, very");
  EXPECT_EQ(codes[0].external_ref, "http://example.org/x");
}

TEST(Taxonomy, Errors) {
  auto code_of = [](std::string_view csv) {
    try {
      load_taxonomy(S(), csv);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Io;
  };
  EXPECT_EQ(code_of("instance,codeClass,label\nINST-X,CL-Nonexistent,X\n"), Errc::UnknownCodeClass);
  EXPECT_EQ(code_of("instance,codeClass,label\nINST-X,Client,X\n"), Errc::UnknownCodeClass);
  EXPECT_EQ(code_of("instance,codeClass,label\nINST-X,CL-Age,X\nINST-X,CL-Gender,Y\n"), Errc::DuplicateInstance);
  EXPECT_EQ(code_of("inst,cls\nINST-X,CL-Age,X\n"), Errc::ParseError);
  EXPECT_EQ(code_of("instance,codeClass,label\nINST-X,CL-Age\n"), Errc::ParseError);
}

TEST(Taxonomy, BundledTableLoadsAndCoversEveryClientCodeClassUsed) {
  auto codes = load_taxonomy(S(), default_taxonomy_csv());
  EXPECT_GT(codes.size(), 50u);
  std::set<std::string> classes;
  for (const auto& c : codes) classes.insert(c.code_class);
  for (auto cls : {"CL-Age", "CL-Gender", "CL-Homelessness", "CL-Info_Privacy", "CL-Health", "Shelter"}) {
    EXPECT_TRUE(classes.count(CP(cls))) << cls;
  }
}

TEST(Instances, ServiceEventIsAnEvent) {
  TripleStore s;
  s.insert(cp("SE-1"), vocab::rdf_type, cp("ServiceEvent"));
  EXPECT_TRUE(is_instance_of(s, S(), cp("SE-1"), cp("Event")));
  EXPECT_FALSE(is_instance_of(s, S(), cp("SE-1"), cp("ClientEvent")));
}

TEST(Instances, UntypedNodeIsNothing) {
  TripleStore s;
  s.insert(cp("x"), cp("p"), cp("y"));
  EXPECT_FALSE(is_instance_of(s, S(), cp("x"), cp("Event")));
  EXPECT_FALSE(is_instance_of(s, S(), cp("absent"), cp("Event")));
}

TEST(Instances, UnknownClassThrows) {
  TripleStore s;
  try {
    is_instance_of(s, S(), cp("x"), cp("NoSuchClass"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownClass);
  }
}

TEST(Instances, DoctorYesIsAPrivacyCode) {
  TripleStore f = fixture();
  EXPECT_TRUE(is_instance_of(f, S(), cp("INST-Doctor_Yes"), cp("CL-Info_Privacy")));
  EXPECT_TRUE(is_instance_of(f, S(), cp("INST-Doctor_Yes"), cp("ClientCode")));
  EXPECT_TRUE(is_instance_of(f, S(), cp("INST-Doctor_Yes"), cids("Code")));
  EXPECT_FALSE(is_instance_of(f, S(), cp("INST-Doctor_Yes"), cp("ServiceCode")));
}

}  // namespace
}  // namespace compass
