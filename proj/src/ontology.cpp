#include "compass/ontology.hpp"

#include <algorithm>
#include <boost/tokenizer.hpp>
#include <sstream>

#include "compass/error.hpp"

namespace compass {

void Schema::add_class(const std::string& iri, std::initializer_list<std::string_view> supers) {
  classes_.insert(iri);
  for (auto s : supers) add_subclass(iri, std::string(s));
}

void Schema::add_subclass(const std::string& sub, const std::string& super) {
  classes_.insert(sub);
  classes_.insert(super);
  if (sub == super || is_subclass_of(super, sub)) {
    throw Error(Errc::UnknownClass, "subclass edge " + sub + " -> " + super + " creates a cycle");
  }
  supers_[sub].insert(super);
  subs_[super].insert(sub);
}

void Schema::add_property(PropertyDecl decl) {
  decl.coded = std::holds_alternative<CodeClassRange>(decl.range);
  properties_.push_back(std::move(decl));
}

std::vector<const PropertyDecl*> Schema::declarations(std::string_view iri) const {
  std::vector<const PropertyDecl*> out;
  for (const auto& p : properties_) {
    if (p.iri == iri) out.push_back(&p);
  }
  return out;
}

std::vector<std::string> Schema::direct_superclasses(std::string_view iri) const {
  auto it = supers_.find(iri);
  if (it == supers_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

namespace {

std::set<std::string> closure(const std::map<std::string, std::set<std::string>, std::less<>>& edges,
                              std::string_view start) {
  std::set<std::string> seen{std::string(start)};
  std::vector<std::string> stack{std::string(start)};
  while (!stack.empty()) {
    std::string cur = std::move(stack.back());
    stack.pop_back();
    auto it = edges.find(cur);
    if (it == edges.end()) continue;
    for (const auto& n : it->second) {
      if (seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen;
}

}  // namespace

std::set<std::string> Schema::superclasses(std::string_view iri) const { return closure(supers_, iri); }
std::set<std::string> Schema::subclasses(std::string_view iri) const { return closure(subs_, iri); }

bool Schema::is_subclass_of(std::string_view sub, std::string_view super) const {
  if (sub == super) return true;
  return superclasses(sub).count(std::string(super)) > 0;
}

namespace {

std::string CP(std::string_view l) { return iri_of(ns::cp, l); }
std::string CIDS(std::string_view l) { return iri_of(ns::cids, l); }

const std::vector<std::string_view> kClientEvents = {
    "EducationEvent", "EmploymentEvent", "MedicalEvent",  "MilitaryEvent", "ImmigrationEvent",
    "HousingEvent",   "NameEvent",       "GenderEvent",   "BirthEvent",    "DeathEvent",
    "MaritalEvent",   "HomelessEvent",   "JusticeSystemEvent"};

const std::vector<std::string_view> kClientCodeClasses = {
    "CL-Age",           "CL-Ethnicity",        "CL-Family_Status",     "CL-Gender",
    "CL-Religion",      "CL-Sexuality",        "CL-Aboriginal_Group",  "CL-Citizenship",
    "CL-Finance_Status", "CL-Education_Status", "CL-Employment_Status", "CL-Legal",
    "CL-Shelter_Type",  "CL-Homelessness",     "CL-Safety",            "CL-Health_Status",
    "CL-Mental_Health", "CL-Constraint",       "CL-Rank",              "CL-Temporality",
    "CL-Info_Privacy",  "CL-Residence",        "CL-Identification",    "CL-Program_Rules",
    "CL-Language"};

const std::vector<std::string_view> kServiceCodeClasses = {
    "CL-Health",   "CL-Cost",          "CL-Personal", "Shelter", "CL-Advocacy", "CL-Referral",
    "CL-Education", "CL-Employment",   "CL-Relationships", "CL-Finance", "CL-Goods", "CL-Food"};

const std::vector<std::string_view> kNeedCodeClasses = {"CL-Need_Acquire", "CL-Need_Improve"};

struct DeclBuilder {
  Schema& schema;

  void object(std::string iri, std::set<std::string> domain, std::string range_class,
              bool functional = false) {
    schema.add_property({std::move(iri), std::move(domain), ClassRange{std::move(range_class)},
                         false, functional});
  }
  void coded(std::string iri, std::set<std::string> domain, std::string code_class,
             bool functional = false) {
    schema.add_property({std::move(iri), std::move(domain), CodeClassRange{std::move(code_class)},
                         true, functional});
  }
  void enumeration(std::string iri, std::set<std::string> domain, std::vector<std::string> values,
                   bool functional = false) {
    schema.add_property({std::move(iri), std::move(domain), EnumerationRange{std::move(values)},
                         false, functional});
  }
  void datatype(std::string iri, std::set<std::string> domain, std::string dt,
                bool functional = false) {
    schema.add_property(
        {std::move(iri), std::move(domain), DatatypeRange{std::move(dt)}, false, functional});
  }
};

}  // namespace

Schema build_compass_schema() {
  Schema s;
  const std::string person = iri_of(ns::iso5087, "Person");
  const std::string city_division = iri_of(ns::iso5087, "CityDivision");
  const std::string thing = iri_of("http://www.w3.org/2002/07/owl#", "Thing");

  // CIDS core scaffold.
  s.add_class(CIDS("Organization"));
  s.add_class(CIDS("ImpactModel"));
  s.add_class(CIDS("Program"));
  s.add_class(CIDS("Service"));
  s.add_class(CIDS("Activity"));
  s.add_class(CIDS("Indicator"));
  s.add_class(CIDS("Stakeholder"));
  s.add_class(CIDS("BeneficialStakeholder"), {CIDS("Stakeholder")});
  s.add_class(CIDS("ContributingStakeholder"), {CIDS("Stakeholder")});
  s.add_class(CIDS("Outcome"));
  s.add_class(CIDS("Characteristic"));
  s.add_class(CIDS("CompositeCharacteristic"), {CIDS("Characteristic")});
  s.add_class(CIDS("Code"));

  // Codes.
  s.add_class(CP("ClientCode"), {CIDS("Code")});
  s.add_class(CP("ServiceCode"), {CIDS("Code")});
  s.add_class(CP("NeedCode"), {CIDS("Code")});
  for (auto c : kClientCodeClasses) s.add_class(CP(c), {CP("ClientCode")});
  for (auto c : kServiceCodeClasses) s.add_class(CP(c), {CP("ServiceCode")});
  for (auto c : kNeedCodeClasses) s.add_class(CP(c), {CP("NeedCode")});

  // Client pattern.
  s.add_class(person);
  s.add_class(CP("Client"), {person});
  s.add_class(CP("LanguageAbility"));
  s.add_class(CP("StakeholderOutcome"), {CIDS("Outcome")});

  // Service pattern.
  s.add_class(CP("Service"), {CIDS("Service")});
  s.add_class(CP("Application"), {CP("Service")});
  s.add_class(city_division);
  s.add_class(CP("Community"), {city_division});
  s.add_class(CP("CommunityCharacteristic"), {CIDS("Characteristic")});

  // Needs pattern.
  s.add_class(CP("ClientState"));
  s.add_class(CP("ClientProblem"));
  s.add_class(CP("ClientGoal"));
  s.add_class(CP("ClientNeed"));
  s.add_class(CP("NeedSatisfier"));
  s.add_class(CP("Status"));

  // Event pattern.
  s.add_class(CP("Event"));
  s.add_class(CP("ClientEvent"), {CP("Event")});
  s.add_class(CP("StakeholderEvent"), {CP("Event")});
  s.add_class(CP("ServiceFailureEvent"), {CP("ClientEvent")});
  s.add_class(CP("ServiceEvent"), {CP("Event")});
  s.add_class(CP("ApplicationEvent"), {CP("Event")});
  for (auto e : kClientEvents) s.add_class(CP(e), {CP("ClientEvent")});

  DeclBuilder d{s};
  const std::set<std::string> client{CP("Client")};
  const std::set<std::string> service{CP("Service")};
  const std::set<std::string> event{CP("Event")};
  const std::set<std::string> any{};

  // CIDS links used as targets.
  d.object(CIDS("hasProgram"), {CIDS("Organization"), CIDS("ImpactModel")}, CIDS("Program"));
  d.object(CIDS("hasService"), {CIDS("Program")}, CIDS("Service"));
  d.object(CIDS("hasActivity"), {CIDS("Service")}, CIDS("Activity"));
  d.object(CIDS("hasOutcome"), {CIDS("Stakeholder"), CP("Client")}, CP("StakeholderOutcome"));
  d.object(CIDS("hasCharacteristic"), any, CIDS("Characteristic"));
  d.coded(CIDS("hasCode"), any, CIDS("Code"));
  d.object(iri_of(ns::oep, "hasPart"), any, thing);
  d.object(iri_of(ns::i72, "located_in"), any, thing);

  // Client.
  d.object(CP("satisfiesStakeholder"), client, CIDS("Stakeholder"));
  d.coded(CP("hasGender"), client, CP("CL-Gender"));
  d.coded(CP("hasEthnicity"), client, CP("CL-Ethnicity"));
  d.coded(CP("memberOfAboriginalGroup"), client, CP("CL-Aboriginal_Group"));
  d.coded(CP("hasReligion"), client, CP("CL-Religion"));
  d.object(CP("hasDependent"), client, person);
  d.object(iri_of(ns::schema, "knowsLanguage"), client, CP("LanguageAbility"));
  d.coded(CP("hasRank"), {CIDS("Characteristic")}, CP("CL-Rank"));
  d.coded(CP("hasTemporality"), {CIDS("Characteristic")}, CP("CL-Temporality"));

  // Service.
  d.object(CP("hasRequirement"), service, CIDS("Characteristic"));
  d.coded(CP("providesService"), service, CP("ServiceCode"));
  d.coded(CP("hasFocus"), service, CP("ClientCode"));
  d.enumeration(CP("hasMode"), service, {"in-person", "phone", "online", "offline"});
  d.object(CP("providesSatisfier"), service, CP("NeedSatisfier"));
  d.object(iri_of(ns::ic, "hasAddress"), {CIDS("Program"), CP("Service")}, thing);
  d.datatype(CP("hasSource"), {CP("Application"), CP("ApplicationEvent")}, xsd::string);
  d.object(CP("hasCommunityCharacteristic"), {CP("Community")}, CP("CommunityCharacteristic"));
  d.datatype(CP("hasNumber"), {CP("Community")}, xsd::non_negative_integer, true);

  // Needs.
  d.object(CP("hasClientState"), client, CP("ClientState"));
  d.object(CP("hasProblem"), client, CP("ClientProblem"));
  d.object(CP("hasGoal"), client, CP("ClientGoal"));
  d.object(CP("hasNeed"), client, CP("ClientNeed"));
  d.enumeration(CP("hasAcquityScore"), {CP("Client"), CP("ClientNeed")},
                {"Low", "Medium", "High", "1", "2", "3"}, true);
  d.object(CP("hasStatus"), client, CP("Status"));
  d.object(CP("hasNeedSatisfier"), {CP("ClientNeed")}, CP("NeedSatisfier"));
  d.object(CP("hasType"), {CP("NeedSatisfier")}, thing);
  d.object(CP("forNeed"), {CP("NeedSatisfier")}, CP("ClientNeed"));
  d.object(CP("changes"), {CP("NeedSatisfier")}, CP("ClientState"));

  // Events.
  d.object(CP("occursAt"), event, iri_of(ns::time, "Interval"));
  d.object(CP("hasLocation"), event, thing);
  d.object(CP("previousEvent"), event, CP("Event"));
  d.object(CP("nextEvent"), event, CP("Event"));
  d.object(CP("forClient"), {CP("ClientEvent"), CP("ServiceEvent")}, CP("Client"));
  d.object(CP("forStakeholder"), {CP("StakeholderEvent")}, CIDS("Stakeholder"));
  d.object(CP("forService"), {CP("ServiceFailureEvent"), CP("ServiceEvent")}, CIDS("Service"));
  d.object(CP("hasCharacteristic"), {CP("ServiceFailureEvent")}, CIDS("Characteristic"));
  d.coded(CP("hasFailureType"), {CP("ServiceFailureEvent")}, CP("ServiceCode"));
  d.enumeration(CP("hasStatus"), {CP("ServiceEvent")}, {"scheduled", "inProgress", "completed"});
  d.object(CP("atOrganization"), {CP("ServiceEvent")}, CIDS("Organization"));
  d.object(CP("hasReferral"), {CP("ServiceEvent")}, thing);
  d.object(CP("hasApplication"), {CP("ApplicationEvent")}, CP("Application"));
  d.object(CP("hasUserStakeholder"), {CP("ApplicationEvent")}, CIDS("Stakeholder"));
  d.datatype(CP("hasMetaData"), {CP("ApplicationEvent")}, xsd::string);
  d.datatype(iri_of(ns::time, "hasBeginning"), event, xsd::date_time, true);
  d.datatype(iri_of(ns::time, "hasEnd"), event, xsd::date_time, true);

  return s;
}

const Schema& compass_schema() {
  static const Schema schema = build_compass_schema();
  return schema;
}

namespace {

std::string expand_name(const std::string& text) {
  return resolve_iri(text, default_prefixes()).value();
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<TaxonomyCode> load_taxonomy(const Schema& schema, std::string_view table) {
  std::istringstream in{std::string(table)};
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  std::vector<TaxonomyCode> out;
  std::set<std::string> instances;
  const std::string code_root = CIDS("Code");

  using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    try {
      Tokenizer tok(line);
      for (const auto& c : tok) cells.push_back(trim(c));
    } catch (const boost::escaped_list_error& e) {
      throw Error(Errc::ParseError, std::string("malformed CSV row: ") + e.what(), line_no, 1);
    }
    if (!seen_header) {
      seen_header = true;
      if (cells.size() < 3 || cells[0] != "instance" || cells[1] != "codeClass" ||
          cells[2] != "label") {
        throw Error(Errc::ParseError, "expected header instance,codeClass,label,externalRef",
                    line_no, 1);
      }
      continue;
    }
    if (cells.size() < 3 || cells.size() > 4) {
      throw Error(Errc::ParseError, "expected 3 or 4 columns", line_no, 1);
    }
    TaxonomyCode code;
    code.instance = expand_name(cells[0]);
    code.code_class = expand_name(cells[1]);
    code.label = cells[2];
    if (cells.size() == 4 && !cells[3].empty()) code.external_ref = cells[3];

    if (!schema.has_class(code.code_class) || code.code_class == code_root ||
        !schema.is_subclass_of(code.code_class, code_root)) {
      throw Error(Errc::UnknownCodeClass, "unknown code class " + cells[1], line_no, 1);
    }
    if (!instances.insert(code.instance).second) {
      throw Error(Errc::DuplicateInstance, "duplicate code instance " + cells[0], line_no, 1);
    }
    out.push_back(std::move(code));
  }
  return out;
}

void apply_taxonomy(TripleStore& store, const std::vector<TaxonomyCode>& codes) {
  for (const auto& c : codes) {
    Term inst = Term::iri(c.instance);
    store.insert(inst, vocab::rdf_type, Term::iri(c.code_class));
    store.insert(inst, vocab::rdfs_label, Term::literal(c.label));
  }
}

bool has_type(const TripleStore& store, const Schema& schema, const Term& node,
              std::string_view class_iri) {
  auto node_id = store.lookup(node);
  auto type_id = store.lookup(vocab::rdf_type);
  if (!node_id || !type_id) return false;
  const auto subs = schema.subclasses(class_iri);
  for (const auto& t : store.match_ids(*node_id, *type_id, std::nullopt)) {
    const Term& c = store.term(t.o);
    if (c.is_iri() && subs.count(c.value()) > 0) return true;
  }
  return false;
}

bool is_instance_of(const TripleStore& store, const Schema& schema, const Term& node,
                    const Term& class_iri) {
  if (!class_iri.is_iri() || !schema.has_class(class_iri.value())) {
    throw Error(Errc::UnknownClass, "unknown class " + class_iri.value());
  }
  return has_type(store, schema, node, class_iri.value());
}

}  // namespace compass
