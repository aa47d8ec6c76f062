#include "compass/synthdata.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "compass/datetime.hpp"
#include "compass/ontology.hpp"

namespace compass {

namespace {

Term time_iri(std::string_view local) { return make_iri(ns::time, local); }
Term oep(std::string_view local) { return make_iri(ns::oep, local); }
Term i72(std::string_view local) { return make_iri(ns::i72, local); }

Term date_literal(DateTime t) { return Term::literal(format_date(t), xsd::date_time); }

class Builder {
 public:
  explicit Builder(TripleStore& store) : store_(store) {}

  void add(const Term& s, const Term& p, const Term& o) { store_.insert(s, p, o); }
  void type(const Term& s, const Term& cls) { add(s, vocab::rdf_type, cls); }
  void label(const Term& s, std::string text) { add(s, vocab::rdfs_label, Term::literal(std::move(text))); }

  // A characteristic carrying one code.
  Term characteristic(const std::string& name, const Term& code) {
    Term c = cp(name);
    type(c, cids("Characteristic"));
    add(c, cids("hasCode"), code);
    return c;
  }

  Term composite(const std::string& name, const std::vector<Term>& parts) {
    Term c = cp(name);
    type(c, cids("CompositeCharacteristic"));
    for (const auto& p : parts) add(c, oep("hasPart"), p);
    return c;
  }

 private:
  TripleStore& store_;
};

TripleStore base_store() {
  TripleStore store;
  apply_taxonomy(store, load_taxonomy(compass_schema(), default_taxonomy_csv()));
  return store;
}

}  // namespace

TripleStore fixture() {
  TripleStore store = base_store();
  Builder b(store);
  auto code = [](std::string_view local) { return cp("INST-" + std::string(local)); };

  const Term area0 = cp("Area0_Location");
  const Term area1 = cp("Area1_Location");
  for (const auto& [loc, name] : {std::pair{area0, "Area0"}, std::pair{area1, "Area1"}}) {
    b.type(loc, make_iri(ns::iso5087, "CityDivision"));
    b.label(loc, name);
  }

  // Characteristics.
  const Term female = b.characteristic("Char-Female", code("Female"));
  const Term male = b.characteristic("Char-Male", code("Male"));
  const Term homeless = b.characteristic("Char-Homeless", code("Homeless"));
  const Term housed = b.characteristic("Char-Housed", code("Housed"));
  const Term youth = b.characteristic("Char-Youth", code("Youth"));
  const Term adult = b.characteristic("Char-Adult", code("Adult"));
  const Term addicted = b.characteristic("Char-Addicted", code("Addicted"));
  const Term in_area0 = b.characteristic("Char-Area0", code("Area0"));
  const Term in_area1 = b.characteristic("Char-Area1", code("Area1"));
  const Term doctor = b.characteristic("Char-Doctor_Yes", code("Doctor_Yes"));
  const Term service_used = b.characteristic("Char-Service_Used_Yes", code("Service_Used_Yes"));
  const Term health_card = b.characteristic("Char-Health_Card", code("Health_Card_Yes"));

  const Term female_homeless_area0 =
      b.composite("Comp-Inst-Female-Homeless-Area0", {female, homeless, in_area0});
  const Term homeless_area0 = b.composite("Comp-Inst-Homeless-Area0", {homeless, in_area0});
  const Term consent = b.composite("Comp-Consent-Service_Used", {service_used, in_area0});

  // Need satisfiers.
  auto satisfier = [&](const std::string& name, std::string text) {
    Term s = cp(name);
    b.type(s, cp("NeedSatisfier"));
    b.label(s, std::move(text));
    return s;
  };
  const Term ns_housing = satisfier("NS-Housing", "Housing");
  const Term ns_addiction = satisfier("NS-Addiction_Treatment", "Addiction treatment");
  const Term ns_counseling = satisfier("NS-Counseling", "Counseling");
  const Term ns_medication = satisfier("NS-Medication", "Medication");
  const Term ns_id = satisfier("NS-ID_Documents", "Identity documents");
  const Term ns_food = satisfier("NS-Food", "Food");

  // Services.
  struct ServiceSpec {
    std::string name;
    std::string code;
    Term satisfier;
    std::vector<Term> requirements;
    std::vector<std::string> focus;
    std::vector<std::string> modes;
  };
  const std::vector<ServiceSpec> services = {
      {"S17-Female-Shelter", "Temporary_Shelter", ns_housing, {female_homeless_area0}, {"Female", "Homeless"}, {"in-person"}},
      {"S10-1-Shelter", "Shelter", ns_housing, {female_homeless_area0}, {"Female"}, {"in-person"}},
      {"S14-Housing-For-Homeless", "Housing", ns_housing, {homeless_area0}, {"Homeless"}, {"in-person"}},
      {"S15-A0-Addiction-Services", "Addiction_Services", ns_addiction, {addicted}, {"Addicted"}, {"in-person"}},
      {"S06-1-Counseling", "Counseling", ns_counseling, {doctor, consent}, {}, {"in-person", "phone"}},
      {"S22-Pharmacy", "Pharmacy", ns_medication, {health_card}, {}, {"in-person"}},
      {"S30-ID-Clinic", "ID_Clinic", ns_id, {}, {}, {"in-person"}},
      {"S40-Food-Bank", "Food_Bank", ns_food, {}, {}, {"in-person"}},
  };
  for (const auto& spec : services) {
    Term s = cp(spec.name);
    b.type(s, cp("Service"));
    b.add(s, cids("hasCode"), code(spec.code));
    b.add(s, cp("providesService"), code(spec.code));
    b.add(s, cp("providesSatisfier"), spec.satisfier);
    for (const auto& r : spec.requirements) b.add(s, cp("hasRequirement"), r);
    for (const auto& f : spec.focus) b.add(s, cp("hasFocus"), code(f));
    for (const auto& m : spec.modes) b.add(s, cp("hasMode"), Term::literal(m));
  }
  const Term meal_app = cp("S41-Meal-App");
  b.type(meal_app, cp("Application"));
  b.add(meal_app, cids("hasCode"), code("Meal_Delivery"));
  b.add(meal_app, cp("providesSatisfier"), ns_food);
  b.add(meal_app, cp("hasMode"), Term::literal("online"));
  b.add(meal_app, cp("hasSource"), Term::literal("https://meals.example.org/app"));

  // Organization, programs and their addresses.
  const Term org = cp("Org-Community_Services");
  b.type(org, cids("Organization"));
  struct ProgramSpec {
    std::string name;
    Term location;
    std::vector<std::string> services;
  };
  const std::vector<ProgramSpec> programs = {
      {"Prog-Shelters", area0, {"S17-Female-Shelter", "S10-1-Shelter", "S14-Housing-For-Homeless"}},
      {"Prog-Health", area0, {"S15-A0-Addiction-Services", "S06-1-Counseling", "S22-Pharmacy", "S30-ID-Clinic"}},
      {"Prog-Community", area1, {"S40-Food-Bank"}},
  };
  for (const auto& p : programs) {
    Term prog = cp(p.name);
    Term addr = cp("Addr-" + p.name.substr(5));
    b.type(prog, cids("Program"));
    b.add(org, cids("hasProgram"), prog);
    b.add(prog, make_iri(ns::ic, "hasAddress"), addr);
    b.add(addr, i72("located_in"), p.location);
    for (const auto& s : p.services) b.add(prog, cids("hasService"), cp(s));
  }

  // Stakeholders.
  auto stakeholder = [&](const std::string& name, const Term& loc, const std::vector<Term>& chars) {
    Term sh = cp(name);
    b.type(sh, cids("BeneficialStakeholder"));
    b.add(sh, i72("located_in"), loc);
    for (const auto& c : chars) b.add(sh, cids("hasCharacteristic"), c);
    return sh;
  };
  const Term sh_fhy = stakeholder("sh-Female-Housed-Youth-in_Area0", area0,
                                  {b.composite("Comp-Female-Housed-Youth", {female, housed, youth})});
  const Term sh_mya = stakeholder("sh-Male-Youth-Addicted-in_Area0", area0,
                                  {b.composite("Comp-Male-Youth-Addicted", {male, youth, addicted})});
  const Term sh_faa = stakeholder("sh-Female-Adult-Addicted-in_Area0", area0, {female, adult, addicted});
  const Term sh_hmy = stakeholder("sh-Homeless-Male-Youth-in_Area0", area0,
                                  {b.composite("Comp-Homeless-Male-Youth", {homeless, male, youth})});
  const Term sh_hfa = stakeholder("sh-Homeless-Female-Addicted-in_Area0", area0,
                                  {b.composite("Comp-Homeless-Female-Addicted", {homeless, female, addicted})});
  const Term sh_adult_area1 = stakeholder("sh-Adult-in_Area1", area1, {adult, in_area1});

  auto client = [&](int n, const Term& sh) {
    Term c = cp("Client" + std::to_string(n));
    b.type(c, cp("Client"));
    b.add(c, cp("satisfiesStakeholder"), sh);
    return c;
  };
  auto need = [&](const std::string& name, const Term& who, const Term& need_code,
                  const std::vector<Term>& satisfiers, const std::string& acuity) {
    Term n = cp(name);
    b.type(n, cp("ClientNeed"));
    b.add(who, cp("hasNeed"), n);
    b.add(n, cids("hasCode"), need_code);
    b.add(n, cp("hasAcquityScore"), Term::literal(acuity));
    for (const auto& s : satisfiers) b.add(n, cp("hasNeedSatisfier"), s);
  };

  int event_serial = 0;
  auto service_event = [&](const Term& who, const std::string& service, const std::string& svc_code,
                           const std::string& status, DateTime begin, std::optional<DateTime> end) {
    Term ev = cp("SE-" + std::to_string(++event_serial));
    b.type(ev, cp("ServiceEvent"));
    b.add(ev, cp("forClient"), who);
    b.add(ev, cp("forService"), cp(service));
    b.add(ev, cids("hasCode"), code(svc_code));
    b.add(ev, cp("hasStatus"), Term::literal(status));
    b.add(ev, time_iri("hasBeginning"), date_literal(begin));
    if (end) b.add(ev, time_iri("hasEnd"), date_literal(*end));
    return ev;
  };
  const DateTime jan_2021 = parse_date("2021-01-04T10:00:00.000");

  // Client16: homeless, addicted, in counseling.
  const Term c16 = client(16, sh_hfa);
  b.add(c16, cp("hasGender"), code("Female"));
  for (const auto& ch : {in_area0, doctor, service_used}) b.add(c16, cids("hasCharacteristic"), ch);
  need("Need-16-Housing", c16, code("Improve_Housing"), {ns_housing}, "High");
  need("Need-16-Addiction", c16, code("Reduce_Addiction"), {ns_addiction, ns_counseling}, "High");
  service_event(c16, "S06-1-Counseling", "Counseling", "inProgress", parse_date("2021-03-01T09:30:00.000"),
                std::nullopt);
  const Term housing_ev = cp("Event-16-Housing");
  const Term homeless_ev = cp("Event-16-Homeless");
  b.type(housing_ev, cp("HousingEvent"));
  b.type(homeless_ev, cp("HomelessEvent"));
  b.add(housing_ev, cp("forClient"), c16);
  b.add(homeless_ev, cp("forClient"), c16);
  b.add(housing_ev, time_iri("hasBeginning"), date_literal(parse_date("2019-05-01T00:00:00.000")));
  b.add(homeless_ev, time_iri("hasBeginning"), date_literal(parse_date("2020-08-15T00:00:00.000")));
  b.add(housing_ev, cp("nextEvent"), homeless_ev);
  b.add(homeless_ev, cp("previousEvent"), housing_ev);

  // Client2: 301 days of counseling.
  const Term c2 = client(2, sh_fhy);
  service_event(c2, "S06-1-Counseling", "Counseling", "completed", parse_date("2020-01-06T09:00:00.000"),
                parse_date("2020-11-02T09:00:00.000"));

  // Service users behind the demographic table.
  auto users = [&](int first, int count, const Term& sh, const std::string& service,
                   const std::string& svc_code) {
    for (int n = first; n < first + count; ++n) {
      Term c = client(n, sh);
      DateTime begin = add_days(jan_2021, 7 * (n - first));
      service_event(c, service, svc_code, "completed", begin, add_days(begin, 28 + n));
    }
  };
  users(20, 5, sh_fhy, "S06-1-Counseling", "Counseling");
  users(30, 5, sh_mya, "S15-A0-Addiction-Services", "Addiction_Services");
  users(40, 3, sh_faa, "S15-A0-Addiction-Services", "Addiction_Services");
  users(50, 2, sh_hmy, "S14-Housing-For-Homeless", "Housing");

  // Client7: needs medication, lacks a health card.
  const Term c7 = client(7, sh_faa);
  need("Need-7-Medication", c7, code("Improve_Health"), {ns_medication}, "Medium");
  const Term failure = cp("SFE-7-Pharmacy");
  b.type(failure, cp("ServiceFailureEvent"));
  b.add(failure, cp("forClient"), c7);
  b.add(failure, cp("forService"), cp("S22-Pharmacy"));
  b.add(failure, cp("hasCharacteristic"), health_card);
  b.add(failure, cp("hasFailureType"), code("ID_Clinic"));
  b.add(failure, time_iri("hasBeginning"), date_literal(parse_date("2021-02-10T14:00:00.000")));

  // Client60: housing demand in Area1, where nobody offers housing.
  const Term c60 = client(60, sh_adult_area1);
  need("Need-60-Housing", c60, code("Acquire_Housing"), {ns_housing}, "2");

  // Community counts.
  const Term community = cp("Community-Area0-Youth");
  const Term youth_char = cp("CommChar-Youth");
  b.type(community, cp("Community"));
  b.type(youth_char, cp("CommunityCharacteristic"));
  b.add(youth_char, cids("hasCode"), code("Youth"));
  b.add(community, cp("hasCommunityCharacteristic"), youth_char);
  b.add(community, i72("located_in"), area0);
  b.add(community, cp("hasNumber"), Term::literal("240", xsd::non_negative_integer));

  return store;
}

std::map<std::string, double> GenConfig::default_code_mix() {
  return {
      {iri_of(ns::cp, "Shelter"), 3.0},     {iri_of(ns::cp, "CL-Health"), 2.0},
      {iri_of(ns::cp, "CL-Food"), 1.0},     {iri_of(ns::cp, "CL-Advocacy"), 1.0},
      {iri_of(ns::cp, "CL-Education"), 1.0},
  };
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[index(v.size())];
  }

  // Up to `k` distinct elements in draw order.
  template <typename T>
  std::vector<T> sample(const std::vector<T>& v, std::size_t k) {
    std::vector<T> out;
    for (std::size_t i = 0; i < k; ++i) {
      const T& x = pick(v);
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<Term> codes_of(const std::vector<TaxonomyCode>& taxonomy, const Schema& schema,
                           std::string_view cls) {
  std::vector<Term> out;
  for (const auto& c : taxonomy) {
    if (schema.is_subclass_of(c.code_class, cls)) out.push_back(Term::iri(c.instance));
  }
  return out;
}

}  // namespace

TripleStore generate(const GenConfig& config) {
  if (config.client_count == 0 || config.service_count == 0 || config.event_count == 0) {
    throw std::invalid_argument("generator counts must be at least 1");
  }
  if (config.location_names.empty()) throw std::invalid_argument("at least one location is required");
  if (config.code_mix.empty()) throw std::invalid_argument("code mix must not be empty");

  const Schema& schema = compass_schema();
  const auto taxonomy = load_taxonomy(schema, default_taxonomy_csv());

  std::vector<std::pair<std::vector<Term>, double>> mix;
  double total_weight = 0;
  for (const auto& [cls, w] : config.code_mix) {
    if (!(w > 0)) throw std::invalid_argument("code mix weights must be positive");
    auto codes = codes_of(taxonomy, schema, cls);
    if (codes.empty()) throw std::invalid_argument("no taxonomy codes for class " + cls);
    mix.emplace_back(std::move(codes), w);
    total_weight += w;
  }

  TripleStore store;
  apply_taxonomy(store, taxonomy);
  Builder b(store);
  Rng rng(config.seed);

  auto draw_service_code = [&] {
    double x = rng.unit() * total_weight;
    for (const auto& [codes, w] : mix) {
      if (x < w) return rng.pick(codes);
      x -= w;
    }
    return rng.pick(mix.back().first);
  };

  const auto demographic_codes = [&] {
    std::vector<Term> out;
    for (auto cls : {"CL-Gender", "CL-Age", "CL-Homelessness", "CL-Health_Status"}) {
      auto c = codes_of(taxonomy, schema, iri_of(ns::cp, cls));
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }();
  const auto gender_codes = codes_of(taxonomy, schema, iri_of(ns::cp, "CL-Gender"));
  const auto privacy_codes = codes_of(taxonomy, schema, iri_of(ns::cp, "CL-Info_Privacy"));
  const auto need_codes = codes_of(taxonomy, schema, iri_of(ns::cp, "NeedCode"));
  const auto all_service_codes = codes_of(taxonomy, schema, iri_of(ns::cp, "ServiceCode"));
  const std::vector<std::string> modes{"in-person", "phone", "online", "offline"};
  const std::vector<std::string> statuses{"scheduled", "inProgress", "completed"};
  const std::vector<std::string> acuity{"Low", "Medium", "High", "1", "2", "3"};
  const std::vector<std::string> client_events{"EducationEvent", "EmploymentEvent", "MedicalEvent",
                                               "HousingEvent",   "HomelessEvent",   "JusticeSystemEvent"};

  auto local = [](const Term& t) {
    const auto& v = t.value();
    return v.substr(v.find_last_of("#/") + 1);
  };

  // Characteristics: one per demographic and privacy code.
  std::vector<Term> demo_chars, privacy_chars;
  for (const auto& c : demographic_codes) demo_chars.push_back(b.characteristic("Char-Gen-" + local(c), c));
  for (const auto& c : privacy_codes) privacy_chars.push_back(b.characteristic("Char-Gen-" + local(c), c));

  // Locations with a residence code, a program address and stakeholders.
  std::vector<Term> locations, stakeholders, programs;
  const Term org = cp("Org-Gen");
  b.type(org, cids("Organization"));
  for (std::size_t i = 0; i < config.location_names.size(); ++i) {
    const std::string& name = config.location_names[i];
    Term loc = cp(name + "_Location");
    b.type(loc, make_iri(ns::iso5087, "CityDivision"));
    b.label(loc, name);
    locations.push_back(loc);

    Term residence = cp("INST-Resides-" + name);
    b.type(residence, cp("CL-Residence"));
    b.label(residence, "Resides in " + name);
    Term resides = b.characteristic("Char-Gen-Resides-" + name, residence);

    Term prog = cp("Prog-Gen-" + name);
    Term addr = cp("Addr-Gen-" + name);
    b.type(prog, cids("Program"));
    b.add(org, cids("hasProgram"), prog);
    b.add(prog, make_iri(ns::ic, "hasAddress"), addr);
    b.add(addr, i72("located_in"), loc);
    programs.push_back(prog);

    Term community = cp("Community-Gen-" + name);
    b.type(community, cp("Community"));
    b.add(community, i72("located_in"), loc);
    b.add(community, cp("hasNumber"),
          Term::literal(std::to_string(10 + rng.index(990)), xsd::non_negative_integer));

    for (int k = 0; k < 3; ++k) {
      Term sh = cp("sh-Gen-" + name + "-" + std::to_string(k));
      b.type(sh, cids(rng.chance(0.8) ? "BeneficialStakeholder" : "Stakeholder"));
      b.add(sh, i72("located_in"), loc);
      auto parts = rng.sample(demo_chars, 2 + rng.index(2));
      if (rng.chance(0.5)) {
        parts.push_back(resides);
        b.add(sh, cids("hasCharacteristic"),
              b.composite("Comp-Gen-" + name + "-" + std::to_string(k), parts));
      } else {
        for (const auto& p : parts) b.add(sh, cids("hasCharacteristic"), p);
        b.add(sh, cids("hasCharacteristic"), resides);
      }
      stakeholders.push_back(sh);
    }
  }

  std::vector<Term> satisfiers;
  const std::size_t satisfier_count = std::max<std::size_t>(2, config.service_count / 3 + 1);
  for (std::size_t i = 0; i < satisfier_count; ++i) {
    Term s = cp("NS-Gen-" + std::to_string(i));
    b.type(s, cp("NeedSatisfier"));
    satisfiers.push_back(s);
  }

  // Shared requirement profiles, so several services can demand the same one.
  std::vector<Term> profiles;
  for (std::size_t i = 0; i < 3; ++i) {
    auto parts = rng.sample(demo_chars, 2);
    parts.push_back(rng.pick(privacy_chars));
    profiles.push_back(b.composite("Profile-Gen-" + std::to_string(i), parts));
  }

  std::vector<Term> services;
  std::map<Term, std::vector<Term>> service_code_list, service_requirements;
  for (std::size_t i = 0; i < config.service_count; ++i) {
    Term s = cp("S-Gen-" + std::to_string(i));
    bool app = rng.chance(0.1);
    b.type(s, cp(app ? "Application" : "Service"));
    if (app) b.add(s, cp("hasSource"), Term::literal("https://apps.example.org/" + std::to_string(i)));

    std::vector<Term> codes{draw_service_code()};
    if (rng.chance(0.3)) {
      Term extra = draw_service_code();
      if (extra != codes[0]) codes.push_back(extra);
    }
    for (const auto& c : codes) b.add(s, cids("hasCode"), c);
    if (rng.chance(0.5)) b.add(s, cp("providesService"), codes[0]);
    service_code_list[s] = codes;

    for (const auto& f : rng.sample(satisfiers, 1 + rng.index(2))) b.add(s, cp("providesSatisfier"), f);
    b.add(s, cp("hasMode"), Term::literal(rng.pick(modes)));
    for (const auto& f : rng.sample(demographic_codes, rng.index(3))) b.add(s, cp("hasFocus"), f);

    std::vector<Term> reqs;
    if (rng.chance(0.4)) reqs.push_back(rng.pick(privacy_chars));
    if (rng.chance(0.3)) reqs.push_back(rng.pick(demo_chars));
    if (rng.chance(0.3)) {
      auto parts = rng.sample(privacy_chars, 2);
      parts.push_back(rng.pick(demo_chars));
      reqs.push_back(b.composite("Comp-Gen-S" + std::to_string(i), parts));
    }
    if (rng.chance(0.4)) reqs.push_back(rng.pick(profiles));
    for (const auto& r : reqs) b.add(s, cp("hasRequirement"), r);
    service_requirements[s] = reqs;

    if (!app || rng.chance(0.5)) b.add(rng.pick(programs), cids("hasService"), s);
    services.push_back(s);
  }

  std::vector<Term> clients;
  for (std::size_t i = 0; i < config.client_count; ++i) {
    const std::string id = std::to_string(i);
    Term c = cp("Client-Gen-" + id);
    b.type(c, cp("Client"));
    b.add(c, cp("satisfiesStakeholder"), rng.pick(stakeholders));
    b.add(c, cp("hasGender"), rng.pick(gender_codes));
    if (rng.chance(0.5)) b.add(c, cp("hasAcquityScore"), Term::literal(rng.pick(acuity)));
    for (const auto& ch : rng.sample(privacy_chars, rng.index(3))) b.add(c, cids("hasCharacteristic"), ch);
    for (const auto& ch : rng.sample(demo_chars, rng.index(2))) b.add(c, cids("hasCharacteristic"), ch);

    std::size_t needs = 1 + rng.index(2);
    for (std::size_t k = 0; k < needs; ++k) {
      Term n = cp("Need-Gen-" + id + "-" + std::to_string(k));
      b.type(n, cp("ClientNeed"));
      b.add(c, cp("hasNeed"), n);
      b.add(n, cids("hasCode"), rng.pick(need_codes));
      b.add(n, cp("hasAcquityScore"), Term::literal(rng.pick(acuity)));
      for (const auto& f : rng.sample(satisfiers, 1 + rng.index(2))) b.add(n, cp("hasNeedSatisfier"), f);
    }

    // A mutually linked chain of life events.
    std::size_t chain = rng.index(4);
    std::optional<Term> prev;
    DateTime at = parse_date("2015-01-01T00:00:00.000");
    for (std::size_t k = 0; k < chain; ++k) {
      Term ev = cp("CE-Gen-" + id + "-" + std::to_string(k));
      b.type(ev, cp(rng.pick(client_events)));
      b.add(ev, cp("forClient"), c);
      at = add_days(at, 30 + static_cast<std::int64_t>(rng.index(700)));
      b.add(ev, time_iri("hasBeginning"), date_literal(at));
      if (prev) {
        b.add(*prev, cp("nextEvent"), ev);
        b.add(ev, cp("previousEvent"), *prev);
      }
      prev = ev;
    }
    clients.push_back(c);
  }

  const DateTime origin = parse_date("2019-01-07T08:00:00.000");
  for (std::size_t i = 0; i < config.event_count; ++i) {
    Term ev = cp("SE-Gen-" + std::to_string(i));
    const Term& s = rng.pick(services);
    b.type(ev, cp("ServiceEvent"));
    b.add(ev, cp("forClient"), rng.pick(clients));
    b.add(ev, cp("forService"), s);
    b.add(ev, cids("hasCode"), rng.pick(service_code_list[s]));
    b.add(ev, cp("hasStatus"), Term::literal(rng.pick(statuses)));
    auto day = static_cast<std::int64_t>(rng.index(1000));
    auto second = static_cast<std::int64_t>(rng.index(36'000));
    DateTime begin{add_days(origin, day).millis + second * 1000};
    DateTime end = add_days(begin, static_cast<std::int64_t>(rng.index(400)));
    b.add(ev, time_iri("hasBeginning"), date_literal(begin));
    b.add(ev, time_iri("hasEnd"), date_literal(end));
  }

  const std::size_t failures = std::max<std::size_t>(1, config.event_count / 4);
  for (std::size_t i = 0; i < failures; ++i) {
    Term ev = cp("SFE-Gen-" + std::to_string(i));
    const Term& s = rng.pick(services);
    b.type(ev, cp("ServiceFailureEvent"));
    b.add(ev, cp("forClient"), rng.pick(clients));
    b.add(ev, cp("forService"), s);
    const auto& reqs = service_requirements[s];
    b.add(ev, cp("hasCharacteristic"), reqs.empty() ? rng.pick(privacy_chars) : rng.pick(reqs));
    b.add(ev, cp("hasFailureType"), rng.pick(all_service_codes));
  }

  return store;
}

}  // namespace compass
