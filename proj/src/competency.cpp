#include "compass/competency.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "compass/datetime.hpp"
#include "compass/error.hpp"

namespace compass::competency {

namespace {

Term oep(std::string_view local) { return make_iri(ns::oep, local); }
Term i72(std::string_view local) { return make_iri(ns::i72, local); }

bool full_less(const Term& a, const Term& b) { return render_full(a) < render_full(b); }

class Graph {
 public:
  Graph(const TripleStore& store, const Schema& schema) : store_(store), schema_(schema) {}

  std::vector<Term> objects(const Term& s, const Term& p) const { return store_.objects(s, p); }
  std::vector<Term> subjects(const Term& p, const Term& o) const { return store_.subjects(p, o); }
  bool has(const Term& s, const Term& p, const Term& o) const { return store_.has(s, p, o); }

  bool typed(const Term& node, std::string_view cls) {
    const auto& subs = subclasses(cls);
    for (const auto& t : store_.objects(node, vocab::rdf_type)) {
      if (t.is_iri() && subs.count(t.value())) return true;
    }
    return false;
  }

  std::set<Term> instances(std::string_view cls) {
    std::set<Term> out;
    for (const auto& c : subclasses(cls)) {
      for (auto& s : store_.subjects(vocab::rdf_type, Term::iri(c))) out.insert(s);
    }
    return out;
  }

  const std::set<std::string>& subclasses(std::string_view cls) {
    auto it = cache_.find(cls);
    if (it == cache_.end()) it = cache_.emplace(std::string(cls), schema_.subclasses(cls)).first;
    return it->second;
  }

  const TripleStore& store() const { return store_; }
  const Schema& schema() const { return schema_; }

 private:
  const TripleStore& store_;
  const Schema& schema_;
  std::map<std::string, std::set<std::string>, std::less<>> cache_;
};

void require_client(Graph& g, const Term& client) {
  if (!g.typed(client, iri_of(ns::cp, "Client"))) {
    throw Error(Errc::UnknownClient, "not a cp:Client: " + render(client, default_prefixes()));
  }
}

std::vector<Term> sorted(std::set<Term> terms) {
  std::vector<Term> out(terms.begin(), terms.end());
  std::sort(out.begin(), out.end(), full_less);
  return out;
}

std::vector<ServiceMatch> sorted_matches(std::map<Term, ServiceMatch> by_service) {
  std::vector<ServiceMatch> out;
  for (auto& [_, m] : by_service) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(),
            [](const ServiceMatch& a, const ServiceMatch& b) { return full_less(a.service, b.service); });
  return out;
}

std::set<Term> service_codes(const Graph& g, const Term& service) {
  std::set<Term> codes;
  for (auto& c : g.objects(service, cids("hasCode"))) codes.insert(c);
  for (auto& c : g.objects(service, cp("providesService"))) codes.insert(c);
  return codes;
}

// What a client holds: characteristics (with composite parts) and codes.
struct Holdings {
  std::set<Term> characteristics;
  std::set<Term> codes;
};

Holdings holdings_of(Graph& g, const Term& client) {
  Holdings h;
  std::vector<Term> carriers{client};
  for (auto& sh : g.objects(client, cp("satisfiesStakeholder"))) carriers.push_back(sh);

  std::vector<Term> pending;
  for (const auto& c : carriers) {
    for (auto& ch : g.objects(c, cids("hasCharacteristic"))) pending.push_back(ch);
    for (auto& code : g.objects(c, cids("hasCode"))) h.codes.insert(code);
  }
  while (!pending.empty()) {
    Term ch = pending.back();
    pending.pop_back();
    if (!h.characteristics.insert(ch).second) continue;
    for (auto& code : g.objects(ch, cids("hasCode"))) h.codes.insert(code);
    for (auto& part : g.objects(ch, oep("hasPart"))) pending.push_back(part);
  }

  const auto client_iri = iri_of(ns::cp, "Client");
  for (const auto& d : g.schema().properties()) {
    if (!d.coded || !d.domain.count(client_iri)) continue;
    for (auto& code : g.objects(client, Term::iri(d.iri))) h.codes.insert(code);
  }
  return h;
}

class RequirementCheck {
 public:
  RequirementCheck(Graph& g, const Holdings& h) : g_(g), h_(h) {}

  bool satisfied(const Term& req) {
    std::set<Term> visiting;
    return satisfied(req, visiting);
  }

  // Codes and parts of `req` that are not held, leaves first.
  void missing(const Term& req, std::set<Term>& out) {
    std::set<Term> visiting;
    missing(req, out, visiting);
  }

 private:
  bool satisfied(const Term& req, std::set<Term>& visiting) {
    if (h_.codes.count(req) || h_.characteristics.count(req)) return true;
    if (!visiting.insert(req).second) return false;
    auto codes = g_.objects(req, cids("hasCode"));
    auto parts = g_.objects(req, oep("hasPart"));
    if (codes.empty() && parts.empty()) return false;
    for (const auto& c : codes) {
      if (!h_.codes.count(c)) return false;
    }
    for (const auto& p : parts) {
      if (!satisfied(p, visiting)) return false;
    }
    return true;
  }

  void missing(const Term& req, std::set<Term>& out, std::set<Term>& visiting) {
    if (h_.codes.count(req) || h_.characteristics.count(req)) return;
    if (!visiting.insert(req).second) return;
    out.insert(req);
    for (const auto& c : g_.objects(req, cids("hasCode"))) {
      if (!h_.codes.count(c)) out.insert(c);
    }
    for (const auto& p : g_.objects(req, oep("hasPart"))) missing(p, out, visiting);
  }

  Graph& g_;
  const Holdings& h_;
};

// Service type recorded on a failure event citing one of `unmet`, preferring
// events against the same service.
std::optional<Term> removal_type(Graph& g, const Term& service, const std::set<Term>& unmet) {
  std::optional<Term> same_service, any_service;
  auto consider = [](std::optional<Term>& slot, const Term& t) {
    if (!slot || full_less(t, *slot)) slot = t;
  };
  for (const auto& ev : g.instances(iri_of(ns::cp, "ServiceFailureEvent"))) {
    auto cited = g.objects(ev, cp("hasCharacteristic"));
    bool relevant = std::any_of(cited.begin(), cited.end(), [&](const Term& c) { return unmet.count(c) > 0; });
    if (!relevant) continue;
    bool same = g.has(ev, cp("forService"), service);
    for (const auto& ft : g.objects(ev, cp("hasFailureType"))) {
      consider(same ? same_service : any_service, ft);
    }
  }
  return same_service ? same_service : any_service;
}

}  // namespace

std::vector<ServiceMatch> services_matching_needs(const TripleStore& store, const Schema& schema,
                                                  const Term& client) {
  Graph g(store, schema);
  require_client(g, client);
  std::map<Term, ServiceMatch> found;
  for (const auto& need : g.objects(client, cp("hasNeed"))) {
    if (!g.typed(need, iri_of(ns::cp, "ClientNeed"))) continue;
    for (const auto& sat : g.objects(need, cp("hasNeedSatisfier"))) {
      if (!g.typed(sat, iri_of(ns::cp, "NeedSatisfier"))) continue;
      for (const auto& s : g.subjects(cp("providesSatisfier"), sat)) {
        if (!g.typed(s, iri_of(ns::cp, "Service"))) continue;
        auto codes = g.objects(s, cids("hasCode"));
        if (codes.empty()) continue;
        auto& m = found.try_emplace(s, ServiceMatch{s, {}, {}}).first->second;
        m.codes.insert(codes.begin(), codes.end());
        m.matched_satisfiers.insert(sat);
      }
    }
  }
  return sorted_matches(std::move(found));
}

Eligibility eligibility_and_barriers(const TripleStore& store, const Schema& schema,
                                     const Term& client) {
  auto matches = services_matching_needs(store, schema, client);
  Graph g(store, schema);
  Holdings held = holdings_of(g, client);
  RequirementCheck check(g, held);

  Eligibility out;
  for (auto& m : matches) {
    auto reqs = sorted([&] {
      auto r = g.objects(m.service, cp("hasRequirement"));
      return std::set<Term>(r.begin(), r.end());
    }());
    bool blocked = false;
    for (const auto& req : reqs) {
      if (check.satisfied(req)) continue;
      blocked = true;
      std::set<Term> unmet;
      check.missing(req, unmet);
      out.barriers.push_back({client, m.service, req, removal_type(g, m.service, unmet)});
    }
    (blocked ? out.blocked : out.eligible).push_back(std::move(m));
  }
  return out;
}

std::vector<ServiceMatch> alternative_services(const TripleStore& store, const Schema& schema,
                                               const Term& satisfier, const Term& profile,
                                               const std::set<Term>& exclude) {
  Graph g(store, schema);
  if (!g.typed(satisfier, iri_of(ns::cp, "NeedSatisfier"))) {
    throw Error(Errc::UnknownSatisfier,
                "not a cp:NeedSatisfier: " + render(satisfier, default_prefixes()));
  }
  std::map<Term, ServiceMatch> found;
  for (const auto& s : g.subjects(cp("providesSatisfier"), satisfier)) {
    if (exclude.count(s) || !g.typed(s, iri_of(ns::cp, "Service"))) continue;
    if (!g.has(s, cp("hasRequirement"), profile)) continue;
    auto codes = g.objects(s, cids("hasCode"));
    if (codes.empty()) continue;
    found.try_emplace(s, ServiceMatch{s, {codes.begin(), codes.end()}, {satisfier}});
  }
  return sorted_matches(std::move(found));
}

std::vector<Term> requirements_in_class(const TripleStore& store, const Schema& schema,
                                        const Term& service, std::string_view code_class) {
  Graph g(store, schema);
  if (!g.typed(service, iri_of(ns::cp, "Service"))) {
    throw Error(Errc::UnknownService, "not a cp:Service: " + render(service, default_prefixes()));
  }
  std::set<Term> codes;
  auto take = [&](const Term& node) {
    for (const auto& c : g.objects(node, cids("hasCode"))) {
      if (g.typed(c, code_class)) codes.insert(c);
    }
  };
  for (const auto& req : g.objects(service, cp("hasRequirement"))) {
    take(req);
    if (g.typed(req, iri_of(ns::cids, "CompositeCharacteristic"))) {
      for (const auto& part : g.objects(req, oep("hasPart"))) take(part);
    }
  }
  return sorted(std::move(codes));
}

std::vector<Term> privacy_requirements(const TripleStore& store, const Schema& schema,
                                       const Term& service) {
  return requirements_in_class(store, schema, service, iri_of(ns::cp, "CL-Info_Privacy"));
}

Duration service_duration_weeks(const TripleStore& store, const Schema& schema, const Term& client,
                                const Term& service_code) {
  Graph g(store, schema);
  require_client(g, client);
  const Term begin = make_iri(ns::time, "hasBeginning");
  const Term end = make_iri(ns::time, "hasEnd");

  Duration out;
  std::set<Term> events;
  for (const auto& ev : g.subjects(cp("forClient"), client)) {
    if (g.typed(ev, iri_of(ns::cp, "ServiceEvent")) && g.has(ev, cids("hasCode"), service_code)) {
      events.insert(ev);
    }
  }
  for (const auto& ev : sorted(events)) {
    bool counted = false;
    for (const auto& b : g.objects(ev, begin)) {
      for (const auto& e : g.objects(ev, end)) {
        auto bd = b.is_literal() ? try_parse_date(b.value()) : std::nullopt;
        auto ed = e.is_literal() ? try_parse_date(e.value()) : std::nullopt;
        if (!bd || !ed) continue;
        out.weeks += compass::weeks_between(*ed, *bd);
        counted = true;
      }
    }
    if (!counted) out.skipped_events.push_back(ev);
  }
  return out;
}

std::vector<DemographicRow> priority_demographics(const TripleStore& store, const Schema& schema) {
  Graph g(store, schema);
  const std::string composite = iri_of(ns::cids, "CompositeCharacteristic");

  // Demographic-code bindings per stakeholder, with the query's multiplicity.
  std::map<Term, std::size_t> demo_rows;
  auto demo_count = [&](const Term& sh) {
    auto it = demo_rows.find(sh);
    if (it != demo_rows.end()) return it->second;
    std::size_t n = 0;
    for (const auto& ch : g.objects(sh, cids("hasCharacteristic"))) {
      n += g.objects(ch, cids("hasCode")).size();
      if (g.typed(ch, composite)) {
        for (const auto& part : g.objects(ch, oep("hasPart"))) n += g.objects(part, cids("hasCode")).size();
      }
    }
    demo_rows.emplace(sh, n);
    return n;
  };

  std::map<std::tuple<Term, Term, Term>, std::size_t> counts;
  for (const auto& ev : g.instances(iri_of(ns::cp, "ServiceEvent"))) {
    auto codes = g.objects(ev, cids("hasCode"));
    for (const auto& client : g.objects(ev, cp("forClient"))) {
      for (const auto& sh : g.objects(client, cp("satisfiesStakeholder"))) {
        if (!g.typed(sh, iri_of(ns::cids, "Stakeholder"))) continue;
        std::size_t n = demo_count(sh);
        if (n == 0) continue;
        for (const auto& loc : g.objects(sh, i72("located_in"))) {
          for (const auto& code : codes) counts[{loc, sh, code}] += n;
        }
      }
    }
  }

  std::vector<DemographicRow> rows;
  for (const auto& [key, n] : counts) {
    rows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), n});
  }
  std::sort(rows.begin(), rows.end(), [](const DemographicRow& a, const DemographicRow& b) {
    if (a.count != b.count) return a.count > b.count;
    return std::tuple(render_full(a.location), render_full(a.stakeholder), render_full(a.service_code)) <
           std::tuple(render_full(b.location), render_full(b.stakeholder), render_full(b.service_code));
  });
  return rows;
}

std::set<Term> service_locations(const TripleStore& store, const Term& service) {
  std::set<Term> addresses;
  for (auto& a : store.objects(service, make_iri(ns::ic, "hasAddress"))) addresses.insert(a);
  for (const auto& program : store.subjects(cids("hasService"), service)) {
    for (auto& a : store.objects(program, make_iri(ns::ic, "hasAddress"))) addresses.insert(a);
  }
  std::set<Term> out;
  for (const auto& a : addresses) {
    for (auto& l : store.objects(a, i72("located_in"))) out.insert(l);
  }
  return out;
}

std::vector<ServiceMatch> list_services(const TripleStore& store, const Schema& schema,
                                        const std::optional<Term>& code_class,
                                        const std::optional<Term>& location) {
  Graph g(store, schema);
  if (code_class) {
    const auto& iri = code_class->value();
    if (!code_class->is_iri() || !schema.has_class(iri) ||
        !schema.is_subclass_of(iri, iri_of(ns::cids, "Code"))) {
      throw Error(Errc::UnknownCodeClass, "not a code class: " + render(*code_class, default_prefixes()));
    }
  }
  std::map<Term, ServiceMatch> found;
  for (const auto& s : g.instances(iri_of(ns::cp, "Service"))) {
    auto codes = service_codes(g, s);
    if (code_class && std::none_of(codes.begin(), codes.end(), [&](const Term& c) {
          return g.typed(c, code_class->value());
        })) {
      continue;
    }
    if (location && !service_locations(store, s).count(*location)) continue;
    auto sats = g.objects(s, cp("providesSatisfier"));
    found.try_emplace(s, ServiceMatch{s, std::move(codes), {sats.begin(), sats.end()}});
  }
  return sorted_matches(std::move(found));
}

std::vector<FocusGroup> group_by_focus(const TripleStore& store,
                                       const std::vector<ServiceMatch>& services) {
  std::map<Term, std::set<Term>> by_focus;
  std::set<Term> unfocused;
  for (const auto& m : services) {
    auto focus = store.objects(m.service, cp("hasFocus"));
    if (focus.empty()) unfocused.insert(m.service);
    for (const auto& f : focus) by_focus[f].insert(m.service);
  }
  std::vector<FocusGroup> out;
  for (auto& [f, s] : by_focus) out.push_back({f, sorted(std::move(s))});
  std::sort(out.begin(), out.end(),
            [](const FocusGroup& a, const FocusGroup& b) { return full_less(*a.focus, *b.focus); });
  if (!unfocused.empty()) out.push_back({std::nullopt, sorted(std::move(unfocused))});
  return out;
}

std::vector<CharacteristicCount> barrier_aggregate(const TripleStore& store, const Schema& schema,
                                                   const Term& service_code) {
  Graph g(store, schema);
  bool is_class = service_code.is_iri() && schema.has_class(service_code.value());
  auto carries = [&](const Term& service) {
    for (const auto& c : service_codes(g, service)) {
      if (c == service_code || (is_class && g.typed(c, service_code.value()))) return true;
    }
    return false;
  };

  std::map<Term, std::size_t> counts;
  for (const auto& ev : g.instances(iri_of(ns::cp, "ServiceFailureEvent"))) {
    auto services = g.objects(ev, cp("forService"));
    if (std::none_of(services.begin(), services.end(), carries)) continue;
    for (const auto& ch : g.objects(ev, cp("hasCharacteristic"))) ++counts[ch];
  }
  std::vector<CharacteristicCount> out;
  for (const auto& [ch, n] : counts) out.push_back({ch, n});
  std::sort(out.begin(), out.end(), [](const CharacteristicCount& a, const CharacteristicCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return full_less(a.characteristic, b.characteristic);
  });
  return out;
}

CoverageReport gaps_and_duplicates(const TripleStore& store, const Schema& schema) {
  Graph g(store, schema);
  CoverageReport report;

  std::map<std::pair<Term, Term>, std::set<Term>> demand;
  for (const auto& client : g.instances(iri_of(ns::cp, "Client"))) {
    std::set<Term> locations;
    for (const auto& sh : g.objects(client, cp("satisfiesStakeholder"))) {
      for (auto& l : g.objects(sh, i72("located_in"))) locations.insert(l);
    }
    for (const auto& need : g.objects(client, cp("hasNeed"))) {
      for (const auto& sat : g.objects(need, cp("hasNeedSatisfier"))) {
        for (const auto& l : locations) demand[{l, sat}].insert(client);
      }
    }
  }

  std::map<Term, std::set<Term>> locations_of;
  for (const auto& s : g.instances(iri_of(ns::cp, "Service"))) locations_of[s] = service_locations(store, s);

  for (const auto& [key, clients] : demand) {
    const auto& [loc, sat] = key;
    bool provided = false;
    for (const auto& s : g.subjects(cp("providesSatisfier"), sat)) {
      auto it = locations_of.find(s);
      if (it != locations_of.end() && it->second.count(loc)) {
        provided = true;
        break;
      }
    }
    if (!provided) report.gaps.push_back({loc, sat, clients.size()});
  }

  std::map<std::tuple<Term, Term, std::set<Term>>, std::set<Term>> offers;
  for (const auto& [s, locations] : locations_of) {
    auto focus_list = g.objects(s, cp("hasFocus"));
    std::set<Term> focus(focus_list.begin(), focus_list.end());
    for (const auto& code : service_codes(g, s)) {
      for (const auto& l : locations) offers[{l, code, focus}].insert(s);
    }
  }
  for (const auto& [key, services] : offers) {
    if (services.size() < 2) continue;
    report.duplicates.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), services});
  }

  std::sort(report.gaps.begin(), report.gaps.end(), [](const Gap& a, const Gap& b) {
    return std::pair(render_full(a.location), render_full(a.satisfier)) <
           std::pair(render_full(b.location), render_full(b.satisfier));
  });
  std::sort(report.duplicates.begin(), report.duplicates.end(), [](const Duplicate& a, const Duplicate& b) {
    return std::tuple(render_full(a.location), render_full(a.service_code), a.focus) <
           std::tuple(render_full(b.location), render_full(b.service_code), b.focus);
  });
  return report;
}

std::vector<ServiceMatch> referral_options(const TripleStore& store, const Schema& schema,
                                           const Term& client) {
  auto eligible = eligibility_and_barriers(store, schema, client).eligible;
  Graph g(store, schema);
  std::set<Term> in_use;
  for (const auto& ev : g.subjects(cp("forClient"), client)) {
    if (!g.typed(ev, iri_of(ns::cp, "ServiceEvent"))) continue;
    bool open = false;
    for (const auto& st : g.objects(ev, cp("hasStatus"))) {
      if (st.is_literal() && (st.value() == "scheduled" || st.value() == "inProgress")) open = true;
    }
    if (!open) continue;
    for (auto& s : g.objects(ev, cp("forService"))) in_use.insert(s);
  }
  std::erase_if(eligible, [&](const ServiceMatch& m) { return in_use.count(m.service) > 0; });
  return eligible;
}

std::vector<CommunitySize> community_sizes(const TripleStore& store, const Schema& schema) {
  Graph g(store, schema);
  std::vector<CommunitySize> out;
  for (const auto& c : sorted(g.instances(iri_of(ns::cp, "Community")))) {
    for (const auto& n : g.objects(c, cp("hasNumber"))) {
      if (!n.is_literal()) continue;
      try {
        std::size_t used = 0;
        auto value = std::stoull(n.value(), &used);
        if (used == n.value().size()) out.push_back({c, value});
      } catch (const std::exception&) {
      }
    }
  }
  return out;
}

namespace listings {

namespace {

std::string substitute(std::string_view text, std::string_view placeholder, const Term& value) {
  std::string out(text);
  auto pos = out.find(placeholder);
  if (pos != std::string::npos) out.replace(pos, placeholder.size(), "<" + value.value() + ">");
  return out;
}

}  // namespace

std::string client_q3_for(const Term& client) { return substitute(client_q3, "cp:Client16", client); }

std::string client_q6_for(const Term& satisfier, const Term& profile) {
  return substitute(substitute(client_q6, "cp:NS-Housing", satisfier),
                    "cp:Comp-Inst-Female-Homeless-Area0", profile);
}

std::string client_q7_1_for(const Term& service) {
  return substitute(client_q7_1, "cp:S06-1-Counseling", service);
}

std::string service_q2_for(const Term& client, const Term& service_code) {
  return substitute(substitute(service_q2, "cp:Client2", client), "cp:INST-Counseling", service_code);
}

}  // namespace listings

}  // namespace compass::competency
