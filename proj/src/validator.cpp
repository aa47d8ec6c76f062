#include "compass/validator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "compass/datetime.hpp"

namespace compass {

namespace {

struct Checker {
  const TripleStore& store;
  const Schema& schema;
  std::vector<Violation> out;
  std::map<std::string, std::set<std::string>, std::less<>> subclass_cache;

  const std::set<std::string>& subs(std::string_view cls) {
    auto it = subclass_cache.find(cls);
    if (it == subclass_cache.end()) {
      it = subclass_cache.emplace(std::string(cls), schema.subclasses(cls)).first;
    }
    return it->second;
  }

  std::vector<std::string> types_of(const Term& node) {
    std::vector<std::string> types;
    for (const auto& t : store.objects(node, vocab::rdf_type)) {
      if (t.is_iri()) types.push_back(t.value());
    }
    return types;
  }

  bool typed_as(const std::vector<std::string>& types, std::string_view cls) {
    const auto& s = subs(cls);
    return std::any_of(types.begin(), types.end(), [&](const auto& t) { return s.count(t) > 0; });
  }

  bool instance_of(const Term& node, std::string_view cls) { return typed_as(types_of(node), cls); }

  void report(ViolationKind kind, const Term& focus, std::optional<std::string> property,
              std::string message) {
    out.push_back({kind, focus, std::move(property), std::move(message)});
  }

  std::string show(const Term& t) { return render(t, default_prefixes()); }
  std::string show_iri(const std::string& iri) { return show(Term::iri(iri)); }

  // Domain membership and range checks for one declared predicate.
  void check_triple(const Triple& t, const std::vector<const PropertyDecl*>& decls) {
    auto types = types_of(t.subject);
    std::vector<const PropertyDecl*> applicable;
    for (const auto* d : decls) {
      bool in_domain = d->domain.empty() ||
                       std::any_of(d->domain.begin(), d->domain.end(),
                                   [&](const auto& c) { return typed_as(types, c); });
      if (in_domain) applicable.push_back(d);
    }
    if (!types.empty() && applicable.empty()) {
      std::string expected;
      for (const auto* d : decls) {
        for (const auto& c : d->domain) {
          if (!expected.empty()) expected += " or ";
          expected += show_iri(c);
        }
      }
      std::string actual;
      for (const auto& c : types) {
        if (!actual.empty()) actual += ", ";
        actual += show_iri(c);
      }
      report(ViolationKind::DomainMismatch, t.subject, t.predicate.value(),
             "subject must be an instance of " + expected + ", but is typed " + actual);
      return;
    }
    if (types.empty()) {
      if (decls.size() != 1) return;
      applicable = decls;
    }

    std::optional<std::pair<ViolationKind, std::string>> first_failure;
    for (const auto* d : applicable) {
      auto failure = check_range(*d, t.object);
      if (!failure) return;
      if (!first_failure) first_failure = failure;
    }
    if (first_failure) {
      report(first_failure->first, t.subject, t.predicate.value(), first_failure->second);
    }
  }

  std::optional<std::pair<ViolationKind, std::string>> check_range(const PropertyDecl& d,
                                                                   const Term& value) {
    if (auto* c = std::get_if<CodeClassRange>(&d.range)) {
      if (value.is_iri() && instance_of(value, c->iri)) return std::nullopt;
      return std::pair{ViolationKind::CodedRange,
                       "expected an instance of code class " + show_iri(c->iri) + ", got " + show(value)};
    }
    if (auto* e = std::get_if<EnumerationRange>(&d.range)) {
      if (value.is_literal() &&
          std::find(e->values.begin(), e->values.end(), value.value()) != e->values.end()) {
        return std::nullopt;
      }
      std::string allowed;
      for (const auto& v : e->values) {
        if (!allowed.empty()) allowed += ", ";
        allowed += v;
      }
      return std::pair{ViolationKind::EnumerationRange,
                       "expected one of {" + allowed + "}, got " + show(value)};
    }
    if (auto* dt = std::get_if<DatatypeRange>(&d.range)) {
      if (datatype_ok(dt->iri, value)) return std::nullopt;
      std::string expected = show_iri(dt->iri);
      if (dt->iri == xsd::date_time) expected += " in pattern " + std::string(kTimestampPattern);
      return std::pair{ViolationKind::Datatype, "expected " + expected + ", got " + show(value)};
    }
    return std::nullopt;
  }

  static bool datatype_ok(const std::string& dt, const Term& value) {
    if (!value.is_literal()) return false;
    const std::string& lex = value.value();
    if (dt == xsd::non_negative_integer) {
      if (value.datatype() != xsd::non_negative_integer && value.datatype() != xsd::integer) return false;
      return !lex.empty() && std::all_of(lex.begin(), lex.end(), [](char c) { return c >= '0' && c <= '9'; });
    }
    if (dt == xsd::date_time) return try_parse_date(lex).has_value();
    return true;
  }

  void check_declared_triples() {
    std::map<std::string, std::vector<const PropertyDecl*>> by_iri;
    for (const auto& d : schema.properties()) by_iri[d.iri].push_back(&d);
    for (const auto& [iri, decls] : by_iri) {
      for (const auto& t : store.match(std::nullopt, Term::iri(iri), std::nullopt)) {
        check_triple(t, decls);
      }
    }
  }

  std::vector<Term> instances(std::string_view cls) {
    std::set<Term> found;
    for (const auto& c : subs(cls)) {
      for (auto& s : store.subjects(vocab::rdf_type, Term::iri(c))) found.insert(s);
    }
    return {found.begin(), found.end()};
  }

  void check_failure_events() {
    const Term links[] = {cp("forClient"), cp("forService"), cp("hasCharacteristic")};
    for (const auto& ev : instances(iri_of(ns::cp, "ServiceFailureEvent"))) {
      for (const auto& p : links) {
        if (store.objects(ev, p).empty()) {
          report(ViolationKind::MissingRequiredLink, ev, p.value(),
                 "a ServiceFailureEvent requires " + show(p) + ", none asserted");
        }
      }
    }
  }

  void check_event_order() {
    const Term begin = make_iri(ns::time, "hasBeginning");
    const Term end = make_iri(ns::time, "hasEnd");
    for (const auto& ev : instances(iri_of(ns::cp, "ServiceEvent"))) {
      for (const auto& b : store.objects(ev, begin)) {
        for (const auto& e : store.objects(ev, end)) {
          if (!b.is_literal() || !e.is_literal()) continue;
          auto bd = try_parse_date(b.value());
          auto ed = try_parse_date(e.value());
          if (bd && ed && *bd > *ed) {
            report(ViolationKind::EventOrder, ev, end.value(),
                   "expected begin <= end, got begin " + b.value() + " after end " + e.value());
          }
        }
      }
    }
  }

  void check_event_chains() {
    const Term next = cp("nextEvent");
    const Term prev = cp("previousEvent");

    std::set<std::pair<Term, Term>> broken;
    auto mismatch = [&](const Term& a, const Term& b) {
      broken.insert(a < b ? std::pair{a, b} : std::pair{b, a});
    };
    // a nextEvent b, but b names other previous events.
    for (const auto& t : store.match(std::nullopt, next, std::nullopt)) {
      auto back = store.objects(t.object, prev);
      if (!back.empty() && std::find(back.begin(), back.end(), t.subject) == back.end()) {
        mismatch(t.subject, t.object);
      }
    }
    // b previousEvent a, but a names other next events.
    for (const auto& t : store.match(std::nullopt, prev, std::nullopt)) {
      auto fwd = store.objects(t.object, next);
      if (!fwd.empty() && std::find(fwd.begin(), fwd.end(), t.subject) == fwd.end()) {
        mismatch(t.object, t.subject);
      }
    }
    for (const auto& [a, b] : broken) {
      report(ViolationKind::EventChainBroken, a, next.value(),
             "expected " + show(a) + " and " + show(b) +
                 " to assert nextEvent/previousEvent as mutual inverses");
    }

    std::map<Term, std::set<Term>> succ;
    for (const auto& t : store.match(std::nullopt, next, std::nullopt)) succ[t.subject].insert(t.object);
    for (const auto& t : store.match(std::nullopt, prev, std::nullopt)) succ[t.object].insert(t.subject);

    for (const auto& cycle : strongly_connected(succ)) {
      const Term& focus = *std::min_element(cycle.begin(), cycle.end(), [](const Term& x, const Term& y) {
        return render_full(x) < render_full(y);
      });
      std::string members;
      for (const auto& m : cycle) {
        if (!members.empty()) members += ", ";
        members += show(m);
      }
      report(ViolationKind::EventChainBroken, focus, next.value(),
             "expected an acyclic event chain, found a cycle through " + members);
    }
  }

  // Components of the successor graph that contain a cycle.
  static std::vector<std::vector<Term>> strongly_connected(const std::map<Term, std::set<Term>>& succ) {
    std::map<Term, int> index, low;
    std::set<Term> on_stack;
    std::vector<Term> stack;
    std::vector<std::vector<Term>> result;
    int counter = 0;

    std::function<void(const Term&)> visit = [&](const Term& v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack.insert(v);
      auto it = succ.find(v);
      if (it != succ.end()) {
        for (const auto& w : it->second) {
          if (!index.count(w)) {
            visit(w);
            low[v] = std::min(low[v], low[w]);
          } else if (on_stack.count(w)) {
            low[v] = std::min(low[v], index[w]);
          }
        }
      }
      if (low[v] == index[v]) {
        std::vector<Term> comp;
        while (true) {
          Term w = stack.back();
          stack.pop_back();
          on_stack.erase(w);
          comp.push_back(w);
          if (w == v) break;
        }
        bool self_loop = it != succ.end() && it->second.count(v) > 0;
        if (comp.size() > 1 || self_loop) {
          std::sort(comp.begin(), comp.end());
          result.push_back(std::move(comp));
        }
      }
    };
    for (const auto& [v, _] : succ) {
      if (!index.count(v)) visit(v);
    }
    return result;
  }
};

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::CodedRange: return "coded-range";
    case ViolationKind::EnumerationRange: return "enumeration-range";
    case ViolationKind::Datatype: return "datatype";
    case ViolationKind::MissingRequiredLink: return "missing-required-link";
    case ViolationKind::EventChainBroken: return "event-chain-broken";
    case ViolationKind::EventOrder: return "event-order";
    case ViolationKind::DomainMismatch: return "domain-mismatch";
  }
  return "unknown";
}

std::vector<Violation> validate(const TripleStore& store, const Schema& schema) {
  Checker c{store, schema, {}, {}};
  c.check_declared_triples();
  c.check_failure_events();
  c.check_event_order();
  c.check_event_chains();
  std::sort(c.out.begin(), c.out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.kind, a.focus, a.property, a.message) <
           std::tie(b.kind, b.focus, b.property, b.message);
  });
  return c.out;
}

std::string explain(const Violation& v, const PrefixMap& prefixes) {
  std::string line(to_string(v.kind));
  line += " " + render(v.focus, prefixes);
  if (v.property) line += " " + compact_iri(*v.property, prefixes);
  line += ": " + v.message;
  return line;
}

}  // namespace compass
