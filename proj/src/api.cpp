#include "compass/api.hpp"

#include <charconv>
#include <functional>
#include <limits>

#include <json.hpp>

#include "compass/competency.hpp"
#include "compass/error.hpp"
#include "compass/ontology.hpp"
#include "compass/query.hpp"
#include "compass/turtle.hpp"

namespace compass::api {

namespace {

using nlohmann::json;
namespace cq = compass::competency;

// Caller fault carrying an HTTP status.
struct BadRequest {
  int status;
  std::string code;
  std::string message;
};

PrefixMap prefixes_for(const TripleStore& store) {
  PrefixMap p = default_prefixes();
  for (const auto& [k, v] : store.prefixes()) p[k] = v;
  return p;
}

json term_json(const Term& t, const PrefixMap& prefixes) {
  switch (t.kind()) {
    case TermKind::Iri: return {{"iri", t.value()}, {"prefixed", compact_iri(t.value(), prefixes)}};
    case TermKind::Literal: return {{"value", t.value()}, {"datatype", t.datatype()}};
    case TermKind::Blank: return {{"blank", t.value()}};
  }
  return nullptr;
}

template <typename Range>
json terms_json(const Range& terms, const PrefixMap& prefixes) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(term_json(t, prefixes));
  return out;
}

json match_json(const cq::ServiceMatch& m, const PrefixMap& prefixes) {
  return {{"service", term_json(m.service, prefixes)},
          {"codes", terms_json(m.codes, prefixes)},
          {"satisfiers", terms_json(m.matched_satisfiers, prefixes)}};
}

std::optional<std::string> param(const Params& params, std::string_view key) {
  auto it = params.find(key);
  if (it == params.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

std::string required(const Params& params, std::string_view key) {
  auto v = param(params, key);
  if (!v) throw BadRequest{400, "missing-parameter", "missing parameter '" + std::string(key) + "'"};
  return *v;
}

std::size_t number(const Params& params, std::string_view key, std::size_t fallback, std::size_t max) {
  auto v = param(params, key);
  if (!v) return fallback;
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), n);
  if (ec != std::errc() || ptr != v->data() + v->size() || n > max) {
    throw BadRequest{400, "bad-parameter",
                     "parameter '" + std::string(key) + "' must be an integer in [0, " +
                         std::to_string(max) + "]"};
  }
  return n;
}

Term iri_param(const Params& params, std::string_view key, const PrefixMap& prefixes) {
  return resolve_iri(required(params, key), prefixes);
}

std::optional<Term> optional_iri(const Params& params, std::string_view key, const PrefixMap& prefixes) {
  auto v = param(params, key);
  if (!v) return std::nullopt;
  return resolve_iri(*v, prefixes);
}

// {"items": page, "total", "limit", "offset"}.
json page(const json& items, const Params& params) {
  std::size_t limit = number(params, "limit", kDefaultLimit, kMaxLimit);
  std::size_t offset = number(params, "offset", 0, std::numeric_limits<std::size_t>::max());
  json slice = json::array();
  for (std::size_t i = offset; i < items.size() && i < offset + limit; ++i) slice.push_back(items[i]);
  return {{"items", slice}, {"total", items.size()}, {"limit", limit}, {"offset", offset}};
}

json matches_page(const std::vector<cq::ServiceMatch>& matches, const Params& params,
                  const PrefixMap& prefixes) {
  json items = json::array();
  for (const auto& m : matches) items.push_back(match_json(m, prefixes));
  return page(items, params);
}

int status_for(Errc code) {
  switch (code) {
    case Errc::UnknownClient:
    case Errc::UnknownSatisfier:
    case Errc::UnknownService:
    case Errc::UnknownClass:
    case Errc::UnknownCodeClass: return 404;
    case Errc::Io: return 500;
    default: return 400;
  }
}

json run(const TripleStore& store, std::string_view op, const Params& params) {
  const Schema& schema = compass_schema();
  const PrefixMap prefixes = prefixes_for(store);

  if (op == "health") return {{"status", "ok"}, {"triples", store.size()}};

  if (op == "query") {
    auto table = query::run_query(store, schema, required(params, "query"));
    json rows = json::array();
    for (const auto& row : table.rows) {
      json r = json::array();
      for (const auto& cell : row) r.push_back(cell ? term_json(*cell, prefixes) : json(nullptr));
      rows.push_back(std::move(r));
    }
    json out = page(rows, params);
    out["columns"] = table.columns;
    out["rows"] = out["items"];
    out.erase("items");
    return out;
  }

  if (op == "services") {
    auto services = cq::list_services(store, schema, optional_iri(params, "codeClass", prefixes),
                                      optional_iri(params, "location", prefixes));
    json out = matches_page(services, params, prefixes);
    if (param(params, "groupByFocus") == "true") {
      json groups = json::array();
      for (const auto& g : cq::group_by_focus(store, services)) {
        groups.push_back({{"focus", g.focus ? term_json(*g.focus, prefixes) : json(nullptr)},
                          {"services", terms_json(g.services, prefixes)}});
      }
      out["groups"] = std::move(groups);
    }
    return out;
  }

  if (op == "matches") {
    Term client = iri_param(params, "client", prefixes);
    return matches_page(cq::services_matching_needs(store, schema, client), params, prefixes);
  }

  if (op == "eligibility") {
    Term client = iri_param(params, "client", prefixes);
    auto e = cq::eligibility_and_barriers(store, schema, client);
    json eligible = json::array(), blocked = json::array(), barriers = json::array();
    for (const auto& m : e.eligible) eligible.push_back(match_json(m, prefixes));
    for (const auto& m : e.blocked) blocked.push_back(match_json(m, prefixes));
    for (const auto& b : e.barriers) {
      barriers.push_back({{"client", term_json(b.client, prefixes)},
                          {"service", term_json(b.service, prefixes)},
                          {"unmetCharacteristic", term_json(b.unmet_characteristic, prefixes)},
                          {"removalServiceType", b.removal_service_type
                                                     ? term_json(*b.removal_service_type, prefixes)
                                                     : json(nullptr)}});
    }
    return {{"client", term_json(client, prefixes)},
            {"eligible", eligible},
            {"blocked", blocked},
            {"barriers", barriers}};
  }

  if (op == "referrals") {
    Term client = iri_param(params, "client", prefixes);
    return matches_page(cq::referral_options(store, schema, client), params, prefixes);
  }

  if (op == "duration") {
    Term client = iri_param(params, "client", prefixes);
    Term code = iri_param(params, "code", prefixes);
    auto d = cq::service_duration_weeks(store, schema, client, code);
    return {{"client", term_json(client, prefixes)},
            {"code", term_json(code, prefixes)},
            {"weeks", d.weeks},
            {"skippedEvents", terms_json(d.skipped_events, prefixes)}};
  }

  if (op == "privacy" || op == "requirements") {
    Term service = iri_param(params, "service", prefixes);
    std::string cls = op == "privacy" ? iri_of(ns::cp, "CL-Info_Privacy")
                                      : iri_param(params, "codeClass", prefixes).value();
    if (!schema.has_class(cls)) {
      throw Error(Errc::UnknownCodeClass, "not a code class: " + compact_iri(cls, prefixes));
    }
    auto codes = cq::requirements_in_class(store, schema, service, cls);
    json out = page(terms_json(codes, prefixes), params);
    out["service"] = term_json(service, prefixes);
    out["codeClass"] = term_json(Term::iri(cls), prefixes);
    return out;
  }

  if (op == "alternatives") {
    Term satisfier = iri_param(params, "satisfier", prefixes);
    Term profile = iri_param(params, "profile", prefixes);
    std::set<Term> exclude;
    auto [lo, hi] = params.equal_range("exclude");
    for (auto it = lo; it != hi; ++it) {
      std::string_view list = it->second;
      while (!list.empty()) {
        auto comma = list.find(',');
        auto item = list.substr(0, comma);
        if (!item.empty()) exclude.insert(resolve_iri(item, prefixes));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
      }
    }
    return matches_page(cq::alternative_services(store, schema, satisfier, profile, exclude), params,
                        prefixes);
  }

  if (op == "demographics") {
    json items = json::array();
    for (const auto& r : cq::priority_demographics(store, schema)) {
      items.push_back({{"location", term_json(r.location, prefixes)},
                       {"stakeholder", term_json(r.stakeholder, prefixes)},
                       {"code", term_json(r.service_code, prefixes)},
                       {"count", r.count}});
    }
    return page(items, params);
  }

  if (op == "gaps") {
    auto report = cq::gaps_and_duplicates(store, schema);
    json gaps = json::array(), duplicates = json::array();
    for (const auto& g : report.gaps) {
      gaps.push_back({{"location", term_json(g.location, prefixes)},
                      {"satisfier", term_json(g.satisfier, prefixes)},
                      {"demandingClients", g.demanding_clients}});
    }
    for (const auto& d : report.duplicates) {
      duplicates.push_back({{"location", term_json(d.location, prefixes)},
                            {"code", term_json(d.service_code, prefixes)},
                            {"focus", terms_json(d.focus, prefixes)},
                            {"services", terms_json(d.services, prefixes)}});
    }
    return {{"gaps", page(gaps, params)}, {"duplicates", page(duplicates, params)}};
  }

  if (op == "barriers") {
    Term code = iri_param(params, "code", prefixes);
    json items = json::array();
    for (const auto& c : cq::barrier_aggregate(store, schema, code)) {
      items.push_back({{"characteristic", term_json(c.characteristic, prefixes)}, {"count", c.count}});
    }
    json out = page(items, params);
    out["code"] = term_json(code, prefixes);
    return out;
  }

  if (op == "communities") {
    json items = json::array();
    for (const auto& c : cq::community_sizes(store, schema)) {
      items.push_back({{"community", term_json(c.community, prefixes)}, {"number", c.number}});
    }
    return page(items, params);
  }

  if (op == "taxonomy") {
    json items = json::array();
    const auto& code_root = iri_of(ns::cids, "Code");
    for (const auto& cls : schema.classes()) {
      if (cls == code_root || !schema.is_subclass_of(cls, code_root)) continue;
      for (const auto& inst : store.subjects(vocab::rdf_type, Term::iri(cls))) {
        auto labels = store.objects(inst, vocab::rdfs_label);
        items.push_back({{"code", term_json(inst, prefixes)},
                         {"codeClass", term_json(Term::iri(cls), prefixes)},
                         {"label", labels.empty() ? json(nullptr) : json(labels.front().value())}});
      }
    }
    return page(items, params);
  }

  throw BadRequest{404, "unknown-operation", "unknown operation '" + std::string(op) + "'"};
}

// "/clients/<iri>/matches" -> ("<iri>", "matches") for the given head.
std::optional<std::pair<std::string, std::string>> split_resource(std::string_view path,
                                                                  std::string_view head) {
  if (!path.starts_with(head)) return std::nullopt;
  path.remove_prefix(head.size());
  auto slash = path.rfind('/');
  if (slash == std::string_view::npos || slash == 0) return std::nullopt;
  return std::pair{std::string(path.substr(0, slash)), std::string(path.substr(slash + 1))};
}

}  // namespace

Response error_response(int status, std::string_view code, std::string_view message) {
  json body = {{"error", {{"code", code}, {"message", message}}}};
  return {status, body.dump()};
}

Response run_operation(const TripleStore& store, std::string_view op, const Params& params) {
  try {
    return {200, run(store, op, params).dump()};
  } catch (const BadRequest& e) {
    return error_response(e.status, e.code, e.message);
  } catch (const Error& e) {
    return error_response(status_for(e.code()), to_token(e.code()), e.what());
  }
}

Service::Service(std::shared_ptr<const TripleStore> initial, std::optional<std::filesystem::path> data_path)
    : store_(std::move(initial)), data_path_(std::move(data_path)) {}

Service Service::from_file(const std::filesystem::path& data_path) {
  auto store = std::make_shared<TripleStore>();
  load_file(*store, data_path);
  return Service(std::move(store), data_path);
}

std::shared_ptr<const TripleStore> Service::snapshot() const {
  std::lock_guard lock(mutex_);
  return store_;
}

std::size_t Service::reload() {
  std::lock_guard serial(reload_mutex_);
  if (!data_path_) throw Error(Errc::Io, "no data file to reload from");
  auto fresh = std::make_shared<TripleStore>();
  load_file(*fresh, *data_path_);
  std::size_t n = fresh->size();
  std::lock_guard lock(mutex_);
  store_ = std::move(fresh);
  return n;
}

Response Service::handle(const Request& request) const {
  const std::string& path = request.path;
  const bool get = request.method == "GET";
  const bool post = request.method == "POST";
  auto method_not_allowed = [&] {
    return error_response(405, "method-not-allowed", request.method + " not allowed on " + path);
  };

  if (path == "/reload") {
    if (!post) return method_not_allowed();
    try {
      std::size_t n = const_cast<Service*>(this)->reload();
      return {200, json{{"status", "reloaded"}, {"triples", n}}.dump()};
    } catch (const Error& e) {
      return error_response(500, "reload-failed", e.what());
    }
  }

  auto store = snapshot();
  Params params = request.params;

  if (path == "/query") {
    if (!post) return method_not_allowed();
    json body = json::parse(request.body, nullptr, false);
    if (body.is_discarded() || !body.is_object() || !body.contains("query") || !body["query"].is_string()) {
      return error_response(400, "bad-request", "expected a JSON body {\"query\": \"...\"}");
    }
    params.emplace("query", body["query"].get<std::string>());
    return run_operation(*store, "query", params);
  }

  if (!get) return method_not_allowed();

  static const std::map<std::string, std::string, std::less<>> simple = {
      {"/health", "health"},
      {"/services", "services"},
      {"/alternatives", "alternatives"},
      {"/taxonomy", "taxonomy"},
      {"/coverage/demographics", "demographics"},
      {"/coverage/gaps", "gaps"},
      {"/coverage/barriers", "barriers"},
      {"/coverage/communities", "communities"},
  };
  if (auto it = simple.find(path); it != simple.end()) return run_operation(*store, it->second, params);

  if (auto r = split_resource(path, "/clients/")) {
    const auto& [iri, action] = *r;
    if (action == "matches" || action == "eligibility" || action == "referrals" || action == "duration") {
      params.emplace("client", iri);
      return run_operation(*store, action, params);
    }
  }
  if (auto r = split_resource(path, "/services/")) {
    const auto& [iri, action] = *r;
    if (action == "privacy" || action == "requirements") {
      params.emplace("service", iri);
      return run_operation(*store, action, params);
    }
  }
  return error_response(404, "not-found", "no route for " + path);
}

}  // namespace compass::api
