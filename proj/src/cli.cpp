#include "compass/cli.hpp"

#include <algorithm>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <pthread.h>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "compass/api.hpp"
#include "compass/error.hpp"
#include "compass/ontology.hpp"
#include "compass/query.hpp"
#include "compass/synthdata.hpp"
#include "compass/turtle.hpp"
#include "compass/validator.hpp"

namespace compass {

namespace {

using nlohmann::json;

struct UsageError {
  std::string message;
};

std::string data_path(const std::string& given) {
  if (!given.empty()) return given;
  if (const char* env = std::getenv("COMPASS_DATA"); env && *env) return env;
  throw UsageError{"no data file given and COMPASS_DATA is unset"};
}

TripleStore load(const std::string& path) {
  TripleStore store;
  load_file(store, path);
  return store;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PrefixMap prefixes_for(const TripleStore& store) {
  PrefixMap p = default_prefixes();
  for (const auto& [k, v] : store.prefixes()) p[k] = v;
  return p;
}

// Compact name from an API term object.
std::string name_of(const json& term) {
  if (term.is_null()) return "-";
  if (term.contains("prefixed")) return term["prefixed"];
  if (term.contains("blank")) return "_:" + term["blank"].get<std::string>();
  return term["value"];
}

std::string names_of(const json& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += ',';
    out += name_of(t);
  }
  return out.empty() ? "-" : out;
}

// Prints a report payload from run_operation as tab-separated lines.
void print_report(const std::string& kind, const json& payload, std::ostream& out) {
  if (kind == "gaps") {
    out << "kind\tlocation\tsatisfier_or_code\tdetail\n";
    for (const auto& g : payload["gaps"]["items"]) {
      out << "gap\t" << name_of(g["location"]) << '\t' << name_of(g["satisfier"]) << '\t'
          << "clients=" << g["demandingClients"].get<std::size_t>() << '\n';
    }
    for (const auto& d : payload["duplicates"]["items"]) {
      out << "duplicate\t" << name_of(d["location"]) << '\t' << name_of(d["code"]) << '\t'
          << "focus=" << names_of(d["focus"]) << " services=" << names_of(d["services"]) << '\n';
    }
  } else if (kind == "demographics") {
    out << "location\tstakeholder\tcode\tcount\n";
    for (const auto& r : payload["items"]) {
      out << name_of(r["location"]) << '\t' << name_of(r["stakeholder"]) << '\t' << name_of(r["code"])
          << '\t' << r["count"].get<std::size_t>() << '\n';
    }
  } else if (kind == "barriers") {
    out << "characteristic\tcount\n";
    for (const auto& r : payload["items"]) {
      out << name_of(r["characteristic"]) << '\t' << r["count"].get<std::size_t>() << '\n';
    }
  } else {
    out << "community\tnumber\n";
    for (const auto& r : payload["items"]) {
      out << name_of(r["community"]) << '\t' << r["number"].get<std::uint64_t>() << '\n';
    }
  }
}

// Runs an operation; prints the body (or the error) and maps the status.
int ask(const TripleStore& store, const std::string& op, const api::Params& params, std::ostream& out,
        std::ostream& err, bool raw, const std::string& report_kind = {}) {
  api::Response r = api::run_operation(store, op, params);
  if (r.status != 200) {
    err << "error " << r.status << ": " << r.body << '\n';
    return r.status == 404 && json::parse(r.body)["error"]["code"] == "unknown-operation" ? 2 : 1;
  }
  if (raw) {
    out << r.body << '\n';
  } else {
    print_report(report_kind, json::parse(r.body), out);
  }
  return 0;
}

int serve(const std::string& file, const std::string& host, int port, std::ostream& out,
          std::ostream& err) {
  std::unique_ptr<api::Service> service;
  try {
    auto store = std::make_shared<TripleStore>(load(file));
    service = std::make_unique<api::Service>(std::move(store), file);
  } catch (const Error& e) {
    err << "cannot load " << file << ": " << e.what() << '\n';
    return 1;
  }
  api::HttpServer server(*service);

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });

  int bound = port == 0 ? server.bind_any_port(host) : -1;
  bool ok;
  if (port == 0) {
    ok = bound > 0;
    if (ok) {
      out << "listening on " << host << ':' << bound << std::endl;
      ok = server.serve();
    }
  } else {
    out << "listening on " << host << ':' << port << std::endl;
    ok = server.listen(host, port);
  }
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
  if (!ok) {
    err << "cannot listen on " << host << ':' << port << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compass knowledge graph: validation, queries, reports and the HTTP API", "compass"};
  app.require_subcommand(1);

  std::string file, query_file, format = "csv", output, locations, code, report_kind, op,
                                host = "127.0.0.1";
  std::vector<std::string> kv;
  GenConfig gen;
  bool use_fixture = false;
  int port = -1;

  auto* validate_cmd = app.add_subcommand("validate", "Check a data file against the schema");
  validate_cmd->add_option("file", file, "Turtle data file");

  auto* query_cmd = app.add_subcommand("query", "Evaluate a SPARQL-subset query");
  query_cmd->add_option("file", file, "Turtle data file")->required();
  query_cmd->add_option("queryfile", query_file, "Query text file")->required();
  query_cmd->add_option("--format", format, "csv, table or json")
      ->check(CLI::IsMember({"csv", "table", "json"}));

  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic data file");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--clients", gen.client_count);
  gen_cmd->add_option("--services", gen.service_count);
  gen_cmd->add_option("--events", gen.event_count);
  gen_cmd->add_option("--locations", locations, "Comma-separated location names");
  gen_cmd->add_flag("--fixture", use_fixture, "Write the fixture store instead");
  gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* report_cmd = app.add_subcommand("report", "Coverage reports");
  std::string report_format = "text";
  report_cmd->add_option("kind", report_kind)
      ->required()
      ->check(CLI::IsMember({"gaps", "demographics", "barriers", "communities"}));
  report_cmd->add_option("file", file, "Turtle data file");
  report_cmd->add_option("--code", code, "Service code or code class (barriers)");
  report_cmd->add_option("--format", report_format)->check(CLI::IsMember({"text", "json"}));

  auto* ask_cmd = app.add_subcommand("ask", "Run one API operation and print its JSON");
  ask_cmd->add_option("operation", op)->required();
  ask_cmd->add_option("file", file, "Turtle data file");
  ask_cmd->add_option("-p,--param", kv, "key=value, repeatable");

  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API");
  serve_cmd->add_option("file", file, "Turtle data file");
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port, "0 picks a free port")->check(CLI::Range(0, 65535));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    if (app.get_subcommands().empty()) err << app.help();
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      TripleStore store = load(data_path(file));
      auto violations = validate(store, compass_schema());
      PrefixMap prefixes = prefixes_for(store);
      for (const auto& v : violations) out << explain(v, prefixes) << '\n';
      out << violations.size() << (violations.size() == 1 ? " violation\n" : " violations\n");
      return violations.empty() ? 0 : 1;
    }

    if (query_cmd->parsed()) {
      TripleStore store = load(file);
      std::string text = read_text(query_file);
      if (format == "json") {
        return ask(store, "query", {{"query", text}, {"limit", std::to_string(api::kMaxLimit)}}, out, err,
                   true);
      }
      auto table = query::run_query(store, compass_schema(), text);
      PrefixMap prefixes = prefixes_for(store);
      out << (format == "csv" ? query::to_csv(table, prefixes) : query::to_text_table(table, prefixes));
      return 0;
    }

    if (gen_cmd->parsed()) {
      if (!locations.empty()) {
        gen.location_names.clear();
        std::stringstream list(locations);
        for (std::string item; std::getline(list, item, ',');) {
          if (!item.empty()) gen.location_names.push_back(item);
        }
      }
      TripleStore store;
      try {
        store = use_fixture ? fixture() : generate(gen);
      } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
      }
      std::string text = serialize(store);
      if (output.empty() || output == "-") {
        out << text;
      } else {
        std::ofstream f(output, std::ios::binary);
        f << text;
        if (!f.flush()) throw Error(Errc::Io, "cannot write " + output);
        err << "wrote " << store.size() << " triples to " << output << '\n';
      }
      return 0;
    }

    if (report_cmd->parsed()) {
      TripleStore store = load(data_path(file));
      if (report_kind == "barriers" && code.empty()) throw UsageError{"report barriers needs --code"};
      api::Params params{{"limit", std::to_string(api::kMaxLimit)}};
      if (!code.empty()) params.emplace("code", code);
      return ask(store, report_kind, params, out, err, report_format == "json", report_kind);
    }

    if (ask_cmd->parsed()) {
      api::Params params;
      for (const auto& item : kv) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError{"--param expects key=value, got '" + item + "'"};
        params.emplace(item.substr(0, eq), item.substr(eq + 1));
      }
      TripleStore store = load(data_path(file));
      return ask(store, op, params, out, err, true);
    }

    if (serve_cmd->parsed()) {
      std::string path = data_path(file);
      if (port < 0) {
        const char* env = std::getenv("COMPASS_PORT");
        port = 8080;
        if (env && *env) {
          char* end = nullptr;
          long p = std::strtol(env, &end, 10);
          if (*end != '\0' || p < 0 || p > 65535) throw UsageError{"COMPASS_PORT is not a port number"};
          port = static_cast<int>(p);
        }
      }
      return serve(path, host, port, out, err);
    }
  } catch (const UsageError& e) {
    err << e.message << '\n';
    return 2;
  } catch (const Error& e) {
    err << to_token(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace compass
