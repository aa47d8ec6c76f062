#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "compass/store.hpp"

namespace compass::api {

using Params = std::multimap<std::string, std::string, std::less<>>;

struct Request {
  std::string method;  // "GET", "POST"
  std::string path;    // decoded path, e.g. "/clients/cp:Client16/matches"
  Params params;
  std::string body;
};

struct Response {
  int status = 200;
  std::string body;  // JSON
};

// List endpoints page with ?limit=&offset=.
inline constexpr std::size_t kDefaultLimit = 100;
inline constexpr std::size_t kMaxLimit = 10'000;

// Runs one named operation against a store and renders the JSON payload the
// HTTP API returns for it. Operations: health, query, services, matches,
// eligibility, referrals, duration, privacy, requirements, alternatives,
// demographics, gaps, barriers, communities, taxonomy. IRIs in `params` may
// be prefixed ("cp:Client16"), bracketed or absolute.
Response run_operation(const TripleStore& store, std::string_view op, const Params& params);

// Routes requests onto an immutable store snapshot. /reload re-reads the data
// file and swaps the snapshot; requests already running keep the old one.
class Service {
 public:
  explicit Service(std::shared_ptr<const TripleStore> initial,
                   std::optional<std::filesystem::path> data_path = std::nullopt);

  // Throws Error on load failure.
  static Service from_file(const std::filesystem::path& data_path);

  Response handle(const Request& request) const;

  std::shared_ptr<const TripleStore> snapshot() const;

  // Returns the new triple count. Throws Error; the old snapshot stays live.
  std::size_t reload();

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const TripleStore> store_;
  std::optional<std::filesystem::path> data_path_;
  std::mutex reload_mutex_;
};

Response error_response(int status, std::string_view code, std::string_view message);

// HTTP front end over a Service.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();

  // Binds and serves until stop(); returns false if binding failed.
  bool listen(const std::string& host, int port);
  // Binds to an ephemeral port and returns it (or -1); then call serve().
  int bind_any_port(const std::string& host);
  bool serve();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace compass::api
