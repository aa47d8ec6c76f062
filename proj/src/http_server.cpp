#include <httplib.h>

#include "compass/api.hpp"

namespace compass::api {

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;

  explicit Impl(Service& s) : service(s) {
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
      Request r;
      r.method = req.method;
      r.path = req.path;
      for (const auto& [k, v] : req.params) r.params.emplace(k, v);
      r.body = req.body;
      Response out = service.handle(r);
      res.status = out.status;
      res.set_content(out.body, "application/json");
    };
    server.Get(".*", forward);
    server.Post(".*", forward);
    auto not_allowed = [](const httplib::Request& req, httplib::Response& res) {
      Response out = error_response(405, "method-not-allowed", req.method + " not allowed on " + req.path);
      res.status = out.status;
      res.set_content(out.body, "application/json");
    };
    server.Put(".*", not_allowed);
    server.Delete(".*", not_allowed);
    server.Patch(".*", not_allowed);
  }
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int HttpServer::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpServer::serve() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace compass::api
