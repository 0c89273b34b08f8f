#include "wigmore/http_server.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>

#include "wigmore/error.hpp"

namespace wigmore {

namespace {

HttpRequest convert(const httplib::Request& req) {
  HttpRequest out;
  out.method = req.method;
  out.path = req.path;
  out.body = req.body;
  for (const auto& [k, v] : req.params) out.query.emplace(k, v);
  for (const auto& [k, v] : req.headers) {
    std::string name = k;
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    out.headers.emplace(std::move(name), v);
  }
  return out;
}

}  // namespace

HttpServer::HttpServer(Service& service) : server_(std::make_unique<httplib::Server>()) {
  auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
    auto r = service.handle(convert(req));
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server_->Get(".*", handler);
  server_->Post(".*", handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error(Errc::io, "cannot listen on " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::run() { server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_->is_running()) server_->stop();
}

}  // namespace wigmore
