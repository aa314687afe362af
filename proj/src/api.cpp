#include <httplib.h>

#include "quivermut/service.hpp"
#include "quivermut/type_detection.hpp"

namespace quivermut::service {

namespace {

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '/') {
      if (!cur.empty()) parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

ApiResponse error(int status, const std::string& msg) { return {status, json{{"error", msg}, {"status", status}}}; }

ClassRequest class_request(const json& body) {
  ClassRequest r;
  if (body.contains("kind")) r.kind = parse_class_kind(body["kind"].get<std::string>());
  if (body.contains("depth") && !body["depth"].is_null()) {
    if (!body["depth"].is_number_unsigned()) throw InvalidInput("depth must be a non-negative integer");
    r.depth = body["depth"].get<std::size_t>();
  }
  r.up_to_equivalence = body.value("up_to_equivalence", true);
  r.only_sink_source = body.value("only_sink_source", false);
  return r;
}

}  // namespace

Api::Api(ApiOptions opts)
    : opts_(opts),
      cache_(opts.cache_dir ? std::make_unique<ClassCache>(*opts.cache_dir) : nullptr),
      jobs_(opts.workers, cache_.get()) {}

ApiResponse Api::handle(const std::string& method, const std::string& path, const std::string& body) {
  try {
    json parsed = json::object();
    if (!body.empty()) {
      parsed = json::parse(body, nullptr, false);
      if (parsed.is_discarded()) return error(400, "malformed JSON body");
    }
    return route(method, split_path(path), parsed);
  } catch (const ApiError& e) {
    return error(e.status(), e.what());
  } catch (const NotSkewSymmetrizable& e) {
    return error(422, e.what());
  } catch (const FrozenIndex& e) {
    return error(409, e.what());
  } catch (const InvalidInput& e) {
    return error(400, e.what());
  } catch (const json::exception& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

ApiResponse Api::route(const std::string& method, const std::vector<std::string>& p, const json& body) {
  const bool get = method == "GET", post = method == "POST";
  if (p.size() == 1 && p[0] == "health" && get) return {200, {{"ok", true}}};

  if (!p.empty() && p[0] == "sessions") {
    if (p.size() == 1) {
      if (!post) return error(405, "use POST /sessions");
      auto s = sessions_.create(seed_from_request(body));
      std::lock_guard lock(s->mutex);
      return {201, s->snapshot()};
    }
    auto s = sessions_.get(p[1]);
    std::lock_guard lock(s->mutex);
    auto touch = [&] { s->updated = std::chrono::system_clock::now(); };
    if (p.size() == 2) {
      if (!get) return error(405, "use GET /sessions/{id}");
      return {200, s->snapshot()};
    }
    const std::string& op = p[2];
    if (p.size() == 3 && op == "detect" && get) {
      DetectionConfig cfg;
      cfg.rng_seed = opts_.rng_seed;
      auto v = mutation_type(s->current, cfg);
      if (v.type) s->base.set_mutation_type(v.type->repr());
      return {200, json::parse(v.json())};
    }
    if (p.size() == 3 && post) {
      if (op == "mutate") {
        if (!body.contains("k") || !body["k"].is_number_integer()) throw InvalidInput("mutate needs an integer k");
        long long k = body["k"].get<long long>();
        const std::size_t total = s->current.n() + s->current.m();
        if (k < 0 || static_cast<std::size_t>(k) >= total)
          throw ApiError(409, "mutation index " + std::to_string(k) + " out of range");
        if (static_cast<std::size_t>(k) >= s->current.n())
          throw ApiError(409, "cannot mutate at frozen vertex " + std::to_string(k));
        s->current.mutate_in_place(static_cast<std::size_t>(k));
        s->history.push_back(static_cast<std::size_t>(k));
        touch();
        return {200, s->snapshot()};
      }
      if (op == "undo") {
        if (s->history.empty()) throw ApiError(409, "nothing to undo");
        s->current.mutate_in_place(s->history.back());
        s->history.pop_back();
        touch();
        return {200, s->snapshot()};
      }
      if (op == "reset-cluster") {
        s->current.reset_cluster();
        s->base = s->current;
        s->history.clear();
        touch();
        return {200, s->snapshot()};
      }
      if (op == "set-cluster") {
        if (!body.contains("values") || !body["values"].is_array()) throw InvalidInput("set-cluster needs values");
        s->current.set_cluster(body["values"].get<std::vector<std::string>>());
        s->base = s->current;
        s->history.clear();
        touch();
        return {200, s->snapshot()};
      }
    }
    return error(404, "no route " + method + " /" + p[0] + "/" + p[1] + "/" + op);
  }

  if (p.size() == 2 && p[0] == "types" && get) return {200, type_info(parse_type(p[1]))};

  if (!p.empty() && p[0] == "jobs") {
    if (p.size() == 1 && post) {
      auto req = class_request(body);
      auto job = jobs_.submit(seed_from_request(body), req);
      return {202, job->to_json()};
    }
    if (p.size() == 2 && get) return {200, jobs_.get(p[1])->to_json()};
    if ((p.size() == 3 && p[2] == "cancel" && post) || (p.size() == 2 && method == "DELETE")) {
      jobs_.cancel(p[1]);
      return {200, jobs_.get(p[1])->to_json()};
    }
  }
  std::string joined;
  for (const auto& x : p) joined += "/" + x;
  return error(404, "no route " + method + " " + (joined.empty() ? "/" : joined));
}

struct HttpServer::Impl {
  Api& api;
  httplib::Server server;
  std::thread thread;
  explicit Impl(Api& a) : api(a) {}
};

HttpServer::HttpServer(Api& api, std::optional<std::filesystem::path> static_dir) : impl_(std::make_unique<Impl>(api)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    auto r = impl_->api.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto& s = impl_->server;
  if (static_dir) s.set_mount_point("/ui", static_dir->string());
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  s.Get(".*", handler);
  s.Post(".*", handler);
  s.Delete(".*", handler);
  s.Put(".*", handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  if (!impl_->server.bind_to_port(host, port)) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::start() {
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void HttpServer::stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace quivermut::service
