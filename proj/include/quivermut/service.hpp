#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "quivermut/errors.hpp"
#include "quivermut/mutation_class.hpp"
#include "quivermut/seed.hpp"
#include "quivermut/type_registry.hpp"

namespace quivermut::service {

using nlohmann::json;

/// Error carrying an HTTP status.
class ApiError : public Error {
 public:
  ApiError(int status, const std::string& what) : Error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

/// Integers that fit in 64 bits become numbers; larger ones decimal strings.
json integer_json(const Integer& z);
json matrix_json(const ExchangeMatrix& b);
/// Rows of numbers or decimal strings; n defaults to the column count.
ExchangeMatrix matrix_from_json(const json& rows, std::optional<std::size_t> n = std::nullopt);
/// Right-aligned bracketed rows.
std::string format_matrix(const ExchangeMatrix& b);
std::string format_list(const std::vector<std::string>& items);

/// {n, m, matrix, cluster, frozen_values, frozen_mask, layout, edges, mutation_type?}
json seed_snapshot(const Seed& s);
/// repr, designation, properties, class size (string), standard matrix.
json type_info(TypePtr t);

/// {"type": designation} | {"matrix": rows, "n"?} | {"encoding": "Q..."}, optional "principal": true.
Seed seed_from_request(const json& body);

// ------------------------------------------------------------------ sessions

struct Session {
  std::string id;
  Seed base;                         // seed at creation or at the last cluster reset/set
  Seed current;
  std::vector<std::size_t> history;  // mutations applied to base
  std::chrono::system_clock::time_point created, updated;
  mutable std::mutex mutex;

  Session(std::string id, Seed s);
  json snapshot() const;  // caller holds the mutex
};

class SessionStore {
 public:
  std::shared_ptr<Session> create(Seed s);
  std::shared_ptr<Session> get(const std::string& id) const;  // throws ApiError 404
  std::size_t size() const;

  json save() const;
  void load(const json& saved);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
};

/// Replays history from the base seed.
Seed replay(const Session& s);

// ------------------------------------------------------------------ class requests and cache

enum class ClassKind { quiver, matrix, cluster, variable };
ClassKind parse_class_kind(const std::string& s);
std::string class_kind_name(ClassKind k);

struct ClassRequest {
  ClassKind kind = ClassKind::quiver;
  std::optional<std::size_t> depth;
  bool up_to_equivalence = true;
  bool only_sink_source = false;
};

struct ClassResult {
  std::vector<std::string> items;
  std::vector<std::vector<std::size_t>> paths;  // quiver, matrix and cluster kinds
  std::vector<std::size_t> depths;
  std::vector<LayerReport> layers;
  std::size_t depth_reached = 0;
  double seconds = 0;
  bool from_cache = false;
  bool used_belt = false;  // variable kind

  json to_json(bool with_paths) const;
};

/// On-disk cache of quiver classes: <sha256>.cls holding a JSON header line and one line per member.
class ClassCache {
 public:
  explicit ClassCache(std::filesystem::path dir);
  const std::filesystem::path& dir() const { return dir_; }
  std::string key(const Quiver& root, const ClassRequest& req) const;
  std::filesystem::path file(const std::string& key) const;
  std::optional<ClassResult> lookup(const Quiver& root, const ClassRequest& req) const;
  void store(const Quiver& root, const ClassRequest& req, const ClassResult& r) const;

 private:
  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
};

std::string sha256_hex(const std::string& data);

ClassResult compute_class(const Seed& root, const ClassRequest& req, const std::atomic<bool>* cancel = nullptr,
                          const std::function<void(const LayerReport&)>& on_layer = {},
                          const ClassCache* cache = nullptr);

// ------------------------------------------------------------------ jobs

struct Job {
  enum class Status { queued, running, done, failed, cancelled };
  std::string id;
  Seed root;
  ClassRequest request;
  std::atomic<bool> cancel{false};
  mutable std::mutex mutex;
  Status status = Status::queued;
  std::vector<LayerReport> layers;
  std::optional<ClassResult> result;
  std::string error;
  int error_status = 0;

  Job(std::string id, Seed root, ClassRequest req);
  json to_json() const;
};

std::string job_status_name(Job::Status s);

class JobManager {
 public:
  JobManager(std::size_t workers, const ClassCache* cache);
  ~JobManager();
  std::shared_ptr<Job> submit(Seed root, ClassRequest req);
  std::shared_ptr<Job> get(const std::string& id) const;  // throws ApiError 404
  void cancel(const std::string& id);
  /// Blocks until the job leaves queued/running or the timeout passes.
  bool wait(const std::string& id, std::chrono::milliseconds timeout) const;

 private:
  void work();
  const ClassCache* cache_;
  mutable std::mutex mutex_;
  mutable std::condition_variable cv_;
  std::deque<std::shared_ptr<Job>> queue_;
  std::map<std::string, std::shared_ptr<Job>> jobs_;
  std::uint64_t counter_ = 0;
  bool stopping_ = false;
  std::vector<std::thread> threads_;
};

// ------------------------------------------------------------------ API

struct ApiOptions {
  std::optional<std::filesystem::path> cache_dir;
  std::size_t workers = 2;
  std::uint64_t rng_seed = 0x5eed;
};

struct ApiResponse {
  int status = 200;
  json body;
};

/// Transport-free request dispatcher behind the HTTP server.
class Api {
 public:
  explicit Api(ApiOptions opts = {});
  ApiResponse handle(const std::string& method, const std::string& path, const std::string& body);

  SessionStore& sessions() { return sessions_; }
  JobManager& jobs() { return jobs_; }
  const ClassCache* cache() const { return cache_.get(); }

 private:
  ApiResponse route(const std::string& method, const std::vector<std::string>& parts, const json& body);
  ApiOptions opts_;
  std::unique_ptr<ClassCache> cache_;
  SessionStore sessions_;
  JobManager jobs_;
};

/// httplib server around an Api.
class HttpServer {
 public:
  HttpServer(Api& api, std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~HttpServer();
  /// Binds; port 0 picks a free port. Returns the bound port.
  int bind(const std::string& host, int port);
  void listen();  // blocks until stop()
  void start();   // listen on a background thread
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// ------------------------------------------------------------------ CLI

/// The quivermut command line. Exit codes: 0 ok, 1 other failure, 2 invalid input, 3 unbounded request.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivermut::service
