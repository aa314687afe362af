#include "quivermut/service.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "quivermut/type_detection.hpp"

namespace quivermut::service {

json integer_json(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return z.get_str();
}

json matrix_json(const ExchangeMatrix& b) {
  json rows = json::array();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < b.n(); ++j) row.push_back(integer_json(b(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExchangeMatrix matrix_from_json(const json& rows, std::optional<std::size_t> n) {
  if (!rows.is_array() || rows.empty()) throw InvalidInput("matrix must be a non-empty array of rows");
  IntegerMatrix m;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InvalidInput("matrix rows must be arrays");
    m.emplace_back();
    for (const auto& x : row) {
      if (x.is_number_integer())
        m.back().emplace_back(std::to_string(x.get<long long>()));
      else if (x.is_string())
        try {
          m.back().emplace_back(x.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw InvalidInput("matrix entry is not an integer: " + x.get<std::string>());
        }
      else
        throw InvalidInput("matrix entries must be integers or decimal strings");
    }
  }
  return ExchangeMatrix::from_rows(m, n.value_or(m.front().size()));
}

std::string format_matrix(const ExchangeMatrix& b) {
  std::size_t w = 1;
  for (const auto& x : b.entries()) w = std::max(w, x.get_str().size());
  std::ostringstream o;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    o << '[';
    for (std::size_t j = 0; j < b.n(); ++j) o << (j ? " " : "") << std::setw(static_cast<int>(w)) << b(i, j).get_str();
    o << "]\n";
  }
  return o.str();
}

std::string format_list(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "]";
}

json seed_snapshot(const Seed& s) {
  json j;
  j["n"] = s.n();
  j["m"] = s.m();
  j["matrix"] = matrix_json(s.matrix());
  j["cluster"] = s.cluster_strings();
  json frozen = json::array();
  for (const auto& v : s.frozen()) frozen.push_back(s.render(v));
  j["frozen_values"] = frozen;
  std::vector<bool> mask(s.n() + s.m(), false);
  std::fill(mask.begin() + static_cast<long>(s.n()), mask.end(), true);
  j["frozen_mask"] = mask;
  json layout = json::array();
  for (auto [x, y] : s.quiver().layout_circular()) layout.push_back({x, y});
  j["layout"] = layout;
  json edges = json::array();
  for (const auto& e : s.quiver().edges())
    edges.push_back({{"from", e.from}, {"to", e.to}, {"b", integer_json(e.b)}, {"c", integer_json(e.c)}});
  j["edges"] = edges;
  if (s.mutation_type()) j["mutation_type"] = *s.mutation_type();
  j["description"] = s.description();
  return j;
}

json type_info(TypePtr t) {
  json j;
  j["repr"] = t->repr();
  j["designation"] = t->designation();
  j["type"] = json::parse(t->json());
  j["properties"] = t->properties();
  auto cs = class_size(t);
  j["class_size"] = cs.to_string();
  static const char* kinds[] = {"exact", "conjectural", "infinite", "unknown"};
  j["class_size_kind"] = kinds[static_cast<int>(cs.kind)];
  j["matrix"] = matrix_json(t->b_matrix());
  j["description"] = describe_quiver(t->standard_quiver(), t);
  j["is_finite"] = t->is_finite();
  j["is_affine"] = t->is_affine();
  j["is_elliptic"] = t->is_elliptic();
  j["is_mutation_finite"] = t->is_mutation_finite();
  j["is_irreducible"] = t->is_irreducible();
  return j;
}

Seed seed_from_request(const json& body) {
  if (!body.is_object()) throw InvalidInput("request body must be a JSON object");
  std::optional<Seed> s;
  if (body.contains("type")) {
    if (!body["type"].is_string()) throw InvalidInput("type must be a designation string");
    s = seed_of_type(parse_type(body["type"].get<std::string>()));
  } else if (body.contains("matrix")) {
    std::optional<std::size_t> n;
    if (body.contains("n")) {
      if (!body["n"].is_number_unsigned()) throw InvalidInput("n must be a non-negative integer");
      n = body["n"].get<std::size_t>();
    }
    s = Seed(matrix_from_json(body["matrix"], n));
  } else if (body.contains("encoding")) {
    if (!body["encoding"].is_string()) throw InvalidInput("encoding must be a string");
    s = Seed(decode(body["encoding"].get<std::string>()));
  } else {
    throw InvalidInput("expected one of type, matrix or encoding");
  }
  if (body.value("principal", false)) {
    auto type = s->mutation_type();
    s = s->principal_extension();
    s->set_mutation_type(type);
  }
  return *s;
}

// ------------------------------------------------------------------ sessions

Session::Session(std::string id_, Seed s)
    : id(std::move(id_)), base(s), current(std::move(s)), created(std::chrono::system_clock::now()), updated(created) {}

json Session::snapshot() const {
  json j = seed_snapshot(current);
  j["session"] = id;
  j["history"] = history;
  return j;
}

Seed replay(const Session& s) {
  Seed r = s.base;
  for (auto k : s.history) r.mutate_in_place(k);
  return r;
}

std::shared_ptr<Session> SessionStore::create(Seed s) {
  static thread_local std::mt19937_64 rng(std::random_device{}());
  std::unique_lock lock(mutex_);
  std::ostringstream id;
  id << 's' << std::hex << ++counter_ << '-' << std::setw(12) << std::setfill('0') << (rng() & 0xffffffffffffULL);
  auto session = std::make_shared<Session>(id.str(), std::move(s));
  sessions_.emplace(session->id, session);
  return session;
}

std::shared_ptr<Session> SessionStore::get(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ApiError(404, "unknown session " + id);
  return it->second;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

json SessionStore::save() const {
  std::shared_lock lock(mutex_);
  json out = json::array();
  for (const auto& [id, s] : sessions_) {
    std::lock_guard g(s->mutex);
    json j{{"id", id},
           {"n", s->base.n()},
           {"matrix", matrix_json(s->base.matrix())},
           {"cluster", s->base.cluster_strings()},
           {"history", s->history}};
    if (s->base.mutation_type()) j["mutation_type"] = *s->base.mutation_type();
    out.push_back(std::move(j));
  }
  return out;
}

void SessionStore::load(const json& saved) {
  for (const auto& j : saved) {
    Seed base(matrix_from_json(j.at("matrix"), j.at("n").get<std::size_t>()));
    base.set_cluster(j.at("cluster").get<std::vector<std::string>>());
    if (j.contains("mutation_type")) base.set_mutation_type(j["mutation_type"].get<std::string>());
    auto s = std::make_shared<Session>(j.at("id").get<std::string>(), base);
    s->history = j.at("history").get<std::vector<std::size_t>>();
    s->current = replay(*s);
    std::unique_lock lock(mutex_);
    sessions_[s->id] = s;
  }
}

// ------------------------------------------------------------------ classes

ClassKind parse_class_kind(const std::string& s) {
  if (s == "quiver") return ClassKind::quiver;
  if (s == "matrix") return ClassKind::matrix;
  if (s == "cluster") return ClassKind::cluster;
  if (s == "variable") return ClassKind::variable;
  throw InvalidInput("unknown class kind " + s + " (quiver, matrix, cluster, variable)");
}

std::string class_kind_name(ClassKind k) {
  static const char* names[] = {"quiver", "matrix", "cluster", "variable"};
  return names[static_cast<int>(k)];
}

json ClassResult::to_json(bool with_paths) const {
  json j;
  j["count"] = items.size();
  j["items"] = items;
  j["depths"] = depths;
  if (with_paths) j["paths"] = paths;
  json ls = json::array();
  for (const auto& l : layers) ls.push_back({{"depth", l.depth}, {"count", l.count}, {"seconds", l.seconds}});
  j["layers"] = ls;
  j["depth_reached"] = depth_reached;
  j["seconds"] = seconds;
  j["from_cache"] = from_cache;
  j["used_belt"] = used_belt;
  return j;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw Error("sha256 failed");
  std::ostringstream o;
  for (unsigned i = 0; i < len; ++i) o << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return o.str();
}

namespace {

std::string config_digest(const ClassRequest& r) {
  std::string s = "depth=" + (r.depth ? std::to_string(*r.depth) : std::string("none"));
  s += ";equivalence=" + std::to_string(r.up_to_equivalence);
  s += ";sink_source=" + std::to_string(r.only_sink_source);
  return s;
}

std::string path_text(const std::vector<std::size_t>& p) {
  if (p.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::vector<std::size_t> parse_path(const std::string& s) {
  std::vector<std::size_t> p;
  if (s == "-") return p;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) p.push_back(std::stoul(tok));
  return p;
}

}  // namespace

ClassCache::ClassCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::string ClassCache::key(const Quiver& root, const ClassRequest& req) const {
  return sha256_hex(encode(root) + "\n" + config_digest(req));
}

std::filesystem::path ClassCache::file(const std::string& key) const { return dir_ / (key + ".cls"); }

std::optional<ClassResult> ClassCache::lookup(const Quiver& root, const ClassRequest& req) const {
  std::shared_lock lock(mutex_);
  std::ifstream in(file(key(root, req)));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  json header = json::parse(line, nullptr, false);
  if (header.is_discarded() || header.value("root", "") != encode(root) ||
      header.value("config", "") != config_digest(req))
    return std::nullopt;
  ClassResult r;
  r.from_cache = true;
  r.depth_reached = header.at("depth_reached").get<std::size_t>();
  r.seconds = header.at("elapsed").get<double>();
  for (const auto& l : header.at("layers"))
    r.layers.push_back({l.at(0).get<std::size_t>(), l.at(1).get<std::size_t>(), l.at(2).get<double>()});
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string enc, depth, path;
    if (!std::getline(fields, enc, '\t') || !std::getline(fields, depth, '\t') || !std::getline(fields, path))
      return std::nullopt;
    r.items.push_back(enc);
    r.depths.push_back(std::stoul(depth));
    r.paths.push_back(parse_path(path));
  }
  if (r.items.size() != header.at("count").get<std::size_t>()) return std::nullopt;
  return r;
}

void ClassCache::store(const Quiver& root, const ClassRequest& req, const ClassResult& r) const {
  std::unique_lock lock(mutex_);
  json header{{"root", encode(root)},
              {"config", config_digest(req)},
              {"count", r.items.size()},
              {"depth_reached", r.depth_reached},
              {"elapsed", r.seconds}};
  json layers = json::array();
  for (const auto& l : r.layers) layers.push_back({l.depth, l.count, l.seconds});
  header["layers"] = layers;
  auto target = file(key(root, req));
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < r.items.size(); ++i)
      out << r.items[i] << '\t' << r.depths[i] << '\t' << path_text(r.paths[i]) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

ClassResult compute_class(const Seed& root, const ClassRequest& req, const std::atomic<bool>* cancel,
                          const std::function<void(const LayerReport&)>& on_layer, const ClassCache* cache) {
  ClassResult r;
  auto start = std::chrono::steady_clock::now();
  ClassConfig cfg;
  cfg.depth = req.depth;
  cfg.up_to_equivalence = req.up_to_equivalence;
  cfg.only_sink_source = req.only_sink_source;
  cfg.cancel = cancel;
  cfg.on_layer = [&](const LayerReport& l) {
    r.layers.push_back(l);
    r.depth_reached = l.depth;
    if (on_layer) on_layer(l);
  };

  if (req.kind == ClassKind::quiver || req.kind == ClassKind::matrix) {
    Quiver q(root.matrix());
    std::optional<ClassResult> hit = cache ? cache->lookup(q, req) : std::nullopt;
    if (hit) {
      r = std::move(*hit);
      if (on_layer)
        for (const auto& l : r.layers) on_layer(l);
    } else {
      for (auto& item : mutation_class(q, cfg)) {
        r.items.push_back(req.up_to_equivalence ? canonical_key(item.value) : encode(item.value));
        r.paths.push_back(std::move(item.path));
        r.depths.push_back(item.depth);
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (cache) cache->store(q, req, r);
    }
    if (req.kind == ClassKind::matrix)
      for (auto& item : r.items) item = matrix_json(decode(item).matrix()).dump();
    return r;
  }

  if (req.kind == ClassKind::cluster) {
    for (auto& item : seed_class(root, cfg)) {
      r.items.push_back(format_list(item.value.cluster_strings()));
      r.paths.push_back(std::move(item.path));
      r.depths.push_back(item.depth);
    }
  } else {
    auto vc = variable_class(root, req.depth, false, {}, cancel);
    for (const auto& v : vc.variables) r.items.push_back(root.render(v));
    r.used_belt = vc.used_belt;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ------------------------------------------------------------------ jobs

Job::Job(std::string id_, Seed root_, ClassRequest req) : id(std::move(id_)), root(std::move(root_)), request(req) {}

std::string job_status_name(Job::Status s) {
  static const char* names[] = {"queued", "running", "done", "failed", "cancelled"};
  return names[static_cast<int>(s)];
}

json Job::to_json() const {
  std::lock_guard lock(mutex);
  json j;
  j["job"] = id;
  j["status"] = job_status_name(status);
  j["kind"] = class_kind_name(request.kind);
  json ls = json::array();
  for (const auto& l : layers) ls.push_back({{"depth", l.depth}, {"count", l.count}, {"seconds", l.seconds}});
  j["layers"] = ls;
  j["progress"] = layers.empty() ? json{{"depth", 0}, {"count", 0}}
                                 : json{{"depth", layers.back().depth}, {"count", layers.back().count}};
  if (result) j["result"] = result->to_json(true);
  if (!error.empty()) j["error"] = error;
  return j;
}

JobManager::JobManager(std::size_t workers, const ClassCache* cache) : cache_(cache) {
  for (std::size_t i = 0; i < std::max<std::size_t>(workers, 1); ++i) threads_.emplace_back([this] { work(); });
}

JobManager::~JobManager() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
    for (auto& [id, job] : jobs_) job->cancel = true;
  }
  cv_.notify_all();
  for (auto& t : threads_) t.join();
}

std::shared_ptr<Job> JobManager::submit(Seed root, ClassRequest req) {
  std::lock_guard lock(mutex_);
  auto job = std::make_shared<Job>("j" + std::to_string(++counter_), std::move(root), req);
  jobs_.emplace(job->id, job);
  queue_.push_back(job);
  cv_.notify_all();
  return job;
}

std::shared_ptr<Job> JobManager::get(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) throw ApiError(404, "unknown job " + id);
  return it->second;
}

void JobManager::cancel(const std::string& id) {
  auto job = get(id);
  job->cancel = true;
  std::lock_guard lock(job->mutex);
  if (job->status == Job::Status::queued) job->status = Job::Status::cancelled;
  cv_.notify_all();
}

bool JobManager::wait(const std::string& id, std::chrono::milliseconds timeout) const {
  auto job = get(id);
  std::unique_lock lock(mutex_);
  return cv_.wait_for(lock, timeout, [&] {
    std::lock_guard g(job->mutex);
    return job->status != Job::Status::queued && job->status != Job::Status::running;
  });
}

void JobManager::work() {
  for (;;) {
    std::shared_ptr<Job> job;
    {
      std::unique_lock lock(mutex_);
      cv_.wait(lock, [&] { return stopping_ || !queue_.empty(); });
      if (stopping_) return;
      job = queue_.front();
      queue_.pop_front();
    }
    {
      std::lock_guard g(job->mutex);
      if (job->status == Job::Status::cancelled) continue;
      job->status = Job::Status::running;
    }
    Job::Status final_status = Job::Status::done;
    std::optional<ClassResult> result;
    std::string error;
    try {
      result = compute_class(
          job->root, job->request, &job->cancel,
          [&](const LayerReport& l) {
            std::lock_guard g(job->mutex);
            job->layers.push_back(l);
          },
          cache_);
    } catch (const Cancelled&) {
      final_status = Job::Status::cancelled;
    } catch (const UnboundedRequest& e) {
      final_status = Job::Status::failed;
      error = std::string("unbounded request: ") + e.what();
    } catch (const std::exception& e) {
      final_status = Job::Status::failed;
      error = e.what();
    }
    {
      std::lock_guard lock(mutex_);
      std::lock_guard g(job->mutex);
      job->status = final_status;
      job->result = std::move(result);
      job->error = error;
    }
    cv_.notify_all();
  }
}

}  // namespace quivermut::service
