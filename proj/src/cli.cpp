#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <sstream>

#include "quivermut/root_geometry.hpp"
#include "quivermut/service.hpp"
#include "quivermut/type_detection.hpp"

namespace quivermut::service {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_encoding(const std::string& s) { return !s.empty() && s[0] == 'Q' && s.find('|') != std::string::npos; }

// type designation, encoding, or a file holding a matrix ("n m" header) or an encoding
Seed seed_from_source(const std::string& source) {
  if (looks_like_encoding(source)) return Seed(decode(source));
  if (std::filesystem::is_regular_file(source)) {
    std::string text = read_file(source);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == 'Q') {
      auto last = text.find_last_not_of(" \t\r\n");
      return Seed(decode(text.substr(first, last - first + 1)));
    }
    return Seed(ExchangeMatrix::from_text(text));
  }
  return seed_of_type(parse_type(source));
}

std::string path_string(const std::vector<std::size_t>& p) {
  std::vector<std::string> parts;
  for (auto k : p) parts.push_back(std::to_string(k));
  return format_list(parts);
}

std::string layer_line(const LayerReport& l) {
  std::ostringstream o;
  o << "Depth: " << l.depth << "\t found: " << l.count << "\t Time: " << std::fixed << std::setprecision(2)
    << l.seconds << " s";
  return o.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quivermut: cluster seeds, quiver mutation classes and mutation types", "quivermut"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "text";
  std::uint64_t rng_seed = 0x5eed;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--rng-seed", rng_seed, "Seed for randomized checks");

  auto* seed_cmd = app.add_subcommand("seed", "Build a seed and apply mutations: seed <type|matrix-file> mutate i j ...");
  std::vector<std::string> seed_args;
  bool seed_principal = false;
  seed_cmd->add_option("args", seed_args, "Source followed by 'mutate' and indices")->required();
  seed_cmd->add_flag("--principal", seed_principal, "Use principal coefficients");

  auto* class_cmd = app.add_subcommand("class", "Enumerate a mutation class");
  std::string class_source, class_kind = "quiver", cache_dir;
  std::optional<std::size_t> class_depth;
  bool no_equivalence = false, sink_source = false, show_paths = false, show_depth = false, class_principal = false;
  class_cmd->add_option("source", class_source, "Type, encoding or matrix file")->required();
  class_cmd->add_option("--kind", class_kind, "quiver, matrix, cluster or variable")
      ->check(CLI::IsMember({"quiver", "matrix", "cluster", "variable"}));
  class_cmd->add_option("--depth", class_depth, "Stop after this many layers");
  class_cmd->add_flag("--no-equivalence", no_equivalence, "Keep labeled representatives");
  class_cmd->add_flag("--sink-source", sink_source, "Only mutate at sinks and sources");
  class_cmd->add_flag("--paths", show_paths, "Print a mutation word per item");
  class_cmd->add_flag("--show-depth", show_depth, "Report each finished layer on stderr");
  class_cmd->add_flag("--principal", class_principal, "Use principal coefficients");
  class_cmd->add_option("--cache-dir", cache_dir, "Directory for cached classes");

  auto* detect_cmd = app.add_subcommand("detect", "Detect the mutation type of an encoded quiver");
  std::string detect_source;
  std::optional<std::size_t> checks, rank_bound;
  detect_cmd->add_option("encoding", detect_source, "Quiver encoding, matrix file or type")->required();
  detect_cmd->add_option("--checks", checks, "Random mutation budget");
  detect_cmd->add_option("--rank-bound", rank_bound, "Largest rank searched by class enumeration");

  auto* type_cmd = app.add_subcommand("typeinfo", "Properties, class size and standard matrix of a type");
  std::string type_source;
  type_cmd->add_option("type", type_source, "Type designation")->required();

  auto* geo_cmd = app.add_subcommand("geometry", "Associahedron and cluster complex of a finite type");
  std::string geo_source;
  bool emit_polytope = false, emit_complex = false;
  geo_cmd->add_option("type", geo_source, "Finite type designation")->required();
  geo_cmd->add_flag("--emit-polytope", emit_polytope, "Print half-spaces and vertices");
  geo_cmd->add_flag("--emit-complex", emit_complex, "Print the facets of the cluster complex");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  int port = 8080;
  std::string host = "127.0.0.1", serve_cache, static_dir, session_file;
  std::size_t workers = 2;
  serve_cmd->add_option("--port", port, "Port (0 picks a free one)");
  serve_cmd->add_option("--host", host, "Interface to bind");
  serve_cmd->add_option("--cache-dir", serve_cache, "Directory for cached classes");
  serve_cmd->add_option("--workers", workers, "Enumeration worker threads");
  serve_cmd->add_option("--static-dir", static_dir, "Static files served under /ui");
  serve_cmd->add_option("--session-file", session_file, "Sessions are loaded from and saved to this file");

  std::vector<const char*> argv{"quivermut"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const bool as_json = format == "json";

  try {
    if (*seed_cmd) {
      Seed s = seed_from_source(seed_args[0]);
      if (seed_principal) {
        auto t = s.mutation_type();
        s = s.principal_extension();
        s.set_mutation_type(t);
      }
      std::vector<std::size_t> ks;
      std::size_t i = 1;
      if (i < seed_args.size()) {
        if (seed_args[i] != "mutate") throw InvalidInput("expected 'mutate', got " + seed_args[i]);
        for (++i; i < seed_args.size(); ++i) {
          try {
            std::size_t used = 0;
            long long k = std::stoll(seed_args[i], &used);
            if (used != seed_args[i].size() || k < 0) throw std::invalid_argument("index");
            ks.push_back(static_cast<std::size_t>(k));
          } catch (const std::logic_error&) {
            throw InvalidInput("mutation index must be a non-negative integer: " + seed_args[i]);
          }
        }
      }
      s.mutate_in_place(ks);
      if (as_json) {
        json j = seed_snapshot(s);
        j["history"] = ks;
        out << j.dump() << "\n";
      } else {
        out << s.description() << "\n";
        out << "cluster: " << format_list(s.cluster_strings()) << "\n";
        out << "matrix:\n" << format_matrix(s.matrix());
      }
      return 0;
    }

    if (*class_cmd) {
      Seed s = seed_from_source(class_source);
      if (class_principal) s = s.principal_extension();
      ClassRequest req;
      req.kind = parse_class_kind(class_kind);
      req.depth = class_depth;
      req.up_to_equivalence = !no_equivalence;
      req.only_sink_source = sink_source;
      std::unique_ptr<ClassCache> cache;
      if (!cache_dir.empty()) cache = std::make_unique<ClassCache>(cache_dir);
      auto r = compute_class(
          s, req, nullptr, [&](const LayerReport& l) { if (show_depth) err << layer_line(l) << "\n"; }, cache.get());
      if (as_json) {
        json j = r.to_json(show_paths);
        j["kind"] = class_kind_name(req.kind);
        out << j.dump() << "\n";
        return 0;
      }
      for (std::size_t k = 0; k < r.items.size(); ++k) {
        if (req.kind == ClassKind::matrix) {
          out << format_matrix(matrix_from_json(json::parse(r.items[k]), s.n()));
          if (show_paths) out << "path: " << path_string(r.paths[k]) << "\n";
          out << "\n";
          continue;
        }
        out << r.items[k];
        if (show_paths && k < r.paths.size()) out << "\t" << path_string(r.paths[k]);
        out << "\n";
      }
      return 0;
    }

    if (*detect_cmd) {
      Quiver q = seed_from_source(detect_source).quiver();
      DetectionConfig cfg;
      cfg.rng_seed = rng_seed;
      cfg.nr_of_checks = checks;
      if (rank_bound) cfg.rank_bound = *rank_bound;
      auto v = mutation_type(q, cfg);
      out << v.json() << "\n";
      return 0;
    }

    if (*type_cmd) {
      TypePtr t = parse_type(type_source);
      if (as_json) {
        out << type_info(t).dump() << "\n";
        return 0;
      }
      out << t->properties() << "\n";
      out << "class size: " << class_size(t).to_string() << "\n";
      out << "b_matrix:\n" << format_matrix(t->b_matrix());
      return 0;
    }

    if (*geo_cmd) {
      TypePtr t = parse_type(geo_source);
      if (!emit_polytope && !emit_complex) emit_polytope = true;
      json j;
      if (emit_polytope) {
        auto a = associahedron(t, t->rank() <= kMaxVertexEnumerationRank);
        if (as_json) {
          json hs = json::array();
          for (const auto& h : a.halfspaces) {
            json normal = json::array();
            for (const auto& x : h.normal) normal.push_back(x.get_str());
            hs.push_back({{"bound", h.bound.get_str()}, {"normal", normal}, {"root", root_string(h.normal)}});
          }
          j["halfspaces"] = hs;
          j["dimension"] = a.dimension;
          if (a.vertices) {
            json vs = json::array();
            for (const auto& v : *a.vertices) {
              json row = json::array();
              for (const auto& x : v) row.push_back(x.get_str());
              vs.push_back(row);
            }
            j["vertices"] = vs;
          }
          j["description"] = a.description();
        } else {
          out << a.description() << "\n" << a.export_halfspaces();
          if (a.vertices) out << "vertices:\n" << a.export_vertices();
        }
      }
      if (emit_complex) {
        auto cc = cluster_complex(t);
        if (as_json) {
          json vs = json::array();
          for (const auto& v : cc.vertices) vs.push_back(root_string(v));
          j["complex"] = {{"vertices", vs}, {"facets", cc.facets}, {"description", cc.description()}};
        } else {
          out << cc.description() << "\n" << cc.export_facets();
        }
      }
      if (as_json) out << j.dump() << "\n";
      return 0;
    }

    if (*serve_cmd) {
      ApiOptions opts;
      if (!serve_cache.empty()) opts.cache_dir = serve_cache;
      opts.workers = workers;
      opts.rng_seed = rng_seed;
      Api api(opts);
      if (!session_file.empty() && std::filesystem::exists(session_file))
        api.sessions().load(json::parse(read_file(session_file)));
      std::optional<std::filesystem::path> statics;
      if (!static_dir.empty()) statics = static_dir;
      HttpServer server(api, statics);
      int bound = server.bind(host, port);
      err << "listening on http://" << host << ":" << bound << std::endl;

      sigset_t set;
      sigemptyset(&set);
      sigaddset(&set, SIGINT);
      sigaddset(&set, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &set, nullptr);
      server.start();
      int sig = 0;
      sigwait(&set, &sig);
      server.stop();
      if (!session_file.empty()) std::ofstream(session_file) << api.sessions().save().dump() << "\n";
      return 0;
    }
  } catch (const UnboundedRequest& e) {
    if (as_json)
      out << json{{"error", "unbounded-request"}, {"message", e.what()}, {"exit_code", 3}}.dump() << "\n";
    else
      err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    if (as_json)
      out << json{{"error", "invalid-input"}, {"message", e.what()}, {"exit_code", 2}}.dump() << "\n";
    else
      err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (as_json)
      out << json{{"error", "failure"}, {"message", e.what()}, {"exit_code", 1}}.dump() << "\n";
    else
      err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace quivermut::service
