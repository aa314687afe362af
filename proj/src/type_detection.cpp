#include "quivermut/type_detection.hpp"

#include <mutex>
#include <unordered_map>

#include <json.hpp>

#include "exceptional_catalog.hpp"
#include "quivermut/errors.hpp"
#include "quivermut/mutation_class.hpp"

namespace quivermut {

namespace {

using Kind = DetectionVerdict::Kind;

struct Catalog {
  std::unordered_map<std::string, TypePtr> by_key;
  std::vector<std::pair<TypePtr, std::size_t>> entries;
};

const Catalog& catalog() {
  static const Catalog c = [] {
    Catalog c;
    for (std::size_t e = 0; e < detail::kExceptionalCatalogSize; ++e) {
      const auto& entry = detail::kExceptionalCatalog[e];
      TypePtr t = parse_type(entry.designation);
      c.entries.emplace_back(t, entry.size);
      std::string_view keys(entry.keys);
      while (!keys.empty()) {
        auto nl = keys.find('\n');
        c.by_key.emplace(std::string(keys.substr(0, nl)), t);
        keys.remove_prefix(nl == std::string_view::npos ? keys.size() : nl + 1);
      }
    }
    return c;
  }();
  return c;
}

// Class-wide verdicts by canonical key; witnesses in canonical labels.
struct MemoEntry {
  Kind kind;
  TypePtr type;
  std::vector<std::size_t> witness;
};
std::mutex memo_mutex;
std::unordered_map<std::string, MemoEntry> memo;

std::optional<MemoEntry> memo_find(const std::string& key) {
  std::lock_guard lock(memo_mutex);
  auto it = memo.find(key);
  if (it == memo.end()) return std::nullopt;
  return it->second;
}

void memo_store(const std::vector<std::string>& keys, const MemoEntry& e) {
  std::lock_guard lock(memo_mutex);
  for (const auto& k : keys) memo.emplace(k, e);
}

Quiver sub_quiver(const ExchangeMatrix& b, const std::vector<std::size_t>& verts) {
  const std::size_t k = verts.size();
  std::vector<Integer> e(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) e[i * k + j] = b(verts[i], verts[j]);
  return Quiver(ExchangeMatrix::unchecked(k, 0, std::move(e)));
}

std::vector<TypePtr> candidates(std::size_t n) {
  std::vector<TypePtr> out;
  auto add = [&](auto&&... args) {
    try {
      TypePtr t = make_type(args...);
      if (t->rank() == n && t->is_irreducible()) out.push_back(t);
    } catch (const InvalidInput&) {
    }
  };
  const int r = static_cast<int>(n);
  for (const char* L : {"A", "B", "C", "D"}) add(std::string(L), r, std::nullopt);
  for (int a = 1; 2 * a <= r; ++a) add(std::string("A"), std::vector<int>{a, r - a}, std::optional(Twist::affine));
  for (const char* L : {"D", "BB", "CC", "BC", "BD", "CD"}) add(std::string(L), r - 1, std::optional(Twist::affine));
  return out;
}

DetectionVerdict finite_type(TypePtr t, std::string method) {
  DetectionVerdict v;
  v.kind = Kind::finite_type;
  v.type = t;
  v.method = std::move(method);
  return v;
}

DetectionVerdict infinite(std::vector<std::size_t> witness, std::string method) {
  DetectionVerdict v;
  v.kind = Kind::mutation_infinite;
  v.witness = std::move(witness);
  v.method = std::move(method);
  return v;
}

// Connected, no frozen vertices.
DetectionVerdict detect_component(const Quiver& q, const DetectionConfig& cfg) {
  const std::size_t n = q.n();
  if (n == 1) return finite_type(make_type("A", 1), "rank-one");
  if (n == 2) {
    Integer b = abs(q.matrix()(0, 1)), c = abs(q.matrix()(1, 0));
    if (!b.fits_sint_p() || !c.fits_sint_p()) {
      DetectionVerdict v;
      v.kind = Kind::mutation_finite_unclassified;
      v.method = "rank-two";
      return v;
    }
    return finite_type(make_type("R2", std::vector<int>{static_cast<int>(b.get_si()), static_cast<int>(c.get_si())},
                                 Twist::other),
                       "rank-two");
  }

  auto cf = canonical_form(q);
  const std::string key = encode(cf.quiver);
  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i) inverse[cf.relabeling[i]] = i;

  if (auto hit = memo_find(key)) {
    DetectionVerdict v;
    v.kind = hit->kind;
    v.type = hit->type;
    for (auto c : hit->witness) v.witness.push_back(inverse[c]);
    v.method = "memo";
    v.key = key;
    return v;
  }
  const auto& cat = catalog();
  if (auto it = cat.by_key.find(key); it != cat.by_key.end()) {
    auto v = finite_type(it->second, "catalog");
    v.key = key;
    return v;
  }
  auto remember_infinite = [&](const std::vector<std::size_t>& witness) {
    std::vector<std::size_t> relabeled;
    for (auto w : witness) relabeled.push_back(cf.relabeling[w]);
    memo_store({key}, {Kind::mutation_infinite, nullptr, relabeled});
  };

  if (max_weight_product(q.matrix(), 3) > 4) {
    remember_infinite({});
    return infinite({}, "weight-bound");
  }

  if (n <= cfg.rank_bound) {
    auto quick = is_mutation_finite(q, 100 * n, cfg.rng_seed);
    if (!quick.finite) {
      remember_infinite(quick.path);
      return infinite(quick.path, "random-walk");
    }
    std::unordered_map<std::string, TypePtr> targets;
    for (TypePtr t : candidates(n)) targets.emplace(canonical_key(t->standard_quiver()), t);

    std::vector<std::string> keys;
    QuiverClassIterator it(q, {});
    bool capped = false;
    while (auto item = it.next()) {
      if (max_weight_product(item->value.matrix(), 3) > 4) {
        remember_infinite(item->path);
        return infinite(item->path, "class-enumeration");
      }
      std::string k = canonical_key(item->value);
      if (auto hit = targets.find(k); hit != targets.end()) {
        keys.push_back(key);
        memo_store(keys, {Kind::finite_type, hit->second, {}});
        auto v = finite_type(hit->second, "class-membership");
        v.key = k;
        v.path = item->path;
        return v;
      }
      keys.push_back(std::move(k));
      if (it.found() > cfg.max_class) {
        capped = true;
        break;
      }
    }
    if (!capped) {
      memo_store(keys, {Kind::mutation_finite_unclassified, nullptr, {}});
      DetectionVerdict v;
      v.kind = Kind::mutation_finite_unclassified;
      v.method = "class-enumeration";
      v.key = key;
      return v;
    }
  }

  auto walk = is_mutation_finite(q, cfg.nr_of_checks, cfg.rng_seed);
  if (!walk.finite) {
    remember_infinite(walk.path);
    return infinite(walk.path, "random-walk");
  }
  DetectionVerdict v;
  v.method = "random-walk";
  v.key = key;
  return v;
}

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::finite_type: return "finite-type";
    case Kind::mutation_finite_unclassified: return "mutation-finite-unclassified";
    case Kind::mutation_infinite: return "mutation-infinite";
    case Kind::unknown: break;
  }
  return "unknown";
}

std::string DetectionVerdict::json() const {
  nlohmann::json j;
  j["kind"] = kind_name(kind);
  j["type"] = type ? nlohmann::json::parse(type->json()) : nlohmann::json();
  j["repr"] = type ? nlohmann::json(type->repr()) : nlohmann::json();
  nlohmann::json ev;
  ev["method"] = method;
  if (!key.empty()) ev["key"] = key;
  if (kind == Kind::finite_type) ev["path"] = path;
  if (kind == Kind::mutation_infinite) ev["witness"] = witness;
  j["evidence"] = ev;
  return j.dump();
}

bool is_finite(const Quiver& q) { return is_finite_type(q.matrix()); }
bool is_finite(const Seed& s) { return is_finite_type(s.matrix()); }

MutationFiniteCheck is_mutation_finite(const Quiver& q, std::optional<std::size_t> nr_of_checks,
                                       std::uint64_t rng_seed) {
  MutationFiniteCheck out;
  const std::size_t n = q.n();
  if (n <= 2) return out;
  const std::size_t budget = nr_of_checks.value_or(1000 * n);
  if (auto path = find_weight_violation(q.matrix(), budget, rng_seed)) {
    out.finite = false;
    out.checks = path->size();
    out.path = std::move(*path);
    return out;
  }
  out.checks = budget;
  return out;
}

MutationFiniteCheck is_mutation_finite(const Seed& s, std::optional<std::size_t> nr_of_checks,
                                       std::uint64_t rng_seed) {
  return is_mutation_finite(s.quiver(), nr_of_checks, rng_seed);
}

bool replays_to_violation(const Quiver& q, const std::vector<std::size_t>& path) {
  ExchangeMatrix b = q.matrix().top_block();
  if (max_weight_product(b, 3) > 4) return true;
  for (auto k : path) {
    b.mutate_in_place(k);
    if (max_weight_product(b, 3) > 4) return true;
  }
  return false;
}

DetectionVerdict mutation_type(const Quiver& q, const DetectionConfig& cfg) {
  ExchangeMatrix top = q.matrix().top_block();
  Quiver free_part(top);
  auto comps = free_part.components();
  if (comps.empty()) return {};

  std::vector<DetectionVerdict> parts;
  for (const auto& verts : comps) {
    auto v = detect_component(sub_quiver(top, verts), cfg);
    for (auto& w : v.witness) w = verts[w];
    for (auto& w : v.path) w = verts[w];
    if (v.kind == Kind::mutation_infinite) return v;
    parts.push_back(std::move(v));
  }
  if (parts.size() == 1) return parts[0];

  DetectionVerdict out;
  out.method = "components";
  out.key = canonical_key(free_part);
  bool unknown = false, unclassified = false;
  std::vector<TypePtr> types;
  for (const auto& p : parts) {
    if (p.kind == Kind::unknown) unknown = true;
    if (p.kind == Kind::mutation_finite_unclassified) unclassified = true;
    if (p.type) types.push_back(p.type);
    out.path.insert(out.path.end(), p.path.begin(), p.path.end());
  }
  if (unknown) {
    out.kind = Kind::unknown;
  } else if (unclassified) {
    out.kind = Kind::mutation_finite_unclassified;
  } else {
    out.kind = Kind::finite_type;
    out.type = make_reducible(types);
  }
  if (out.kind != Kind::finite_type) out.path.clear();
  return out;
}

DetectionVerdict mutation_type(Seed& s, const DetectionConfig& cfg) {
  auto v = mutation_type(s.quiver(), cfg);
  if (v.type) s.set_mutation_type(v.type->repr());
  return v;
}

std::vector<std::pair<TypePtr, std::size_t>> exceptional_catalog() { return catalog().entries; }

void clear_detection_cache() {
  std::lock_guard lock(memo_mutex);
  memo.clear();
}

}  // namespace quivermut
