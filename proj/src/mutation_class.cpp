#include "quivermut/mutation_class.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "quivermut/errors.hpp"

namespace quivermut {

namespace {

std::size_t rank_of(const Quiver& q) { return q.n(); }
std::size_t rank_of(const Seed& s) { return s.n(); }
Quiver quiver_of(const Quiver& q) { return q; }
Quiver quiver_of(const Seed& s) { return s.quiver(); }

std::string join_strings(const Seed& s, const std::vector<std::size_t>* order) {
  const std::size_t R = s.n() + s.m();
  std::vector<std::string> parts(R);
  for (std::size_t i = 0; i < R; ++i) {
    const auto& v = i < s.n() ? s.cluster()[i] : s.frozen()[i - s.n()];
    parts[order ? (*order)[i] : i] = s.render(v);
  }
  std::string out;
  for (const auto& p : parts) {
    out += p;
    out += ';';
  }
  return out;
}

void check_cancel(const std::atomic<bool>* c) {
  if (c && c->load(std::memory_order_relaxed)) throw Cancelled();
}

}  // namespace

std::string seed_key(const Seed& s, bool up_to_equivalence) {
  Quiver q = s.quiver();
  if (!up_to_equivalence) return encode(q) + "|" + join_strings(s, nullptr);
  std::vector<std::string> colors;
  for (const auto& v : s.cluster()) colors.push_back(s.render(v));
  for (const auto& v : s.frozen()) colors.push_back(s.render(v));
  auto c = canonical_form(q, &colors);
  return encode(c.quiver) + "|" + join_strings(s, &c.relabeling);
}

template <class T>
std::string ClassIterator<T>::key(const T& v) const {
  if constexpr (std::is_same_v<T, Seed>) {
    return seed_key(v, cfg_.up_to_equivalence);
  } else {
    return cfg_.up_to_equivalence ? canonical_key(v) : encode(v);
  }
}

template <class T>
ClassIterator<T>::ClassIterator(T root, ClassConfig cfg) : cfg_(std::move(cfg)) {
  start_ = std::chrono::steady_clock::now();
  seen_.insert(key(root));
  ClassItem<T> item{std::move(root), {}, 0};
  layer_.push_back(item);
  ready_.push_back(std::move(item));
  if (cfg_.on_layer) cfg_.on_layer({0, 1, 0.0});
  if (cfg_.depth && *cfg_.depth == 0) done_ = true;
}

template <class T>
bool ClassIterator<T>::expand_one() {
  check_cancel(cfg_.cancel);
  if (layer_pos_ == layer_.size()) {
    if (next_layer_.empty()) {
      done_ = true;
      return false;
    }
    layer_ = std::move(next_layer_);
    next_layer_.clear();
    layer_pos_ = 0;
    ++layer_depth_;
    if (cfg_.depth && layer_depth_ >= *cfg_.depth) {
      done_ = true;
      return false;
    }
  }
  const ClassItem<T> parent = layer_[layer_pos_++];
  std::optional<Quiver> shape;
  if (cfg_.only_sink_source) shape = quiver_of(parent.value);
  const std::size_t n = rank_of(parent.value);
  for (std::size_t k = 0; k < n; ++k) {
    if (!parent.path.empty() && parent.path.back() == k) continue;
    if (shape && !shape->is_sink(k) && !shape->is_source(k)) continue;
    T child = parent.value.mutate(k);
    if (!seen_.insert(key(child)).second) continue;
    ClassItem<T> item{std::move(child), parent.path, parent.depth + 1};
    item.path.push_back(k);
    next_layer_.push_back(item);
    ready_.push_back(std::move(item));
  }
  if (layer_pos_ == layer_.size() && cfg_.on_layer) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    cfg_.on_layer({layer_depth_ + 1, seen_.size(), secs});
  }
  return true;
}

template <class T>
std::optional<ClassItem<T>> ClassIterator<T>::next() {
  while (ready_.empty() && !done_) expand_one();
  if (ready_.empty()) return std::nullopt;
  auto item = std::move(ready_.front());
  ready_.pop_front();
  return item;
}

template class ClassIterator<Quiver>;
template class ClassIterator<Seed>;

Integer max_weight_product(const ExchangeMatrix& b, std::size_t min_component) {
  const std::size_t n = b.n();
  std::vector<std::size_t> comp(n, n), size;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::size_t id = size.size(), count = 0;
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      ++count;
      for (std::size_t w = 0; w < n; ++w)
        if (comp[w] == n && b(v, w) != 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    size.push_back(count);
  }
  Integer best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (size[comp[i]] < min_component) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer p = abs(b(i, j) * b(j, i));
      if (p > best) best = p;
    }
  }
  return best;
}

std::optional<std::vector<std::size_t>> find_weight_violation(const ExchangeMatrix& b, std::size_t steps,
                                                              std::uint64_t seed) {
  ExchangeMatrix cur = b.top_block();
  const std::size_t n = cur.n();
  if (max_weight_product(cur, 3) > 4) return std::vector<std::size_t>{};
  if (n < 3) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> path;
  std::size_t last = n;
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t k;
    do k = pick(rng);
    while (k == last);
    cur.mutate_in_place(k);
    path.push_back(k);
    last = k;
    if (max_weight_product(cur, 3) > 4) return path;
  }
  return std::nullopt;
}

bool is_finite_type(const ExchangeMatrix& b) {
  QuiverClassIterator it(Quiver(b.top_block()), {});
  while (auto item = it.next())
    if (max_weight_product(item->value.matrix()) > 3) return false;
  return true;
}

std::vector<ClassItem<Quiver>> mutation_class(const Quiver& root, const ClassConfig& cfg) {
  const bool unbounded = !cfg.depth;
  if (unbounded && root.m() > 0 && !is_finite_type(root.matrix()))
    throw UnboundedRequest("the class of a quiver with frozen vertices is only known finite in finite type; give a depth");
  if (unbounded && find_weight_violation(root.matrix(), 1000 * root.n(), 0x5eed))
    throw UnboundedRequest("mutation class is infinite; give a depth");
  std::vector<ClassItem<Quiver>> out;
  QuiverClassIterator it(root, cfg);
  while (auto item = it.next()) {
    if (unbounded && max_weight_product(item->value.matrix(), 3) > 4)
      throw UnboundedRequest("mutation class is infinite; give a depth");
    out.push_back(std::move(*item));
  }
  return out;
}

std::vector<ClassItem<Seed>> seed_class(const Seed& root, const ClassConfig& cfg) {
  if (!cfg.depth && !is_finite_type(root.matrix()))
    throw UnboundedRequest("seed class of an infinite type; give a depth");
  std::vector<ClassItem<Seed>> out;
  SeedClassIterator it(root, cfg);
  while (auto item = it.next()) out.push_back(std::move(*item));
  return out;
}

std::vector<ExchangeMatrix> b_matrix_class(const ExchangeMatrix& root, const ClassConfig& cfg) {
  std::vector<ExchangeMatrix> out;
  for (auto& item : mutation_class(Quiver(root), cfg)) out.push_back(item.value.matrix());
  return out;
}

std::vector<std::vector<RationalFunction>> cluster_class(const Seed& root, const ClassConfig& cfg) {
  std::vector<std::vector<RationalFunction>> out;
  for (auto& item : seed_class(root, cfg)) out.push_back(item.value.cluster());
  return out;
}

std::vector<Seed> bipartite_belt(const Seed& base, std::size_t steps) {
  auto parts = base.quiver().bipartition();
  if (!parts) throw InvalidInput("bipartite belt needs a bipartite seed");
  std::vector<Seed> out(2 * steps + 1, base);
  Seed fwd = base, bwd = base;
  for (std::size_t m = 1; m <= steps; ++m) {
    fwd.mutate_in_place(m % 2 == 1 ? parts->sources : parts->sinks);
    bwd.mutate_in_place(m % 2 == 1 ? parts->sinks : parts->sources);
    out[steps + m] = fwd;
    out[steps - m] = bwd;
  }
  return out;
}

VariableClass variable_class(const Seed& root, std::optional<std::size_t> depth, bool ignore_bipartite_belt,
                             const std::function<void(const std::string&)>& notice,
                             const std::atomic<bool>* cancel) {
  const bool finite = is_finite_type(root.matrix());
  if (!depth && !finite) throw UnboundedRequest("variable class of an infinite type; give a depth");
  VariableClass out;
  std::unordered_set<std::string> seen;
  auto add = [&](const Seed& s) {
    for (const auto& v : s.cluster())
      if (seen.insert(s.render(v)).second) out.variables.push_back(v);
  };
  ClassConfig cfg;
  cfg.depth = depth;
  cfg.cancel = cancel;
  SeedClassIterator it(root, cfg);
  while (auto item = it.next()) {
    if (!ignore_bipartite_belt && item->value.quiver().is_bipartite()) {
      if (notice) notice("Found a bipartite seed - constructing the variable class into its bipartite belt.");
      out.used_belt = true;
      out.path_to_bipartite = item->path;
      Seed s = root;
      add(s);
      for (auto k : item->path) {
        s.mutate_in_place(k);
        add(s);
      }
      if (depth) {
        for (const auto& b : bipartite_belt(s, 2 * *depth)) {
          check_cancel(cancel);
          add(b);
        }
      } else {
        auto parts = *s.quiver().bipartition();
        Seed cur = s;
        std::size_t m = 0;
        do {
          check_cancel(cancel);
          cur.mutate_in_place(m % 2 == 0 ? parts.sources : parts.sinks);
          ++m;
          add(cur);
          if (m > 100000) throw Error("bipartite belt did not close up");
        } while (!(cur == s));
        out.belt_period = m;
      }
      break;
    }
    add(item->value);
  }
  const Ring& ring = *root.ring();
  std::sort(out.variables.begin(), out.variables.end(),
            [&](const RationalFunction& a, const RationalFunction& b) { return variable_less(a, b, ring); });
  return out;
}

namespace {

template <class T>
MutationGroup build_group(const std::vector<ClassItem<T>>& items, const std::function<std::string(const T&)>& key) {
  MutationGroup out{{}, PermutationGroup(0, {})};
  std::unordered_map<std::string, std::uint32_t> index;
  for (const auto& item : items) {
    auto k = key(item.value);
    index.emplace(k, static_cast<std::uint32_t>(out.ground_set.size()));
    out.ground_set.push_back(std::move(k));
  }
  const std::size_t n = items.empty() ? 0 : items.front().value.n();
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < n; ++k) {
    Permutation p(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto it = index.find(key(items[i].value.mutate(k)));
      if (it == index.end()) throw Error("mutation left the enumerated class");
      p[i] = it->second;
    }
    gens.push_back(std::move(p));
  }
  out.group = PermutationGroup(items.size(), std::move(gens));
  return out;
}

}  // namespace

MutationGroup group_of_mutations(const Quiver& root) {
  ClassConfig cfg;
  cfg.up_to_equivalence = false;
  auto items = mutation_class(root, cfg);
  return build_group<Quiver>(items, [](const Quiver& q) { return encode(q); });
}

MutationGroup group_of_mutations(const Seed& root) {
  ClassConfig cfg;
  cfg.up_to_equivalence = false;
  auto items = seed_class(root, cfg);
  return build_group<Seed>(items, [](const Seed& s) { return seed_key(s, false); });
}

}  // namespace quivermut
