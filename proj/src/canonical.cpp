#include "quivermut/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace quivermut {

namespace {

using Cells = std::vector<std::vector<std::size_t>>;

struct Search {
  const ColoredDigraph& g;
  std::size_t n;
  bool have_best = false;
  std::vector<std::int32_t> best_form;
  std::vector<std::size_t> best_perm;
  std::vector<std::int32_t> first_form;
  std::vector<std::size_t> first_perm;
  std::vector<std::vector<std::size_t>> autos;

  explicit Search(const ColoredDigraph& graph) : g(graph), n(graph.size) {}

  std::int32_t arc(std::size_t i, std::size_t j) const { return g.arcs[i * n + j]; }

  // Equitable refinement: split cells by the multiset of (cell, out-code, in-code) of neighbours.
  void refine(Cells& cells) const {
    std::vector<std::size_t> cell_of(n);
    using Sig = std::vector<std::tuple<std::size_t, std::int32_t, std::int32_t>>;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (std::size_t v : cells[c]) cell_of[v] = c;
      Cells next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<Sig, std::size_t>> sigs;
        sigs.reserve(cell.size());
        for (std::size_t v : cell) {
          Sig s;
          for (std::size_t u = 0; u < n; ++u) {
            if (u == v) continue;
            std::int32_t a = arc(v, u), b = arc(u, v);
            if (a || b) s.emplace_back(cell_of[u], a, b);
          }
          std::sort(s.begin(), s.end());
          sigs.emplace_back(std::move(s), v);
        }
        std::sort(sigs.begin(), sigs.end());
        std::size_t start = next.size();
        next.emplace_back();
        next.back().push_back(sigs[0].second);
        for (std::size_t k = 1; k < sigs.size(); ++k) {
          if (sigs[k].first != sigs[k - 1].first) next.emplace_back();
          next.back().push_back(sigs[k].second);
        }
        if (next.size() - start > 1) changed = true;
      }
      cells = std::move(next);
    }
  }

  std::vector<std::int32_t> form_of(const std::vector<std::size_t>& perm) const {
    std::vector<std::int32_t> f(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f[perm[i] * n + perm[j]] = arc(i, j);
    return f;
  }

  static std::vector<std::size_t> compose_inverse(const std::vector<std::size_t>& a,
                                                  const std::vector<std::size_t>& b) {
    // gamma = a^{-1} o b
    std::vector<std::size_t> inv(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = i;
    std::vector<std::size_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = inv[b[i]];
    return r;
  }

  void leaf(const Cells& cells) {
    std::vector<std::size_t> perm(n);
    for (std::size_t c = 0; c < cells.size(); ++c) perm[cells[c][0]] = c;
    auto f = form_of(perm);
    if (!have_best) {
      have_best = true;
      best_form = first_form = f;
      best_perm = first_perm = perm;
      return;
    }
    if (f == first_form) {
      autos.push_back(compose_inverse(first_perm, perm));
    } else if (f == best_form) {
      autos.push_back(compose_inverse(best_perm, perm));
    } else if (f < best_form) {
      best_form = std::move(f);
      best_perm = std::move(perm);
    }
  }

  // orbits of the group generated by automorphisms fixing every vertex of prefix
  std::vector<std::size_t> orbits(const std::vector<std::size_t>& prefix) const {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : autos) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](std::size_t v) { return a[v] == v; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t x = find(v), y = find(a[v]);
        if (x != y) parent[x] = y;
      }
    }
    std::vector<std::size_t> r(n);
    for (std::size_t v = 0; v < n; ++v) r[v] = find(v);
    return r;
  }

  void dfs(Cells cells, std::vector<std::size_t>& prefix) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<std::size_t> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::size_t> done;
    for (std::size_t v : candidates) {
      if (!done.empty()) {
        auto orb = orbits(prefix);
        bool seen = std::any_of(done.begin(), done.end(), [&](std::size_t w) { return orb[w] == orb[v]; });
        if (seen) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<std::size_t> rest;
        for (std::size_t w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      dfs(std::move(child), prefix);
      prefix.pop_back();
      done.push_back(v);
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const ColoredDigraph& g) {
  Search s(g);
  CanonicalLabeling out;
  if (g.size == 0) return out;
  std::vector<std::size_t> order(g.size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.colors[a] < g.colors[b]; });
  Cells cells;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || g.colors[order[k]] != g.colors[order[k - 1]]) cells.emplace_back();
    cells.back().push_back(order[k]);
  }
  std::vector<std::size_t> prefix;
  s.dfs(std::move(cells), prefix);
  out.relabeling = std::move(s.best_perm);
  out.form = std::move(s.best_form);
  out.automorphisms = std::move(s.autos);
  return out;
}

}  // namespace quivermut
