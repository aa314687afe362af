#include "quivermut/quiver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "quivermut/canonical.hpp"
#include "quivermut/errors.hpp"

namespace quivermut {

Quiver Quiver::from_edges(const std::vector<EdgeSpec>& edges, std::size_t vertex_count, std::size_t frozen) {
  if (frozen > vertex_count) throw InvalidInput("more frozen vertices than vertices");
  const std::size_t n = vertex_count - frozen;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Integer, Integer>> arcs;
  for (const auto& e : edges) {
    if (e.from >= vertex_count || e.to >= vertex_count)
      throw IndexOutOfRange("edge endpoint out of range");
    if (e.from == e.to) throw InvalidInput("loops are not allowed");
    if (e.from >= n && e.to >= n) throw InvalidInput("edges between frozen vertices are not allowed");
    std::pair<Integer, Integer> w;
    if (std::holds_alternative<std::monostate>(e.label)) {
      w = {1, -1};
    } else if (auto* b = std::get_if<Integer>(&e.label)) {
      w = {*b, -*b};
    } else {
      w = std::get<std::pair<Integer, Integer>>(e.label);
    }
    if (w.first <= 0 || w.second >= 0)
      throw InvalidInput("edge weight pair must have a positive first and negative second entry");
    arcs[{e.from, e.to}] = w;  // last one wins
  }
  IntegerMatrix rows(vertex_count, std::vector<Integer>(n));
  for (const auto& [ij, w] : arcs) {
    auto [i, j] = ij;
    if (arcs.count({j, i})) throw InvalidInput("two-cycle between " + std::to_string(i) + " and " + std::to_string(j));
    if (j < n) rows[i][j] = w.first;
    if (i < n) rows[j][i] = w.second;
  }
  return Quiver(ExchangeMatrix::from_rows(rows, n));
}

Quiver Quiver::from_edge_list(std::string_view text, std::size_t vertex_count, std::size_t frozen) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<EdgeSpec> edges;
  std::size_t max_v = 0;
  bool any = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok.size() != 2 && tok.size() != 3 && tok.size() != 4) throw ParseError("bad edge line: " + line);
    EdgeSpec e;
    try {
      e.from = std::stoul(tok[0]);
      e.to = std::stoul(tok[1]);
      if (tok.size() == 3) e.label = Integer(tok[2]);
      if (tok.size() == 4) e.label = std::make_pair(Integer(tok[2]), Integer(tok[3]));
    } catch (const std::exception&) {
      throw ParseError("bad edge line: " + line);
    }
    max_v = std::max({max_v, e.from, e.to});
    any = true;
    edges.push_back(std::move(e));
  }
  if (vertex_count == 0) vertex_count = any ? max_v + 1 : 0;
  return from_edges(edges, vertex_count, frozen);
}

Integer Quiver::weight(std::size_t i, std::size_t j) const {
  const std::size_t R = vertex_count(), n = this->n();
  if (i >= R || j >= R) throw IndexOutOfRange("vertex out of range");
  if (j < n) return b_(i, j);
  if (i < n) return -b_(j, i);
  return 0;
}

std::vector<QuiverEdge> Quiver::edges() const {
  std::vector<QuiverEdge> out;
  const std::size_t R = vertex_count();
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < R; ++j) {
      if (i == j) continue;
      Integer w = weight(i, j);
      if (w > 0) out.push_back({i, j, w, weight(j, i)});
    }
  return out;
}

std::string Quiver::edge_list() const {
  std::ostringstream os;
  for (const auto& e : edges()) os << e.from << ' ' << e.to << ' ' << e.b << ' ' << e.c << '\n';
  return os.str();
}

bool Quiver::is_acyclic() const {
  const std::size_t R = vertex_count();
  std::vector<std::size_t> indeg(R, 0);
  auto es = edges();
  std::vector<std::vector<std::size_t>> out(R);
  for (const auto& e : es) {
    ++indeg[e.to];
    out[e.from].push_back(e.to);
  }
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < R; ++v)
    if (!indeg[v]) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++seen;
    for (std::size_t w : out[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return seen == R;
}

std::optional<Bipartition> Quiver::bipartition() const {
  const std::size_t n = this->n();
  Bipartition p;
  for (std::size_t v = 0; v < n; ++v) {
    bool in = false, out = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v) continue;
      int s = sgn(b_(u, v));
      if (s > 0) in = true;
      if (s < 0) out = true;
    }
    if (in && out) return std::nullopt;
    (in ? p.sinks : p.sources).push_back(v);
  }
  return p;
}

bool Quiver::is_sink(std::size_t k) const {
  for (std::size_t u = 0; u < vertex_count(); ++u)
    if (u != k && weight(k, u) > 0) return false;
  return true;
}

bool Quiver::is_source(std::size_t k) const {
  for (std::size_t u = 0; u < vertex_count(); ++u)
    if (u != k && weight(u, k) > 0) return false;
  return true;
}

Quiver Quiver::reorient(const std::vector<std::size_t>& order) const {
  const std::size_t R = vertex_count(), n = this->n();
  if (order.size() != R) throw InvalidInput("total order must list every vertex once");
  std::vector<std::size_t> pos(R, R);
  for (std::size_t k = 0; k < R; ++k) {
    if (order[k] >= R || pos[order[k]] != R) throw InvalidInput("total order must list every vertex once");
    pos[order[k]] = k;
  }
  auto e = b_.entries();
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer& x = e[i * n + j];
      if (x == 0) continue;
      if ((x > 0) != (pos[i] < pos[j])) x = -x;
    }
  return Quiver(ExchangeMatrix::unchecked(n, m(), std::move(e)));
}

Quiver Quiver::reorient(const std::vector<std::pair<std::size_t, std::size_t>>& arcs) const {
  const std::size_t n = this->n();
  auto e = b_.entries();
  for (auto [u, v] : arcs) {
    if (weight(u, v) <= 0) throw InvalidInput("no arc " + std::to_string(u) + " -> " + std::to_string(v));
  }
  for (auto [u, v] : arcs) {
    if (v < n) e[u * n + v] = -e[u * n + v];
    if (u < n) e[v * n + u] = -e[v * n + u];
  }
  return Quiver(ExchangeMatrix::unchecked(n, m(), std::move(e)));
}

std::vector<std::pair<double, double>> Quiver::layout_circular() const {
  std::vector<std::pair<double, double>> pos;
  const double tau = 2 * std::numbers::pi;
  for (std::size_t i = 0; i < n(); ++i) {
    double a = tau * static_cast<double>(i) / static_cast<double>(n());
    pos.emplace_back(std::cos(a), std::sin(a));
  }
  for (std::size_t j = 0; j < m(); ++j) {
    double a = tau * static_cast<double>(j) / static_cast<double>(m());
    pos.emplace_back(1.5 * std::cos(a), 1.5 * std::sin(a));
  }
  return pos;
}

std::vector<std::vector<std::size_t>> Quiver::components() const {
  const std::size_t n = this->n();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b_(i, j) != 0) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::string encode(const Quiver& q) {
  std::string s = "Q" + std::to_string(q.n()) + "," + std::to_string(q.m()) + "|";
  for (const auto& e : q.edges()) {
    s += std::to_string(e.from);
    s += ',';
    s += std::to_string(e.to);
    s += ',';
    s += e.b.get_str();
    s += ',';
    s += e.c.get_str();
    s += ';';
  }
  return s;
}

Quiver decode(std::string_view text) {
  auto fail = [&]() -> Quiver { throw ParseError("malformed quiver encoding: " + std::string(text)); };
  if (text.size() < 2 || text[0] != 'Q') return fail();
  auto bar = text.find('|');
  if (bar == std::string_view::npos) return fail();
  auto head = text.substr(1, bar - 1);
  auto comma = head.find(',');
  if (comma == std::string_view::npos) return fail();
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto ints = [](std::string_view s) {
    std::size_t st = (!s.empty() && s[0] == '-') ? 1 : 0;
    return s.size() > st && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(st), s.end(),
                                        [](char c) { return c >= '0' && c <= '9'; });
  };
  auto ns = head.substr(0, comma), ms = head.substr(comma + 1);
  if (!digits(ns) || !digits(ms)) return fail();
  std::size_t n = std::stoul(std::string(ns)), m = std::stoul(std::string(ms));
  std::vector<EdgeSpec> edges;
  auto body = text.substr(bar + 1);
  std::size_t prev_from = 0, prev_to = 0;
  bool first = true;
  while (!body.empty()) {
    auto semi = body.find(';');
    if (semi == std::string_view::npos) return fail();
    auto item = body.substr(0, semi);
    body = body.substr(semi + 1);
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= item.size(); ++k) {
      if (k == item.size() || item[k] == ',') {
        parts.push_back(item.substr(start, k - start));
        start = k + 1;
      }
    }
    if (parts.size() != 4 || !digits(parts[0]) || !digits(parts[1]) || !ints(parts[2]) || !ints(parts[3]))
      return fail();
    EdgeSpec e;
    e.from = std::stoul(std::string(parts[0]));
    e.to = std::stoul(std::string(parts[1]));
    if (!first && std::make_pair(e.from, e.to) <= std::make_pair(prev_from, prev_to)) return fail();
    first = false;
    prev_from = e.from;
    prev_to = e.to;
    e.label = std::make_pair(Integer(std::string(parts[2])), Integer(std::string(parts[3])));
    edges.push_back(std::move(e));
  }
  if (n == 0) return fail();
  Quiver q;
  try {
    q = Quiver::from_edges(edges, n + m, m);
  } catch (const InvalidInput& e) {
    throw ParseError("malformed quiver encoding: " + std::string(e.what()));
  }
  // frozen arcs carry (b, -b); anything else would not round-trip
  for (const auto& e : edges) {
    auto [b, c] = std::get<std::pair<Integer, Integer>>(e.label);
    if (q.weight(e.from, e.to) != b || q.weight(e.to, e.from) != c) return fail();
  }
  return q;
}

CanonicalQuiver canonical_form(const Quiver& q, const std::vector<std::string>* colors) {
  const std::size_t R = q.vertex_count(), n = q.n();
  ColoredDigraph g;
  g.size = R;
  g.arcs.assign(R * R, 0);
  std::vector<Integer> values;
  std::vector<Integer> w(R * R);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < R; ++j) {
      if (i == j) continue;
      w[i * R + j] = q.weight(i, j);
      if (w[i * R + j] != 0) values.push_back(w[i * R + j]);
    }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (std::size_t k = 0; k < R * R; ++k) {
    if (w[k] == 0) continue;
    auto it = std::lower_bound(values.begin(), values.end(), w[k]);
    g.arcs[k] = static_cast<std::int32_t>(it - values.begin()) + 1;
  }
  g.colors.assign(R, 0);
  std::int64_t span = 1;
  if (colors) {
    if (colors->size() != R) throw InvalidInput("one color per vertex required");
    std::vector<std::string> uniq = *colors;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    span = static_cast<std::int64_t>(uniq.size()) + 1;
    for (std::size_t v = 0; v < R; ++v)
      g.colors[v] = std::lower_bound(uniq.begin(), uniq.end(), (*colors)[v]) - uniq.begin();
  }
  for (std::size_t v = n; v < R; ++v) g.colors[v] += span;
  auto lab = canonical_labeling(g);
  CanonicalQuiver out{q.permuted(lab.relabeling), std::move(lab.relabeling)};
  return out;
}

std::string canonical_key(const Quiver& q) { return encode(canonical_form(q).quiver); }

bool is_isomorphic(const Quiver& a, const Quiver& b) {
  return a.n() == b.n() && a.m() == b.m() && canonical_key(a) == canonical_key(b);
}

}  // namespace quivermut
