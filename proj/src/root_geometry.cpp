#include "quivermut/root_geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "quivermut/errors.hpp"
#include "quivermut/mutation_class.hpp"
#include "quivermut/seed.hpp"

namespace quivermut {

namespace {

RootVector negate(RootVector r) {
  for (auto& x : r) x = -x;
  return r;
}

Rational dot(const RootVector& a, const RootVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// negative simple root index, if any
std::optional<std::size_t> negative_simple(const RootVector& r) {
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (r[i] != -1 || at) return std::nullopt;
    at = i;
  }
  return at;
}

// Solve a square system exactly; nullopt if singular.
std::optional<RootVector> solve(std::vector<RootVector> a, RootVector b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

std::string tuple_string(const RootVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

}  // namespace

std::string root_string(const RootVector& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    Rational a = abs(r[i]);
    if (s.empty())
      s += r[i] < 0 ? "-" : "";
    else
      s += r[i] < 0 ? " - " : " + ";
    if (a != 1) s += a.get_str() + "*";
    s += "alpha_" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

RootSystem::RootSystem(TypePtr t) : type_(t) {
  if (!t->is_finite()) throw InvalidInput("root systems need a finite type, got " + t->repr());
  a_ = t->cartan_matrix();
  const std::size_t n = a_.size();

  d_.assign(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (d_[s] != 0) continue;
    d_[s] = 1;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && a_[i][j] != 0 && d_[j] == 0) {
          d_[j] = d_[i] * Rational(a_[i][j]) / Rational(a_[j][i]);
          stack.push_back(j);
        }
    }
  }

  std::set<RootVector> seen;
  std::vector<RootVector> todo;
  for (std::size_t i = 0; i < n; ++i) {
    seen.insert(simple_root(i));
    todo.push_back(simple_root(i));
  }
  while (!todo.empty()) {
    RootVector b = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      RootVector r = reflect(i, b);
      if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return x < 0; })) continue;
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  positive_.assign(seen.begin(), seen.end());
  auto height = [](const RootVector& r) { return std::accumulate(r.begin(), r.end(), Rational(0)); };
  std::sort(positive_.begin(), positive_.end(), [&](const RootVector& x, const RootVector& y) {
    Rational hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });

  auto parts = t->standard_quiver().bipartition();
  if (!parts) throw InvalidInput("standard quiver of " + t->repr() + " is not bipartite");
  plus_ = parts->sources;
  minus_ = parts->sinks;
}

RootVector RootSystem::simple_root(std::size_t i) const {
  RootVector r(rank(), 0);
  r.at(i) = 1;
  return r;
}

RootVector RootSystem::reflect(std::size_t i, const RootVector& beta) const {
  Rational s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += Rational(a_[i][j]) * beta[j];
  RootVector r = beta;
  r[i] -= s;
  return r;
}

Rational RootSystem::form(const RootVector& x, const RootVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += x[i] * y[j] * d_[i] * Rational(a_[i][j]);
  return s;
}

RootVector RootSystem::coroot(const RootVector& beta) const {
  Rational half = form(beta, beta) / 2;
  RootVector r(rank());
  for (std::size_t j = 0; j < rank(); ++j) r[j] = beta[j] * d_[j] / half;
  return r;
}

std::vector<RootVector> RootSystem::almost_positive_roots() const {
  auto out = positive_;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(negate(simple_root(i)));
  return out;
}

bool RootSystem::is_almost_positive(const RootVector& beta) const {
  if (beta.size() != rank()) return false;
  if (negative_simple(beta)) return true;
  return std::find(positive_.begin(), positive_.end(), beta) != positive_.end();
}

RootVector RootSystem::tau(int eps, const RootVector& beta) const {
  const auto& same = eps > 0 ? plus_ : minus_;
  const auto& other = eps > 0 ? minus_ : plus_;
  if (auto k = negative_simple(beta); k && std::find(other.begin(), other.end(), *k) != other.end()) return beta;
  RootVector r = beta;
  for (auto i : same) r = reflect(i, r);
  return r;
}

std::vector<std::vector<RootVector>> RootSystem::tau_orbits() const {
  auto roots = almost_positive_roots();
  std::set<RootVector> done;
  std::vector<std::vector<RootVector>> out;
  for (const auto& start : roots) {
    if (done.count(start)) continue;
    std::vector<RootVector> orbit{start};
    done.insert(start);
    for (std::size_t p = 0; p < orbit.size(); ++p)
      for (int eps : {1, -1}) {
        RootVector r = tau(eps, orbit[p]);
        if (done.insert(r).second) orbit.push_back(r);
      }
    out.push_back(std::move(orbit));
  }
  return out;
}

RootVector RootSystem::rho_coroot() const {
  RootVector r(rank(), 0);
  for (const auto& b : positive_) {
    auto c = coroot(b);
    for (std::size_t i = 0; i < rank(); ++i) r[i] += c[i] / 2;
  }
  return r;
}

Rational RootSystem::c(const RootVector& beta) const {
  auto rho = rho_coroot();
  for (const auto& orbit : tau_orbits()) {
    if (std::find(orbit.begin(), orbit.end(), beta) == orbit.end()) continue;
    std::optional<Rational> value;
    for (const auto& r : orbit)
      if (auto k = negative_simple(r)) {
        if (value && *value != rho[*k]) throw Error("tau-orbit of " + root_string(beta) + " pairs unequal coefficients");
        value = rho[*k];
      }
    if (!value) throw Error("tau-orbit of " + root_string(beta) + " misses -Delta");
    return *value;
  }
  throw InvalidInput(root_string(beta) + " is not an almost positive root");
}

RootVector almost_positive_root(const RationalFunction& v, const RootSystem& rs) {
  auto d = denominator_vector(v, rs.rank());
  RootVector r(d.begin(), d.end());
  if (!rs.is_almost_positive(r))
    throw InvalidInput("denominator vector " + tuple_string(r) + " is not an almost positive root of " +
                       rs.type()->repr());
  return r;
}

RootVector almost_positive_root(const ClusterVariable& v, TypePtr t) {
  return almost_positive_root(v.value(), RootSystem(t));
}

std::string AssociahedronRealization::export_halfspaces() const {
  std::string s;
  for (const auto& h : halfspaces) {
    s += h.bound.get_str() + " |";
    for (const auto& x : h.normal) s += " " + x.get_str();
    s += "\n";
  }
  return s;
}

std::string AssociahedronRealization::export_vertices() const {
  std::string s;
  if (vertices)
    for (const auto& v : *vertices) s += tuple_string(v) + "\n";
  return s;
}

std::string AssociahedronRealization::description() const {
  std::string s = "The generalized associahedron of type " + type->repr() + " having " + std::to_string(dimension) +
                  " dimensions";
  if (vertices) s += " and " + std::to_string(vertices->size()) + " vertices";
  return s;
}

AssociahedronRealization associahedron(TypePtr t, bool enumerate) {
  RootSystem rs(t);
  const std::size_t n = rs.rank();
  AssociahedronRealization out;
  out.type = t;
  out.dimension = n;

  auto rho = rs.rho_coroot();
  std::map<RootVector, Rational> cval;
  for (const auto& orbit : rs.tau_orbits()) {
    std::optional<Rational> value;
    for (const auto& r : orbit)
      if (auto k = negative_simple(r)) value = rho[*k];
    for (const auto& r : orbit) cval[r] = *value;
  }
  out.shift.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.shift[i] = cval.at(negate(rs.simple_root(i)));
  for (const auto& b : rs.almost_positive_roots()) out.halfspaces.push_back({b, cval.at(b) + dot(b, out.shift)});

  if (!enumerate) return out;
  if (n > kMaxVertexEnumerationRank)
    throw InvalidInput("vertex enumeration is limited to rank " + std::to_string(kMaxVertexEnumerationRank));

  const std::size_t F = out.halfspaces.size();
  std::set<RootVector> found;
  std::vector<RootVector> verts;
  std::vector<bool> mask(F, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(n), true);
  do {
    std::vector<RootVector> rows;
    RootVector rhs;
    for (std::size_t f = 0; f < F; ++f)
      if (mask[f]) {
        rows.push_back(out.halfspaces[f].normal);
        rhs.push_back(out.halfspaces[f].bound);
      }
    auto x = solve(rows, rhs);
    if (!x) continue;
    bool feasible = std::all_of(out.halfspaces.begin(), out.halfspaces.end(),
                                [&](const Halfspace& h) { return dot(h.normal, *x) <= h.bound; });
    if (feasible && found.insert(*x).second) verts.push_back(*x);
  } while (std::prev_permutation(mask.begin(), mask.end()));

  for (const auto& v : verts) {
    std::vector<std::size_t> tight;
    for (std::size_t f = 0; f < F; ++f)
      if (dot(out.halfspaces[f].normal, v) == out.halfspaces[f].bound) tight.push_back(f);
    out.vertex_facets.push_back(std::move(tight));
  }
  out.vertices = std::move(verts);
  return out;
}

std::string ClusterComplex::export_facets() const {
  std::string s;
  for (const auto& f : facets) {
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " ; " : "") + root_string(vertices[f[i]]);
    s += "\n";
  }
  return s;
}

std::string ClusterComplex::description() const {
  return "Simplicial complex with " + std::to_string(vertices.size()) + " vertices and " +
         std::to_string(facets.size()) + " facets";
}

ClusterComplex cluster_complex(TypePtr t) {
  RootSystem rs(t);
  ClusterComplex out;
  out.type = t;
  out.vertices = rs.almost_positive_roots();
  std::set<std::vector<std::size_t>> facets;
  for (const auto& item : seed_class(Seed(t->b_matrix()))) {
    std::vector<std::size_t> f;
    for (const auto& v : item.value.cluster()) {
      auto r = almost_positive_root(v, rs);
      f.push_back(static_cast<std::size_t>(std::find(out.vertices.begin(), out.vertices.end(), r) -
                                           out.vertices.begin()));
    }
    std::sort(f.begin(), f.end());
    facets.insert(std::move(f));
  }
  out.facets.assign(facets.begin(), facets.end());
  return out;
}

}  // namespace quivermut
