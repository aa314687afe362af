#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "quivermut/errors.hpp"
#include "quivermut/quiver.hpp"
#include "test_helpers.hpp"

using namespace qmt;

namespace {
QuiverEdge E(std::size_t i, std::size_t j, long b, long c) { return {i, j, b, c}; }
EdgeSpec S(std::size_t i, std::size_t j) { return {i, j, {}}; }
EdgeSpec S(std::size_t i, std::size_t j, long b) { return {i, j, Integer(b)}; }
EdgeSpec S(std::size_t i, std::size_t j, long b, long c) { return {i, j, std::pair<Integer, Integer>(b, c)}; }

const auto B3 = [] { return Quiver(EM({{0, 1, 0}, {-1, 0, -1}, {0, 2, 0}})); };
const auto C3 = [] { return Quiver(EM({{0, 1, 0}, {-1, 0, -2}, {0, 1, 0}})); };

bool brute_isomorphic(const Quiver& a, const Quiver& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<std::size_t> pf(a.n()), pz(a.m());
  std::iota(pf.begin(), pf.end(), 0);
  do {
    std::iota(pz.begin(), pz.end(), 0);
    do {
      std::vector<std::size_t> p(pf);
      for (auto z : pz) p.push_back(a.n() + z);
      if (a.permuted(p) == b) return true;
    } while (std::next_permutation(pz.begin(), pz.end()));
  } while (std::next_permutation(pf.begin(), pf.end()));
  return false;
}

std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<std::size_t> a(n), b(m);
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), n);
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
}  // namespace

TEST_CASE("quiver from matrix") {
  auto q = Quiver(EM({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}));
  CHECK(q.edges() == std::vector<QuiverEdge>{E(0, 1, 1, -1), E(2, 1, 1, -1)});
  CHECK(q == Quiver::from_edges({S(0, 1), S(2, 1)}, 3));
  CHECK(B3().edges() == std::vector<QuiverEdge>{E(0, 1, 1, -1), E(2, 1, 2, -1)});
  CHECK(C3().edges() == std::vector<QuiverEdge>{E(0, 1, 1, -1), E(2, 1, 1, -2)});
  auto one = Quiver(ExchangeMatrix::from_rows(M({{0}})));
  CHECK(one.vertex_count() == 1);
  CHECK(one.edges().empty());
}

TEST_CASE("frozen vertices use the negated pair") {
  auto b = EM({{0, 1}, {-1, 0}, {2, 0}, {0, -3}}, 2);
  auto q = Quiver(b);
  CHECK(q.edges() == std::vector<QuiverEdge>{E(0, 1, 1, -1), E(1, 3, 3, -3), E(2, 0, 2, -2)});
  CHECK(Quiver::from_edges({S(0, 1), S(2, 0, 2), S(1, 3, 3)}, 4, 2) == q);
  CHECK_THROWS_AS(q.mutate(2), FrozenIndex);
  CHECK_THROWS_AS(Quiver::from_edges({S(2, 3)}, 4, 2), InvalidInput);
}

TEST_CASE("digraph constructor") {
  CHECK(Quiver::from_edges({}, 2).matrix() == ExchangeMatrix(2, 0));
  // the label follows the stated convention: b on i -> j gives (b, -b)
  auto q6 = Quiver::from_edges({S(0, 1, 1), S(2, 1, 2)}, 3);
  CHECK(q6.edges() == std::vector<QuiverEdge>{E(0, 1, 1, -1), E(2, 1, 2, -2)});
  CHECK(q6.matrix()(2, 1) == 2);
  // last copy wins
  auto dup = Quiver::from_edges({S(0, 1, 1), S(0, 1, 3)}, 2);
  CHECK(dup.edges() == std::vector<QuiverEdge>{E(0, 1, 3, -3)});
  CHECK(Quiver::from_edges({S(0, 1, 2, -1), S(1, 2)}, 3).edges() ==
        std::vector<QuiverEdge>{E(0, 1, 2, -1), E(1, 2, 1, -1)});
  CHECK_THROWS_AS(Quiver::from_edges({S(0, 0)}, 2), InvalidInput);
  CHECK_THROWS_AS(Quiver::from_edges({S(0, 1), S(1, 0)}, 2), InvalidInput);
  CHECK_THROWS_AS(Quiver::from_edges({S(0, 1, -1, 1)}, 2), InvalidInput);
  CHECK_THROWS_AS(Quiver::from_edges({S(0, 1, 0)}, 2), InvalidInput);
  CHECK_THROWS_AS(Quiver::from_edges({S(0, 3)}, 2), InvalidInput);
  // pair labels must still be skew-symmetrizable
  CHECK_THROWS_AS(Quiver::from_edges({S(0, 1, 1, -1), S(1, 2, 1, -1), S(2, 0, 2, -1)}, 3), NotSkewSymmetrizable);
}

TEST_CASE("edge list text") {
  auto q = Quiver::from_edge_list("0 1\n2 1 2\n");
  CHECK(q.edges() == std::vector<QuiverEdge>{E(0, 1, 1, -1), E(2, 1, 2, -2)});
  CHECK(Quiver::from_edge_list(B3().edge_list(), 3) == B3());
  CHECK(Quiver::from_edge_list("", 2).vertex_count() == 2);
  CHECK_THROWS_AS(Quiver::from_edge_list("0 x"), ParseError);
}

TEST_CASE("quiver mutation") {
  auto a3 = Quiver(EM({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}));
  auto m = a3.mutate(1);
  CHECK(m.edges() == std::vector<QuiverEdge>{E(1, 0, 1, -1), E(1, 2, 1, -1)});
  CHECK(m.mutate(1) == a3);
  auto tri = Quiver::from_edges({S(0, 1), S(1, 2), S(2, 0)}, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    auto t = tri.mutate(k);
    CHECK(t.edges().size() == 2);
    CHECK(t.is_acyclic());
  }
}

TEST_CASE("encoding") {
  CHECK(encode(Quiver(ExchangeMatrix::from_rows(M({{0}})))) == "Q1,0|");
  CHECK(encode(Quiver(EM({{0, 1}, {-1, 0}}))) == "Q2,0|0,1,1,-1;");
  CHECK(encode(B3()) == "Q3,0|0,1,1,-1;2,1,2,-1;");
  CHECK(decode("Q3,0|0,1,1,-1;2,1,2,-1;") == B3());
  auto fr = Quiver(EM({{0, 1}, {-1, 0}, {2, 0}, {0, -3}}, 2));
  CHECK(decode(encode(fr)) == fr);
  for (const char* bad : {"", "Q", "Q2,0", "Q2,0|0,1,1;", "Q2,0|1,0,1,-1;0,1,1,-1;", "Q2,0|0,1,1,-1",
                          "Q2,0|0,5,1,-1;", "Q2,0|0,1,1,1;", "Q2,0|0,1,1,-1;0,1,1,-1;", "Q0,0|"})
    CHECK_THROWS_AS(decode(bad), ParseError);
}

TEST_CASE("acyclic and bipartite") {
  auto a4 = Quiver(EM({{0, 1, 0, 0}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {0, 0, -1, 0}}));
  REQUIRE(a4.bipartition());
  CHECK(a4.bipartition()->sources == std::vector<std::size_t>{0, 2});
  CHECK(a4.bipartition()->sinks == std::vector<std::size_t>{1, 3});
  auto tri = Quiver::from_edges({S(0, 1), S(1, 2), S(2, 0)}, 3);
  CHECK_FALSE(tri.is_bipartite());
  CHECK_FALSE(tri.is_acyclic());
  auto one = Quiver(ExchangeMatrix::from_rows(M({{0}})));
  CHECK(one.is_bipartite());
  CHECK(one.is_acyclic());
  auto path = Quiver::from_edges({S(0, 1), S(1, 2)}, 3);
  CHECK(path.is_acyclic());
  CHECK_FALSE(path.is_bipartite());
  CHECK(path.is_source(0));
  CHECK(path.is_sink(2));
  CHECK_FALSE(path.is_sink(1));
}

TEST_CASE("reorientation") {
  auto a2 = Quiver(EM({{0, 1}, {-1, 0}}));
  CHECK(a2.reorient(std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}) == Quiver(EM({{0, -1}, {1, 0}})));
  CHECK_THROWS_AS(a2.reorient(std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}}), InvalidInput);
  auto b3 = B3();
  CHECK(b3.reorient(std::vector<std::size_t>{0, 1, 2}).edges() ==
        std::vector<QuiverEdge>{E(0, 1, 1, -1), E(1, 2, 1, -2)});
  auto lin = Quiver::from_edges({S(0, 1), S(1, 2)}, 3);
  CHECK(lin.reorient(std::vector<std::size_t>{0, 1, 2}) == lin);
  CHECK(lin.reorient(std::vector<std::size_t>{2, 1, 0}) == Quiver::from_edges({S(1, 0), S(2, 1)}, 3));
  CHECK_THROWS_AS(lin.reorient(std::vector<std::size_t>{0, 1}), InvalidInput);
}

TEST_CASE("circular layout") {
  auto one = Quiver(ExchangeMatrix::from_rows(M({{0}})));
  auto l = one.layout_circular();
  CHECK(l[0].first == doctest::Approx(1.0));
  CHECK(l[0].second == doctest::Approx(0.0));
  auto four = Quiver(ExchangeMatrix(4, 0)).layout_circular();
  for (std::size_t i = 0; i < 4; ++i) {
    double a = std::atan2(four[i].second, four[i].first);
    double want = static_cast<double>(i) * M_PI / 2;
    CHECK(std::cos(a - want) == doctest::Approx(1.0));
  }
  auto fr = Quiver(EM({{0, 1}, {-1, 0}, {1, 0}}, 2)).layout_circular();
  CHECK(std::hypot(fr[2].first, fr[2].second) == doctest::Approx(1.5));
  CHECK(std::hypot(fr[1].first, fr[1].second) == doctest::Approx(1.0));
}

TEST_CASE("canonical labeling") {
  auto a4 = Quiver(EM({{0, 1, 0, 0}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {0, 0, -1, 0}}));
  auto c = canonical_form(a4);
  CHECK(c.quiver == a4.permuted(c.relabeling));
  CHECK(is_isomorphic(c.quiver, a4));
  auto cc = canonical_form(c.quiver);
  CHECK(cc.quiver == c.quiver);
  std::vector<std::size_t> id(4);
  std::iota(id.begin(), id.end(), 0);
  CHECK(cc.quiver.permuted(cc.relabeling) == c.quiver);
  // frozen vertices stay frozen
  auto fr = Quiver(EM({{0, 1}, {-1, 0}, {1, 0}}, 2));
  auto cf = canonical_form(fr);
  CHECK(cf.relabeling[2] == 2);
  CHECK(cf.quiver.m() == 1);
  // the two orientations of B2 are not isomorphic but B3 and C3 differ
  CHECK_FALSE(is_isomorphic(B3(), C3()));
  CHECK(is_isomorphic(B3(), B3().permuted({2, 0, 1})));
}

TEST_CASE("property: canonical key agrees with brute force") {
  std::mt19937_64 rng(77);
  int iso = 0, noniso = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 1 + rng() % 5, m = rng() % 2;
    auto a = Quiver(random_exchange_matrix(rng, n, m, 1));
    Quiver b = (rng() % 2) ? a.permuted(random_perm(rng, n, m)) : Quiver(random_exchange_matrix(rng, n, m, 1));
    if (rng() % 3 == 0) b = b.permuted(random_perm(rng, n, m));
    bool expect = brute_isomorphic(a, b);
    CHECK((canonical_key(a) == canonical_key(b)) == expect);
    (expect ? iso : noniso)++;
    auto ca = canonical_form(a);
    CHECK(ca.quiver == a.permuted(ca.relabeling));
    CHECK(canonical_form(ca.quiver).quiver == ca.quiver);
  }
  CHECK(iso > 50);
  CHECK(noniso > 50);
  // n = 6, symmetric-heavy cases
  for (int trial = 0; trial < 40; ++trial) {
    auto a = Quiver(random_exchange_matrix(rng, 6, 0, 1));
    auto b = a.permuted(random_perm(rng, 6, 0));
    CHECK(canonical_key(a) == canonical_key(b));
    auto c = a.mutate(rng() % 6);
    CHECK((canonical_key(a) == canonical_key(c)) == brute_isomorphic(a, c));
  }
}

TEST_CASE("property: round trips and commuting mutation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 5, m = rng() % 3;
    auto b = random_exchange_matrix(rng, n, m);
    auto q = Quiver(b);
    CHECK(q.matrix() == b);
    std::vector<EdgeSpec> specs;
    for (const auto& e : q.edges()) specs.push_back({e.from, e.to, std::pair<Integer, Integer>(e.b, e.c)});
    CHECK(Quiver::from_edges(specs, n + m, m) == q);
    CHECK(decode(encode(q)) == q);
    CHECK(Quiver::from_edge_list(q.edge_list(), n + m, m) == q);
    std::size_t k = rng() % n;
    CHECK(q.mutate(k) == Quiver(b.mutate(k)));
  }
}
