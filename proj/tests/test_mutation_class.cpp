#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "quivermut/errors.hpp"
#include "quivermut/mutation_class.hpp"
#include "test_helpers.hpp"

using namespace qmt;

namespace {
const auto A2 = [] { return EM({{0, 1}, {-1, 0}}); };
const auto A3 = [] { return EM({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}); };
const auto B2 = [] { return EM({{0, 1}, {-2, 0}}); };
const auto B3 = [] { return EM({{0, 1, 0}, {-1, 0, -1}, {0, 2, 0}}); };
const auto C3 = [] { return EM({{0, 1, 0}, {-1, 0, -2}, {0, 1, 0}}); };
const auto AT22 = [] { return EM({{0, -1, 0, -1}, {1, 0, 1, 0}, {0, -1, 0, -1}, {1, 0, 1, 0}}); };

std::vector<std::string> strs(const Seed& s, const std::vector<RationalFunction>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(s.render(f));
  return out;
}

ExchangeMatrix neg_transpose(const ExchangeMatrix& b) {
  IntegerMatrix r(b.n(), std::vector<Integer>(b.n()));
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j) r[i][j] = -b(j, i);
  return ExchangeMatrix::from_rows(r);
}

bool brute_isomorphic(const Quiver& a, const Quiver& b) {
  std::vector<std::size_t> p(a.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  do
    if (a.permuted(p) == b) return true;
  while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::set<std::string> keys(const std::vector<ExchangeMatrix>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(canonical_key(Quiver(m)));
  return out;
}

long max_numerator_degree(const std::vector<RationalFunction>& vs) {
  long d = 0;
  for (const auto& v : vs) d = std::max<long>(d, v.numerator().total_degree());
  return d;
}
}  // namespace

TEST_CASE("A2 seed classes") {
  Seed s(A2());
  CHECK(seed_class(s).size() == 5);
  CHECK(cluster_class(s).size() == 5);
  ClassConfig off;
  off.up_to_equivalence = false;
  CHECK(seed_class(s, off).size() == 10);
  ClassConfig zero;
  zero.depth = 0;
  auto only = seed_class(s, zero);
  REQUIRE(only.size() == 1);
  CHECK(only[0].value == s);
  CHECK(mutation_class(Quiver(A2()), zero).size() == 1);
  CHECK(mutation_class(Quiver(A2())).size() == 1);
  CHECK(mutation_class(Quiver(A2()), off).size() == 2);
}

TEST_CASE("B3 and C3 matrix classes") {
  auto b = b_matrix_class(B3());
  auto c = b_matrix_class(C3());
  CHECK(b.size() == 5);
  CHECK(c.size() == 5);
  std::vector<ExchangeMatrix> printed_b = {
      EM({{0, 0, 1}, {0, 0, 2}, {-1, -1, 0}}), EM({{0, 0, 1}, {0, 0, -2}, {-1, 1, 0}}),
      EM({{0, 1, 1}, {-2, 0, 0}, {-1, 0, 0}}), EM({{0, 2, 0}, {-1, 0, 1}, {0, -1, 0}}),
      EM({{0, -1, 1}, {2, 0, -2}, {-1, 1, 0}})};
  std::vector<ExchangeMatrix> printed_c = {
      EM({{0, 0, 1}, {0, 0, 1}, {-1, -2, 0}}), EM({{0, 0, 1}, {0, 0, -1}, {-1, 2, 0}}),
      EM({{0, 2, 1}, {-1, 0, 0}, {-1, 0, 0}}), EM({{0, 1, 0}, {-2, 0, 1}, {0, -1, 0}}),
      EM({{0, 1, -1}, {-2, 0, 1}, {2, -1, 0}})};
  CHECK(keys(b) == keys(printed_b));
  CHECK(keys(c) == keys(printed_c));
  std::vector<ExchangeMatrix> dual;
  for (const auto& m : b) dual.push_back(neg_transpose(m));
  CHECK(keys(dual) == keys(c));
  CHECK(keys(b) != keys(c));
  // the two last printed matrices become negative transposes after swapping 0 and 1
  CHECK(neg_transpose(printed_b[4]).permuted({1, 0, 2}) == printed_c[4]);
}

TEST_CASE("B3 and C3 variable classes") {
  Seed b(B3()), c(C3());
  auto vb = variable_class(b);
  auto vc = variable_class(c);
  CHECK(strs(b, vb.variables) ==
        std::vector<std::string>{"x0", "x1", "x2", "(x1 + 1)/x0", "(x0*x2^2 + 1)/x1", "(x1 + 1)/x2",
                                 "(x0*x2^2 + x1 + 1)/(x0*x1)", "(x0*x2^2 + x1 + 1)/(x1*x2)",
                                 "(x0*x2^2 + x1^2 + 2*x1 + 1)/(x0*x1*x2)", "(x0*x2^2 + x1^2 + 2*x1 + 1)/(x1*x2^2)",
                                 "(x1^3 + x0*x2^2 + 3*x1^2 + 3*x1 + 1)/(x0*x1*x2^2)",
                                 "(x0^2*x2^4 + 3*x0*x1*x2^2 + x1^3 + 2*x0*x2^2 + 3*x1^2 + 3*x1 + 1)/(x0*x1^2*x2^2)"});
  CHECK(strs(c, vc.variables) ==
        std::vector<std::string>{"x0", "x1", "x2", "(x1 + 1)/x0", "(x0*x2 + 1)/x1", "(x1^2 + 1)/x2",
                                 "(x0*x2 + x1 + 1)/(x0*x1)", "(x1^2 + x0*x2 + 1)/(x1*x2)",
                                 "(x1^3 + x1^2 + x0*x2 + x1 + 1)/(x0*x1*x2)",
                                 "(x0^2*x2^2 + x1^2 + 2*x0*x2 + 1)/(x1^2*x2)",
                                 "(x0^2*x2^2 + x1^3 + x0*x1*x2 + x1^2 + 2*x0*x2 + x1 + 1)/(x0*x1^2*x2)",
                                 "(x1^4 + x0^2*x2^2 + 2*x1^3 + 2*x0*x1*x2 + 2*x1^2 + 2*x0*x2 + 2*x1 + 1)/(x0^2*x1^2*x2)"});
  CHECK(max_numerator_degree(vb.variables) == 6);
  CHECK(max_numerator_degree(vc.variables) == 4);
  // the standard B3 seed is not bipartite, so the belt is found after a search
  CHECK(vb.used_belt);
}

TEST_CASE("A2 variable class order") {
  Seed s(A2());
  std::vector<std::string> notices;
  auto v = variable_class(s, std::nullopt, false, [&](const std::string& m) { notices.push_back(m); });
  CHECK(strs(s, v.variables) ==
        std::vector<std::string>{"x0", "x1", "(x1 + 1)/x0", "(x0 + 1)/x1", "(x0 + x1 + 1)/(x0*x1)"});
  CHECK(notices.size() == 1);
  CHECK(v.belt_period == 10u);
}

TEST_CASE("bipartite belt of the affine A(2,2) seed") {
  Seed s(AT22());
  REQUIRE(s.quiver().is_bipartite());
  std::vector<std::string> notices;
  auto v = variable_class(s, 1, false, [&](const std::string& m) { notices.push_back(m); });
  CHECK(notices == std::vector<std::string>{
                       "Found a bipartite seed - constructing the variable class into its bipartite belt."});
  CHECK(strs(s, v.variables) ==
        std::vector<std::string>{"x0", "x1", "x2", "x3", "(x1*x3 + 1)/x0", "(x0*x2 + 1)/x1", "(x1*x3 + 1)/x2",
                                 "(x0*x2 + 1)/x3", "(x1^2*x3^2 + x0*x2 + 2*x1*x3 + 1)/(x0*x1*x2)",
                                 "(x0^2*x2^2 + 2*x0*x2 + x1*x3 + 1)/(x0*x1*x3)",
                                 "(x1^2*x3^2 + x0*x2 + 2*x1*x3 + 1)/(x0*x2*x3)",
                                 "(x0^2*x2^2 + 2*x0*x2 + x1*x3 + 1)/(x1*x2*x3)"});
  // deeper belts never produce the x0*x1 denominator
  for (const auto& f : variable_class(s, 3).variables) CHECK(s.render(f).find("/(x0*x1)") == std::string::npos);

  auto t = s.mutate({0, 1});
  CHECK(t.cluster_strings() ==
        std::vector<std::string>{"(x1*x3 + 1)/x0", "(x0*x2 + x1*x3 + 1)/(x0*x1)", "x2", "x3"});
  notices.clear();
  auto w = variable_class(t, 2, true, [&](const std::string& m) { notices.push_back(m); });
  CHECK(notices.empty());
  CHECK(strs(t, w.variables) ==
        std::vector<std::string>{
            "x0", "x1", "x2", "x3", "(x1*x3 + 1)/x0", "(x0*x2 + 1)/x1", "(x1*x3 + 1)/x2",
            "(x0*x2 + x1*x3 + 1)/(x0*x1)", "(x0*x2 + x1*x3 + 1)/(x0*x3)", "(x0*x2 + x1*x3 + 1)/(x1*x2)",
            "(x1^2*x3^2 + x0*x2 + 2*x1*x3 + 1)/(x0*x1*x2)", "(x0^2*x2^2 + 2*x0*x2 + x1*x3 + 1)/(x0*x1*x3)",
            "(x1^3*x3^3 + x0^2*x2^2 + 2*x0*x1*x2*x3 + 3*x1^2*x3^2 + 2*x0*x2 + 3*x1*x3 + 1)/(x0^2*x1*x2*x3)"});
  CHECK_THROWS_AS(variable_class(s), UnboundedRequest);
}

TEST_CASE("belt periodicity in finite type") {
  // the labeled period is h + 2 when the longest Weyl element acts as -1, else 2(h + 2)
  struct Case {
    ExchangeMatrix b;
    std::size_t h;
    bool minus_identity;
  };
  for (const auto& c : {Case{A2(), 3, false}, Case{A3(), 4, false}, Case{B2(), 4, true}}) {
    Seed s(c.b);
    REQUIRE(s.quiver().is_bipartite());
    auto belt = bipartite_belt(s, 2 * (c.h + 2));
    CHECK(belt.back() == s);
    CHECK(belt.front() == s);
    const std::size_t period = c.minus_identity ? c.h + 2 : 2 * (c.h + 2);
    for (std::size_t m = 1; m < period; ++m) CHECK_FALSE(belt[2 * (c.h + 2) + m] == s);
    auto v = variable_class(s);
    REQUIRE(v.belt_period);
    CHECK(*v.belt_period == period);
  }
}

TEST_CASE("property: belt agrees with exhaustive search in finite type") {
  std::vector<ExchangeMatrix> bs = {A2(), A3(), B2(), B3(), C3(), EM({{0, 1}, {-3, 0}}),
                                    EM({{0, 1, 0, 0}, {-1, 0, -1, -1}, {0, 1, 0, 0}, {0, 1, 0, 0}}),
                                    EM({{0, 1, 0, 0}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {0, 0, -2, 0}}),
                                    EM({{0, 1, 0, 0}, {-1, 0, -2, 0}, {0, 1, 0, 1}, {0, 0, -1, 0}})};
  for (const auto& b : bs) {
    Seed s(b);
    auto fast = variable_class(s);
    auto slow = variable_class(s, std::nullopt, true);
    CHECK(fast.used_belt);
    CHECK_FALSE(slow.used_belt);
    CHECK(strs(s, fast.variables) == strs(s, slow.variables));
  }
}

TEST_CASE("paths replay, equivalence dedup is sound") {
  std::vector<ExchangeMatrix> bs = {A3(), B3(), AT22(), EM({{0, 1, 0, 0}, {-1, 0, -1, -1}, {0, 1, 0, 0}, {0, 1, 0, 0}})};
  for (const auto& b : bs) {
    Quiver root(b);
    auto items = mutation_class(root);
    for (const auto& it : items) {
      Quiver q = root;
      for (auto k : it.path) q = q.mutate(k);
      CHECK(q == it.value);
      CHECK(it.path.size() == it.depth);
    }
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = i + 1; j < items.size(); ++j) CHECK_FALSE(brute_isomorphic(items[i].value, items[j].value));
    // consecutive depths: each non-root item is one mutation from an earlier item
    for (std::size_t i = 1; i < items.size(); ++i) CHECK(items[i].depth >= items[i - 1].depth);
  }
  Seed s(A3());
  for (const auto& it : seed_class(s)) CHECK(s.mutate(it.path) == it.value);
}

TEST_CASE("class sizes of small finite types by enumeration") {
  CHECK(mutation_class(Quiver(A3())).size() == 4);
  CHECK(mutation_class(Quiver(B3())).size() == 5);
  CHECK(mutation_class(Quiver(EM({{0, 1, 0, 0}, {-1, 0, -1, -1}, {0, 1, 0, 0}, {0, 1, 0, 0}}))).size() == 6);
  CHECK(mutation_class(Quiver(EM({{0, 1}, {-3, 0}}))).size() == 2);
  CHECK(seed_class(Seed(A3())).size() == 14);
  CHECK(seed_class(Seed(B3())).size() == 20);
}

TEST_CASE("unbounded requests") {
  auto markov = Quiver(EM({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}));
  CHECK(mutation_class(markov).size() == 1);
  CHECK_FALSE(is_finite_type(markov.matrix()));
  CHECK_THROWS_AS(mutation_class(Quiver(EM({{0, 3, -3}, {-3, 0, 3}, {3, -3, 0}}))), UnboundedRequest);
  CHECK(mutation_class(Quiver(EM({{0, 2}, {-2, 0}}))).size() == 1);
  CHECK_THROWS_AS(seed_class(Seed(EM({{0, 2}, {-2, 0}}))), UnboundedRequest);
  CHECK_THROWS_AS(cluster_class(Seed(AT22())), UnboundedRequest);
  ClassConfig d;
  d.depth = 3;
  CHECK(seed_class(Seed(EM({{0, 2}, {-2, 0}})), d).size() == 7);
  CHECK_THROWS_AS(mutation_class(Quiver(EM({{0, 2}, {-2, 0}}).principal_extension())), UnboundedRequest);
  CHECK(mutation_class(Quiver(A2().principal_extension())).size() == 5);
  CHECK(is_finite_type(A3()));
  CHECK(is_finite_type(Quiver::from_edges({{0, 1, {}}, {1, 2, {}}, {2, 0, {}}}, 3).matrix()));
  CHECK_FALSE(is_finite_type(EM({{0, 2}, {-2, 0}})));
}

TEST_CASE("sink-source moves, layer reports, cancellation") {
  ClassConfig cfg;
  cfg.only_sink_source = true;
  cfg.up_to_equivalence = false;
  Quiver root(EM({{0, 1, 0, 0}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {0, 0, -1, 0}}));
  auto items = mutation_class(root, cfg);
  for (const auto& it : items) {
    Quiver q = root;
    for (auto k : it.path) {
      CHECK((q.is_sink(k) || q.is_source(k)));
      q = q.mutate(k);
    }
    CHECK(q.is_acyclic());
  }
  // sink-source moves from an orientation of a tree reach every orientation that is reachable by reflections
  CHECK(items.size() == 8);

  std::vector<LayerReport> reports;
  ClassConfig rep;
  rep.on_layer = [&](const LayerReport& r) { reports.push_back(r); };
  auto seeds = seed_class(Seed(A2()), rep);
  REQUIRE(reports.size() >= 3);
  CHECK(reports.front().depth == 0);
  CHECK(reports.front().count == 1);
  CHECK(reports.back().count == seeds.size());
  for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i].depth == reports[i - 1].depth + 1);

  std::atomic<bool> stop{true};
  ClassConfig c;
  c.cancel = &stop;
  CHECK_THROWS_AS(seed_class(Seed(A3()), c), Cancelled);
}

TEST_CASE("groups of mutations") {
  auto one = ExchangeMatrix::from_rows(M({{0}}));
  CHECK(group_of_mutations(Quiver(one)).group.order() == 1);
  CHECK(group_of_mutations(Quiver(A2())).group.order() == 2);
  CHECK(group_of_mutations(Quiver(B2())).group.order() == 2);
  auto a3 = group_of_mutations(Quiver(A3()));
  CHECK(a3.ground_set.size() == 14);
  CHECK(a3.group.order() == 322560);
  CHECK(group_of_mutations(Seed(one)).group.order() == 2);
  auto a2 = group_of_mutations(Seed(A2()));
  CHECK(a2.ground_set.size() == 10);
  CHECK(a2.group.order() == 10);
  for (const auto& g : a3.group.generators()) CHECK(is_identity(compose(g, g)));
}

TEST_CASE("permutation groups") {
  // symmetric group S5 from a transposition and a 5-cycle
  PermutationGroup s5(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}});
  CHECK(s5.order() == 120);
  PermutationGroup a5(5, {{0, 2, 3, 1, 4}, {1, 2, 3, 4, 0}});
  CHECK(a5.order() == 60);
  CHECK(a5.contains({1, 2, 0, 3, 4}));
  CHECK_FALSE(a5.contains({1, 0, 2, 3, 4}));
  PermutationGroup trivial(3, {});
  CHECK(trivial.order() == 1);
  // brute-force closure on random small groups
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + rng() % 5;
    std::vector<Permutation> gens;
    for (int g = 0; g < 2; ++g) {
      Permutation p(n);
      std::iota(p.begin(), p.end(), 0u);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    std::set<Permutation> closure;
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Permutation> todo{id};
    closure.insert(id);
    while (!todo.empty()) {
      auto p = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        auto q = compose(g, p);
        if (closure.insert(q).second) todo.push_back(q);
      }
    }
    CHECK(PermutationGroup(n, gens).order() == closure.size());
  }
}
