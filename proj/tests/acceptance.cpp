// One line per acceptance criterion. Pass --long to add the tagged long-running checks.
#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "quivermut/errors.hpp"
#include "quivermut/mutation_class.hpp"
#include "quivermut/root_geometry.hpp"
#include "quivermut/service.hpp"
#include "quivermut/type_detection.hpp"
#include "quivermut/type_registry.hpp"
#include "test_helpers.hpp"

using namespace qmt;

namespace {

struct Failure {
  std::string what;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

TypePtr T(const char* d) { return parse_type(d); }

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

std::size_t enumerated(TypePtr t) { return mutation_class(t->standard_quiver()).size(); }

bool brute_isomorphic(const Quiver& a, const Quiver& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<std::size_t> p(a.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  do
    if (a.permuted(p) == b) return true;
  while (std::next_permutation(p.begin(), p.begin() + static_cast<long>(a.n())));
  return false;
}

// ---------------------------------------------------------------- criteria

std::string check_a2_transcript() {
  Seed s(EM({{0, 1}, {-1, 0}}));
  auto b = EM({{0, 1}, {-1, 0}}), nb = EM({{0, -1}, {1, 0}});
  need(s.mutation_matrices({0, 1, 0, 1, 0}) == std::vector<ExchangeMatrix>{b, nb, b, nb, b, nb}, "matrix list");
  need(strs(s, s.mutation_variables({0, 1, 0, 1, 0})) ==
           std::vector<std::string>{"(x1 + 1)/x0", "(x0 + x1 + 1)/(x0*x1)", "(x0 + 1)/x1", "x0", "x1"},
       "variable list");
  return "6 matrices, 5 variables";
}

std::string check_fibonacci() {
  Seed s(EM({{0, 2}, {-2, 0}}));
  std::vector<Rational> ones{1, 1}, got;
  for (const auto& v : s.mutation_variables({0, 1, 0, 1, 0})) got.push_back(v.evaluate(ones));
  need(got == std::vector<Rational>{2, 5, 13, 34, 89}, "values");
  return "2 5 13 34 89";
}

std::string check_principal_transcript() {
  Seed sp3 = Seed(EM({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})).principal_extension();
  auto seeds = sp3.mutation_seeds({0, 1, 0, 2});
  need(strs(sp3, sp3.mutation_variables({0, 1, 0, 2})) ==
           std::vector<std::string>{"(x1 + y0)/x0", "(x0*y0*y1 + x1*x2 + x2*y0)/(x0*x1)", "(x0*y1 + x2)/x1",
                                    "(x0*x1*y0*y1*y2 + x0*y0*y1 + x1*x2 + x2*y0)/(x0*x1*x2)"},
       "variables");
  sp3.mutate_in_place({0, 1, 0, 2});
  need(sp3 == seeds.back(), "in-place mutation differs from the returned seed");
  return "4 variables, in-place = returned";
}

std::string check_b3_c3_duality() {
  auto b3 = EM({{0, 1, 0}, {-1, 0, -1}, {0, 2, 0}}), c3 = EM({{0, 1, 0}, {-1, 0, -2}, {0, 1, 0}});
  auto bc = b_matrix_class(b3), cc = b_matrix_class(c3);
  need(bc.size() == 5 && cc.size() == 5, "class sizes");
  for (const auto& m : bc) {
    int matches = 0;
    for (const auto& c : cc) matches += is_isomorphic(Quiver(neg_transpose(m)), Quiver(c));
    need(matches == 1, "negative transpose pairing");
  }
  auto degree = [](const std::vector<RationalFunction>& vs) {
    long d = 0;
    for (const auto& v : vs) d = std::max<long>(d, v.numerator().total_degree());
    return d;
  };
  auto vb = variable_class(Seed(b3)).variables, vc = variable_class(Seed(c3)).variables;
  need(vb.size() == 12 && vc.size() == 12, "variable class sizes");
  need(degree(vb) == 6 && degree(vc) == 4, "numerator degrees");
  return "5/5 matrices paired, 12/12 variables, degrees 6 vs 4";
}

std::string check_class_size_table() {
  struct Row {
    const char* type;
    long size;
  };
  std::string detail;
  for (auto [d, size] : std::vector<Row>{{"F,4", 15}, {"G,2", 2}, {"D,4", 6}, {"E,6", 67}, {"X,6,2", 5},
                                         {"X,7,2", 2}, {"V,4,2", 7}, {"W,4,2", 2}}) {
    TypePtr t = T(d);
    need(class_size(t).value == size, std::string(d) + " formula");
    need(enumerated(t) == static_cast<std::size_t>(size), std::string(d) + " enumeration");
  }
  for (int r = 1; r <= 3; ++r)
    for (int s = r; s <= 3; ++s) {
      TypePtr t = make_type("A", std::vector<int>{r, s}, Twist::affine);
      need(class_size(t).value == enumerated(t), t->repr() + " enumeration");
    }
  return "F4 15, G2 2, D4 6, E6 67, X6 5, X7 2, V4 7, W4 2, affine A up to (3,3)";
}

std::string check_long_class_sizes() {
  need(enumerated(T("E,7")) == 416, "E7");
  need(enumerated(T("E,8")) == 1574, "E8");
  need(enumerated(T("E,6,1:1")) == 49, "elliptic E6");
  return "E7 416, E8 1574, elliptic E6 49";
}

std::string check_coercions() {
  struct Row {
    TypePtr got;
    const char* want;
  };
  std::vector<Row> rows = {
      {make_type("C", 2), "['B', 2]"},
      {make_type("D", 3), "['A', 3]"},
      {make_type("A", 5, Twist::other), "['CD', 3, 1]"},
      {parse_type("['D', 4, 3]"), "['G', 2, -1]"},
      {make_type("E", 6, Twist::other), "['F', 4, -1]"},
      {make_type("R2", std::vector<int>{1, 1}, Twist::other), "['A', 2]"},
      {make_type("R2", std::vector<int>{1, 2}, Twist::other), "['B', 2]"},
      {make_type("R2", std::vector<int>{1, 3}, Twist::other), "['G', 2]"},
      {make_type("R2", std::vector<int>{1, 4}, Twist::other), "['BC', 1, 1]"},
      {make_type("R2", std::vector<int>{2, 2}, Twist::other), "['A', [1, 1], 1]"},
      {make_type("GR", std::vector<int>{2, 6}, Twist::infinite), "['A', 3]"},
      {make_type("GR", std::vector<int>{3, 6}, Twist::infinite), "['D', 4]"},
      {make_type("GR", std::vector<int>{3, 7}, Twist::infinite), "['E', 6]"},
      {make_type("GR", std::vector<int>{3, 8}, Twist::infinite), "['E', 8]"},
      {make_type("GR", std::vector<int>{3, 9}, Twist::infinite), "['E', 8, [1, 1]]"},
      {make_type("GR", std::vector<int>{4, 8}, Twist::infinite), "['E', 7, [1, 1]]"},
      {make_type("TR", 1, Twist::infinite), "['A', 1]"},
      {make_type("TR", 2, Twist::infinite), "['A', 3]"},
      {make_type("TR", 3, Twist::infinite), "['D', 6]"},
      {make_type("TR", 4, Twist::infinite), "['E', 8, [1, 1]]"},
      {make_type("T", std::vector<int>{1, 3, 4}, Twist::infinite), "['A', 6]"},
      {make_type("T", std::vector<int>{2, 2, 4}, Twist::infinite), "['D', 6]"},
      {make_type("T", std::vector<int>{2, 3, 3}, Twist::infinite), "['E', 6]"},
      {make_type("T", std::vector<int>{2, 3, 4}, Twist::infinite), "['E', 7]"},
      {make_type("T", std::vector<int>{2, 3, 5}, Twist::infinite), "['E', 8]"},
      {make_type("T", std::vector<int>{2, 3, 6}, Twist::infinite), "['E', 8, 1]"},
      {make_type("T", std::vector<int>{2, 4, 4}, Twist::infinite), "['E', 7, 1]"},
      {make_type("T", std::vector<int>{3, 3, 3}, Twist::infinite), "['E', 6, 1]"},
      {make_type("T", std::vector<int>{2, 3, 7}, Twist::infinite), "['E', 10, 3]"},
  };
  for (const auto& r : rows) need(r.got->repr() == r.want, r.got->repr() + " != " + r.want);
  return std::to_string(rows.size()) + " coercions";
}

std::string check_reducible_size() {
  auto cs = class_size(make_reducible({T("A,22"), T("BD,16,1")}));
  need(cs.value == Integer("4257164518523691840"), cs.to_string());
  return cs.to_string();
}

std::string check_geometry_counts() {
  struct Row {
    const char* type;
    std::size_t vertices;
  };
  for (auto [d, v] : std::vector<Row>{{"A,2", 5}, {"B,2", 6}, {"C,2", 6}, {"G,2", 8}}) {
    auto a = associahedron(T(d));
    need(a.vertices->size() == v && a.dimension == 2, d);
  }
  auto a3 = associahedron(T("A,3"));
  need(a3.vertices->size() == 14 && a3.halfspaces.size() == 9, "A3 counts");
  need(std::count(a3.vertices->begin(), a3.vertices->end(), RootVector(3, 0)) == 1, "A3 origin");
  auto b3 = associahedron(T("B,3"));
  need(b3.vertices->size() == 20 && b3.halfspaces.size() == 12, "B3 counts");
  for (const auto* a : {&a3, &b3})
    for (const auto& tight : a->vertex_facets) need(tight.size() == 3, "vertex on 3 facets");
  struct Cx {
    const char* type;
    std::size_t v, f;
  };
  for (auto [d, v, f] : std::vector<Cx>{{"A,2", 5, 5}, {"A,3", 9, 14}, {"B,3", 12, 20}}) {
    auto cc = cluster_complex(T(d));
    need(cc.vertices.size() == v && cc.facets.size() == f, std::string("complex ") + d);
  }
  return "A2 5, B2 6, C2 6, G2 8, A3 14/9 with origin, B3 20/12; complexes (5,5) (9,14) (12,20)";
}

std::string check_tau_table() {
  RootSystem rs(T("A,2"));
  auto R = [](long a, long b) { return RootVector{Rational(a), Rational(b)}; };
  const std::vector<std::array<RootVector, 3>> table = {{R(-1, 0), R(1, 0), R(-1, 0)},
                                                        {R(1, 0), R(-1, 0), R(1, 1)},
                                                        {R(1, 1), R(0, 1), R(1, 0)},
                                                        {R(0, -1), R(0, -1), R(0, 1)},
                                                        {R(0, 1), R(1, 1), R(0, -1)}};
  for (const auto& row : table)
    need(rs.tau(1, row[0]) == row[1] && rs.tau(-1, row[0]) == row[2], "row " + root_string(row[0]));
  std::size_t checked = 0;
  for (const char* d : {"A,1", "A,2", "B,2", "G,2", "A,3", "B,3", "C,3", "A,1xA,2", "A,1xA,1xA,1", "A,1xB,2"}) {
    RootSystem r(T(d));
    for (const auto& orbit : r.tau_orbits()) {
      bool meets = std::any_of(orbit.begin(), orbit.end(), [](const RootVector& b) {
        return std::count(b.begin(), b.end(), Rational(-1)) == 1 &&
               std::count(b.begin(), b.end(), Rational(0)) == static_cast<long>(b.size()) - 1;
      });
      need(meets, std::string(d) + " orbit misses -Delta");
      ++checked;
    }
  }
  return "5 rows; " + std::to_string(checked) + " orbits meet -Delta";
}

std::string check_groups() {
  auto one = ExchangeMatrix::from_rows(M({{0}}));
  need(group_of_mutations(Quiver(one)).group.order() == 1, "A1 quiver");
  need(group_of_mutations(T("A,2")->standard_quiver()).group.order() == 2, "A2 quiver");
  need(group_of_mutations(T("B,2")->standard_quiver()).group.order() == 2, "B2 quiver");
  need(group_of_mutations(T("A,3")->standard_quiver()).group.order() == 322560, "A3 quiver");
  need(group_of_mutations(Seed(one)).group.order() == 2, "A1 seed");
  need(group_of_mutations(Seed(T("A,2")->b_matrix())).group.order() == 10, "A2 seed");
  return "quivers 1 2 2 322560; seeds 2 10";
}

std::string check_long_group() {
  auto g = group_of_mutations(Seed(T("A,3")->b_matrix()));
  need(g.group.order() == 705438720, g.group.order().get_str());
  return "A3 seed group 705438720";
}

std::string check_belt() {
  auto at22 = EM({{0, -1, 0, -1}, {1, 0, 1, 0}, {0, -1, 0, -1}, {1, 0, 1, 0}});
  Seed s(at22);
  need(strs(s, variable_class(s, 1).variables) ==
           std::vector<std::string>{"x0", "x1", "x2", "x3", "(x1*x3 + 1)/x0", "(x0*x2 + 1)/x1", "(x1*x3 + 1)/x2",
                                    "(x0*x2 + 1)/x3", "(x1^2*x3^2 + x0*x2 + 2*x1*x3 + 1)/(x0*x1*x2)",
                                    "(x0^2*x2^2 + 2*x0*x2 + x1*x3 + 1)/(x0*x1*x3)",
                                    "(x1^2*x3^2 + x0*x2 + 2*x1*x3 + 1)/(x0*x2*x3)",
                                    "(x0^2*x2^2 + 2*x0*x2 + x1*x3 + 1)/(x1*x2*x3)"},
       "belt variables");
  Seed t = s.mutate({0, 1});
  auto w = strs(t, variable_class(t, 2, true).variables);
  need(w.size() == 13, "13 variables");
  need(std::find(w.begin(), w.end(), "(x0*x2 + x1*x3 + 1)/(x0*x1)") != w.end(), "x0*x1 denominator");
  for (auto [b, h] : std::vector<std::pair<ExchangeMatrix, std::size_t>>{
           {EM({{0, 1}, {-1, 0}}), 3}, {EM({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}), 4}, {EM({{0, 1}, {-2, 0}}), 4}}) {
    Seed base(b);
    need(bipartite_belt(base, 2 * (h + 2)).back() == base, "belt period");
  }
  return "12 belt variables, 13 with the x0*x1 entry, periods for A2 A3 B2";
}

std::string check_properties() {
  std::mt19937_64 rng(17);
  // involution and skew-symmetrizability
  for (int i = 0; i < 1000; ++i) {
    auto b = random_exchange_matrix(rng, 2 + rng() % 5, rng() % 3);
    std::size_t k = rng() % b.n();
    need(b.mutate(k).mutate(k) == b, "involution");
    auto top = b.mutate(k).top_block().to_rows();
    need(skew_symmetrizer(top).ok(), "skew-symmetrizable after mutation");
  }
  // Laurent phenomenon over finite and affine types of rank <= 4, depth <= 6
  std::vector<TypePtr> types;
  for (int n = 1; n <= 4; ++n)
    for (const char* L : {"A", "B", "C", "D", "F", "G"}) try {
        types.push_back(make_type(L, n));
      } catch (const InvalidInput&) {
      }
  for (int a = 1; a <= 3; ++a)
    for (int b = a; a + b <= 4; ++b) types.push_back(make_type("A", std::vector<int>{a, b}, Twist::affine));
  for (int n = 1; n <= 3; ++n)
    for (const char* L : {"B", "C", "G", "BB", "CC", "BC", "BD", "CD"}) try {
        TypePtr t = make_type(L, n, Twist::affine);
        if (t->rank() <= 4) types.push_back(t);
      } catch (const InvalidInput&) {
      }
  std::size_t seeds = 0;
  for (TypePtr t : types) {
    ClassConfig cfg;
    cfg.depth = 6;
    for (const auto& item : seed_class(Seed(t->b_matrix()), cfg)) {
      ++seeds;
      for (const auto& v : item.value.cluster()) need(v.is_laurent(), t->repr() + " non-Laurent variable");
    }
  }
  // round trips
  for (int i = 0; i < 200; ++i) {
    auto b = random_exchange_matrix(rng, 1 + rng() % 5, rng() % 3);
    Quiver q(b);
    need(q.matrix() == b, "matrix round trip");
    need(decode(encode(q)) == q, "encoding round trip");
    need(ExchangeMatrix::from_text(b.to_text()) == b, "text round trip");
    std::vector<EdgeSpec> edges;
    for (const auto& e : q.edges()) edges.push_back({e.from, e.to, std::pair<Integer, Integer>{e.b, e.c}});
    need(Quiver::from_edges(edges, q.vertex_count(), q.m()) == q, "edge round trip");
  }
  // canonical labeling vs brute force
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 2 + rng() % 5;
    auto a = Quiver(random_exchange_matrix(rng, n, 0, 1));
    auto b = rng() % 2 ? Quiver(random_exchange_matrix(rng, n, 0, 1)) : a;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    b = b.permuted(p);
    need((canonical_key(a) == canonical_key(b)) == brute_isomorphic(a, b), "canonical key soundness");
  }
  // cache equals recomputation
  auto dir = std::filesystem::temp_directory_path() / ("quivermut-acceptance-" + std::to_string(::getpid()));
  quivermut::service::ClassCache cache(dir);
  const char* roots[] = {"A,3", "A,4", "B,3", "C,3", "D,4", "A,1:2,1", "G,2", "B,4", "D,5", "A,2xA,2"};
  for (int i = 0; i < 20; ++i) {
    Seed s = seed_of_type(T(roots[rng() % std::size(roots)]));
    for (int k = 0, steps = static_cast<int>(rng() % 4); k < steps; ++k) s.mutate_in_place(rng() % s.n());
    quivermut::service::ClassRequest req;
    if (rng() % 2) req.depth = rng() % 4;
    auto fresh = quivermut::service::compute_class(s, req);
    quivermut::service::compute_class(s, req, nullptr, {}, &cache);
    auto hit = quivermut::service::compute_class(s, req, nullptr, {}, &cache);
    need(hit.from_cache && hit.items == fresh.items && hit.paths == fresh.paths, "cache = recompute");
  }
  std::filesystem::remove_all(dir);
  return "1000 involutions, " + std::to_string(types.size()) + " types / " + std::to_string(seeds) +
         " seeds Laurent, round trips, 300 canonical checks, 20 cache checks";
}

std::string check_discrepancies() {
  need(printed_a_class_formula(3) == Rational(13, 6), "printed A3 formula");
  need(class_size(T("A,3")).value == 4 && enumerated(T("A,3")) == 4, "A3 ships the brute-force value");
  auto comps = T("A,5")->irreducible_components();
  need(comps.size() == 1 && comps[0]->repr() == "['A', 5]", "irreducible_components of A5");
  auto lab = Quiver::from_edges({{0, 1, Integer(1)}, {2, 1, Integer(2)}}, 3);
  need(lab.edges() == std::vector<QuiverEdge>{{0, 1, 1, -1}, {2, 1, 2, -2}}, "edge pairs follow the (b, -c) convention");
  return "A3 13/6 vs 4, components (['A', 5],), edge pairs (1,-1) (2,-2)";
}

struct Criterion {
  const char* name;
  double budget;  // seconds
  std::function<std::string()> run;
  bool long_running = false;
};

}  // namespace

int main(int argc, char** argv) {
  bool with_long = false, only_long = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--long")) with_long = true;
    if (!std::strcmp(argv[i], "--only-long")) with_long = only_long = true;
  }
  std::vector<Criterion> all = {
      {"A2 golden transcript", 1, check_a2_transcript},
      {"Fibonacci check", 1, check_fibonacci},
      {"principal-coefficients transcript", 1, check_principal_transcript},
      {"B3/C3 duality", 5, check_b3_c3_duality},
      {"class-size table", 60, check_class_size_table},
      {"class-size table (long-running)", 600, check_long_class_sizes, true},
      {"coercion table", 1, check_coercions},
      {"reducible class size", 1, check_reducible_size},
      {"geometry counts", 30, check_geometry_counts},
      {"tau table", 5, check_tau_table},
      {"group of mutations", 10, check_groups},
      {"group of mutations (long-running)", 600, check_long_group, true},
      {"bipartite belt", 10, check_belt},
      {"property suites", 600, check_properties},
      {"known discrepancies", 5, check_discrepancies},
  };
  int failed = 0;
  for (const auto& c : all) {
    if (c.long_running ? !with_long : only_long) continue;
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = "failed: " + f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget) {
      ok = false;
      detail += "; over the time budget";
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(36) << c.name << std::fixed
              << std::setprecision(2) << std::right << std::setw(7) << secs << " s  " << detail << std::endl;
  }
  return failed ? 1 : 0;
}
