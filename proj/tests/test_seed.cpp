#include <random>

#include "doctest.h"
#include "quivermut/errors.hpp"
#include "quivermut/seed.hpp"
#include "test_helpers.hpp"

using namespace qmt;

namespace {
std::vector<std::string> strs(const Seed& s, const std::vector<RationalFunction>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(s.render(f));
  return out;
}
Seed A2() { return Seed(EM({{0, 1}, {-1, 0}})); }
Seed S3() { return Seed(EM({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}})); }
}  // namespace

TEST_CASE("A2 transcript") {
  auto s = A2();
  auto before = s;
  auto mats = s.mutation_matrices({0, 1, 0, 1, 0});
  auto b = EM({{0, 1}, {-1, 0}}), nb = EM({{0, -1}, {1, 0}});
  CHECK(mats == std::vector<ExchangeMatrix>{b, nb, b, nb, b, nb});
  CHECK(strs(s, s.mutation_variables({0, 1, 0, 1, 0})) ==
        std::vector<std::string>{"(x1 + 1)/x0", "(x0 + x1 + 1)/(x0*x1)", "(x0 + 1)/x1", "x0", "x1"});
  CHECK(s.mutation_seeds({0, 1, 0, 1, 0}).size() == 5);
  CHECK(s.mutation_seeds({}).empty());
  CHECK(s == before);
  CHECK(s.mutate({0, 1}).cluster_strings() == std::vector<std::string>{"(x1 + 1)/x0", "(x0 + x1 + 1)/(x0*x1)"});
  // period ten in single mutations
  auto t = s.mutate({0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(t == s);
  CHECK_FALSE(s.mutate({0, 1, 0, 1, 0}) == s);
}

TEST_CASE("rank-3 seed and numeric clusters") {
  auto s = S3();
  CHECK(s.description() == "A seed for a cluster algebra of rank 3");
  CHECK(s.mutate({0, 1, 0}).cluster_strings() ==
        std::vector<std::string>{"(x0*x2 + 1)/x1", "(x0*x2 + x1 + 1)/(x0*x1)", "x2"});
  s.mutate_in_place({0, 1, 0});
  CHECK(s.matrix() == EM({{0, -1, 1}, {1, 0, 0}, {-1, 0, 0}}));
  s.reset_cluster();
  CHECK(s.matrix() == EM({{0, -1, 1}, {1, 0, 0}, {-1, 0, 0}}));
  s.set_cluster(std::vector<std::string>{"7", "11", "13"});
  CHECK(s.cluster_strings() == std::vector<std::string>{"7", "11", "13"});
  s.mutate_in_place({0, 1, 2, 0});
  CHECK(s.cluster_strings() == std::vector<std::string>{"8/11", "115/77", "192/1001"});
  CHECK(s.matrix() == EM({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  s.reset_cluster();
  CHECK(s.cluster_strings() == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK_THROWS_AS(s.set_cluster(std::vector<std::string>{"1", "2"}), InvalidInput);
  CHECK_THROWS_AS(s.set_cluster(std::vector<std::string>{"1", "2", "y0"}), ParseError);
  CHECK_THROWS_AS(s.set_cluster(std::vector<RationalFunction>{RationalFunction(2), RationalFunction(2),
                                                               RationalFunction(2)}),
                  InvalidInput);
}

TEST_CASE("arbitrary initial values") {
  auto s = Seed(EM({{0, -1, 1}, {1, 0, 0}, {-1, 0, 0}}));
  s = s.mutate({0, 1, 2, 0});
  CHECK(s.matrix() == EM({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  s.set_cluster(std::vector<std::string>{"x0 + x1", "x1^2", "x0/x2"});
  s.mutate_in_place({0, 1, 0, 2, 0});
  CHECK(s.cluster_strings() ==
        std::vector<std::string>{"(x1^2 + 1)/(x0 + x1)", "(x0*x1^2 + x0*x2 + x1*x2 + x0)/(x0*x1^2*x2 + x1^3*x2)",
                                 "(x0*x1^2*x2 + x1^3*x2 + x0*x1^2 + x0*x2 + x1*x2 + x0)/(x0^2*x1^2 + x0*x1^3)"});
}

TEST_CASE("principal extension transcript") {
  auto s3 = Seed(EM({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  auto sp3 = s3.principal_extension();
  CHECK(s3.m() == 0);
  CHECK(sp3.description() == "A seed for a cluster algebra of rank 3 with 3 frozen variables");
  CHECK(sp3.matrix() == EM({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3));
  CHECK(sp3.cluster_strings() == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK(strs(sp3, sp3.frozen()) == std::vector<std::string>{"y0", "y1", "y2"});
  auto seeds = sp3.mutation_seeds({0, 1, 0, 2});
  CHECK(strs(sp3, sp3.mutation_variables({0, 1, 0, 2})) ==
        std::vector<std::string>{"(x1 + y0)/x0", "(x0*y0*y1 + x1*x2 + x2*y0)/(x0*x1)", "(x0*y1 + x2)/x1",
                                 "(x0*x1*y0*y1*y2 + x0*y0*y1 + x1*x2 + x2*y0)/(x0*x1*x2)"});
  sp3.mutate_in_place({0, 1, 0, 2});
  CHECK(sp3 == seeds.back());
  auto spr3 = sp3.principal_restriction();
  CHECK(spr3.m() == 0);
  CHECK(spr3.mutate(0).cluster_strings()[0] == "(x0*y0*y1 + x0*x1 + x1*x2 + x2*y0)/(x0^2*y1 + x0*x2)");
  CHECK(s3.principal_extension().principal_restriction() == s3);
  CHECK_THROWS_AS(sp3.principal_extension(), InvalidInput);
  CHECK_THROWS_AS(sp3.mutate(3), FrozenIndex);
  CHECK_THROWS_AS(sp3.mutate(6), IndexOutOfRange);
}

TEST_CASE("accessors") {
  auto s = A2();
  CHECK(s.render(s.x(0)) == "x0");
  CHECK_THROWS_AS(s.x(2), IndexOutOfRange);
  CHECK_THROWS_AS(s.y(0), IndexOutOfRange);
  auto copy = s.b_matrix();
  CHECK(copy == s.matrix());
  CHECK(&copy != &s.matrix());
  CHECK(s.quiver() == Quiver(s.matrix()));
  CHECK(Seed(s.quiver()) == s);
  CHECK(s.ground_field() == "Fraction Field of Multivariate Polynomial Ring in x0, x1 over Rational Field");
  s.set_mutation_type("['A', 2]");
  CHECK(s.description() == "A seed for a cluster algebra of rank 2 of type ['A', 2]");
  CHECK(s.mutate(0).mutation_type() == s.mutation_type());
}

TEST_CASE("property: a word followed by its reverse returns to the start") {
  std::mt19937_64 rng(12);
  std::vector<ExchangeMatrix> bs = {EM({{0, 1, 0}, {-1, 0, -1}, {0, 2, 0}}),
                                    EM({{0, 1, 0, 0}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {0, 0, -1, 0}})};
  for (const auto& b : bs) {
    Seed s(b);
    for (int t = 0; t < 10; ++t) {
      std::vector<std::size_t> w;
      for (int i = 0; i < 6; ++i) w.push_back(rng() % b.n());
      auto r = w;
      std::reverse(r.begin(), r.end());
      CHECK(s.mutate(w).mutate(r) == s);
    }
  }
}
