#include <doctest.h>

#include <array>
#include <vector>

#include "coxrefl/divisibility.hpp"

using namespace coxrefl;

TEST_CASE("parsing the line format") {
  CoxeterMatrix m = parse_coxeter_matrix("rank 3\nm 1 2 3\nm 1 3 5\nm 2 3 5");
  CHECK(m.rank() == 3);
  CHECK(m.order(1, 2).value() == 3);
  CHECK(m.order(3, 1).value() == 5);
  CHECK(m.order(2, 3).value() == 5);

  CoxeterMatrix d2 = parse_coxeter_matrix("rank 2");
  CHECK_FALSE(d2.order(1, 2).is_finite());

  SUBCASE("comments and whitespace") {
    CoxeterMatrix c = parse_coxeter_matrix(
        "# free product of two dihedrals\nrank 4\n  m 1 2 7 # big edge\n\nm 3 4 inf\n");
    CHECK(c.order(1, 2).value() == 7);
    CHECK_FALSE(c.order(3, 4).is_finite());
    CHECK_FALSE(c.order(1, 3).is_finite());
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_coxeter_matrix("rank 3\nm 1 2 4"), ParseError);
  CHECK_THROWS_WITH_AS(parse_coxeter_matrix("rank 3\nm 1 2 4"),
                       doctest::Contains("not odd-angled"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_matrix("rank 2\nm 1 3 5"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_matrix("rank 2\nm 1 2 5\nm 2 1 5"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_matrix("m 1 2 3"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_matrix("rank 2\nm 1 2 1000001"), ParseError);

  try {
    parse_coxeter_matrix("rank 3\nm 1 2 4");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("round trip through the text format") {
  CoxeterMatrix m = triangle_system(3, 0, 25);
  CoxeterMatrix back = parse_coxeter_matrix(format_coxeter_matrix(m));
  CHECK(back == m);
}

TEST_CASE("least prime divisor") {
  CHECK(least_prime_divisor(15) == 3);
  CHECK(least_prime_divisor(25) == 5);
  CHECK(least_prime_divisor(49) == 7);
  CHECK(least_prime_divisor(3) == 3);
  CHECK(least_prime_divisor(9991) == 97);  // 97 * 103

  SUBCASE("divides, is prime, and nothing smaller divides") {
    for (int n = 3; n <= 2001; n += 2) {
      int p = least_prime_divisor(n);
      CHECK(n % p == 0);
      for (int q = 2; q < p; ++q) CHECK(n % q != 0);
      CHECK(least_prime_divisor(p) == p);
    }
  }
}

TEST_CASE("divisibility diagram construction") {
  CoxeterMatrix m = triangle_system(15, 0, 25);
  DivisibilityDiagram d = DivisibilityDiagram::of(m);
  CHECK(d.label(1, 2) == 3);
  CHECK_FALSE(d.has_edge(1, 3));
  CHECK(d.label(2, 3) == 5);
  CHECK(d.simple_edge(1, 2));
  CHECK(d.multiple_edge(2, 3));

  SUBCASE("labels divide the orders and are least") {
    const std::vector<std::array<int, 3>> finite_pairs = {{1, 2, 15}, {2, 3, 25}};
    for (auto [i, j, order] : finite_pairs) {
      int label = *d.label(i, j);
      CHECK(order % label == 0);
      for (int p = 3; p < label; p += 2) CHECK(order % p != 0);
    }
  }

  SUBCASE("rebuilding is identical") {
    CHECK(DivisibilityDiagram::of(m) == d);
  }

  SUBCASE("rank 1") {
    DivisibilityDiagram one = DivisibilityDiagram::of(CoxeterMatrix(1));
    CHECK(one.order() == 1);
    CHECK(one.edge_count() == 0);
  }
}

TEST_CASE("connected components") {
  CoxeterMatrix m = triangle_system(3, 0, 0);
  auto parts = connected_components(DivisibilityDiagram::of(m));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].vertices == std::vector<int>{1, 2});
  CHECK(parts[1].vertices == std::vector<int>{3});

  auto one = connected_components(DivisibilityDiagram::of(triangle_system(5, 5, 3)));
  CHECK(one.size() == 1);

  auto four = connected_components(DivisibilityDiagram::of(CoxeterMatrix(4)));
  CHECK(four.size() == 4);

  SUBCASE("partition properties") {
    CoxeterMatrix big(5);
    big.set_order(1, 4, Order::finite(9));
    big.set_order(2, 3, Order::finite(5));
    auto components = connected_components(DivisibilityDiagram::of(big));
    std::vector<bool> covered(6, false);
    for (const auto& comp : components)
      for (int v : comp.vertices) {
        CHECK_FALSE(covered[v]);
        covered[v] = true;
      }
    for (int v = 1; v <= 5; ++v) CHECK(covered[v]);
    // no cross edges
    DivisibilityDiagram d = DivisibilityDiagram::of(big);
    for (std::size_t x = 0; x < components.size(); ++x)
      for (std::size_t y = x + 1; y < components.size(); ++y)
        for (int vx : components[x].vertices)
          for (int vy : components[y].vertices) CHECK_FALSE(d.has_edge(vx, vy));
  }
}

TEST_CASE("connected subdiagram enumeration") {
  DivisibilityDiagram triangle = DivisibilityDiagram::of(triangle_system(5, 3, 5));
  auto subs = connected_subdiagrams(triangle, 2);
  CHECK(subs == std::vector<std::vector<int>>{
                    {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}});

  SUBCASE("path skips the absent pair") {
    DivisibilityDiagram path = DivisibilityDiagram::of(triangle_system(3, 0, 3));
    auto all = connected_subdiagrams(path, 3);
    CHECK(all == std::vector<std::vector<int>>{
                     {1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}});
  }

  SUBCASE("single vertex") {
    auto one = connected_subdiagrams(DivisibilityDiagram(1), 1);
    CHECK(one == std::vector<std::vector<int>>{{1}});
  }

  SUBCASE("complete diagram count equals subsets up to the size bound") {
    CoxeterMatrix complete(4);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) complete.set_order(i, j, Order::finite(3));
    DivisibilityDiagram d = DivisibilityDiagram::of(complete);
    CHECK(connected_subdiagrams(d, 2).size() == 4 + 6);
    CHECK(connected_subdiagrams(d, 4).size() == 15);
  }
}
