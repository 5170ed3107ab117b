#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kbar/quiver.hpp"

using namespace kbar;

namespace {

Quiver random_acyclic(std::mt19937_64& rng, int max_n, int max_arrows) {
  Quiver q;
  q.vertices = 1 + static_cast<int>(rng() % max_n);
  std::vector<int> order(q.vertices);
  for (int i = 0; i < q.vertices; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  const int arrows = static_cast<int>(rng() % (max_arrows + 1));
  for (int k = 0; k < arrows && q.vertices >= 2; ++k) {
    const int i = static_cast<int>(rng() % (q.vertices - 1));
    const int j = i + 1 + static_cast<int>(rng() % (q.vertices - 1 - i));
    q.arrows.emplace_back(order[i], order[j]);
  }
  return q;
}

Quiver kronecker(int arrows) {
  Quiver q;
  q.vertices = 2;
  for (int i = 0; i < arrows; ++i) q.arrows.emplace_back(1, 2);
  return q;
}

}  // namespace

TEST_CASE("parse_quiver") {
  SUBCASE("kronecker with comments and CRLF") {
    const Quiver q = parse_quiver("# two vertices\r\n2\r\n1 2  # first\r\n1 2\r\n");
    CHECK(q.vertices == 2);
    REQUIRE(q.arrows.size() == 2);
    CHECK(q.arrows[0] == std::pair{1, 2});
  }
  SUBCASE("single vertex") {
    const Quiver q = parse_quiver("1\n");
    CHECK(q.vertices == 1);
    CHECK(q.arrows.empty());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_quiver("2\n1 1\n"), std::invalid_argument);   // loop
    CHECK_THROWS_AS(parse_quiver("2\n1 3\n"), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(parse_quiver("2\n1\n"), std::invalid_argument);     // malformed
    CHECK_THROWS_AS(parse_quiver("2\n1 2 3\n"), std::invalid_argument); // trailing token
    CHECK_THROWS_AS(parse_quiver("# nothing\n"), std::invalid_argument);
  }
}

TEST_CASE("adjacency") {
  CHECK(same_matrix(adjacency(kronecker(2)), int_matrix(2, 2, {0, 2, 0, 0})));
  CHECK(same_matrix(adjacency(parse_quiver("2\n1 2\n")), int_matrix(2, 2, {0, 1, 0, 0})));
  CHECK(same_matrix(adjacency(parse_quiver("3\n")), IntMatrix::Zero(3, 3)));
}

TEST_CASE("cartan") {
  CHECK(same_matrix(cartan(parse_quiver("2\n1 2\n")), int_matrix(2, 2, {1, 1, 0, 1})));
  CHECK(same_matrix(cartan(kronecker(2)), int_matrix(2, 2, {1, 2, 0, 1})));
  CHECK(same_matrix(cartan(parse_quiver("1\n")), int_matrix(1, 1, {1})));
  CHECK_THROWS_AS(cartan(parse_quiver("2\n1 2\n2 1\n")), std::invalid_argument);
}

TEST_CASE("coxeter") {
  SUBCASE("single vertex") {
    CHECK(same_matrix(coxeter(parse_quiver("1\n")), int_matrix(1, 1, {-1})));
  }
  SUBCASE("A2 has order 3") {
    const IntMatrix phi = coxeter(parse_quiver("2\n1 2\n"));
    CHECK(same_matrix(phi, int_matrix(2, 2, {0, 1, -1, -1})));
    CHECK(same_matrix(IntMatrix(phi * phi * phi), IntMatrix::Identity(2, 2)));
    CHECK_FALSE(same_matrix(phi, IntMatrix::Identity(2, 2)));
  }
  SUBCASE("Kronecker has infinite order") {
    const IntMatrix phi = coxeter(kronecker(2));
    // characteristic polynomial (x - 1)^2: trace 2, det 1
    CHECK(phi(0, 0) + phi(1, 1) == 2);
    CHECK(determinant(phi) == 1);
    const IntMatrix nil = phi - IntMatrix::Identity(2, 2);
    CHECK(is_zero_matrix(IntMatrix(nil * nil)));  // unipotent, not identity
    IntMatrix pw = phi;
    for (int k = 1; k <= 12; ++k) {
      CHECK_FALSE(same_matrix(pw, IntMatrix::Identity(2, 2)));
      pw = pw * phi;
    }
  }
}

TEST_CASE("kbar_hereditary on fixed quivers") {
  CHECK(kbar_hereditary(dynkin_quiver({'A', 2})) == AbelianGroup{0, {}});
  CHECK(kbar_hereditary(dynkin_quiver({'A', 3})) == AbelianGroup{1, {}});
  CHECK(kbar_hereditary(dynkin_quiver({'D', 4})) == AbelianGroup{2, {}});
  CHECK(kbar_hereditary(kronecker(2)) == AbelianGroup{0, {Int(2), Int(2)}});
  CHECK(kbar_hereditary(Quiver{}) == AbelianGroup{0, {}});  // empty quiver
  CHECK(kbar_hereditary(parse_quiver("1\n")) == AbelianGroup{1, {}});
}

TEST_CASE("reduce_source_sink") {
  SUBCASE("A3 reduces to a single vertex in one step") {
    const ReductionResult r = reduce_source_sink(dynkin_quiver({'A', 3}));
    CHECK(r.reduced.vertices == 1);
    CHECK(r.reduced.arrows.empty());
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].arrow == std::pair{1, 2});
    CHECK(r.trace[0].source_arrow);
    CHECK(r.kept == std::vector<int>{3});
  }
  SUBCASE("A2 reduces to the empty quiver") {
    const ReductionResult r = reduce_source_sink(dynkin_quiver({'A', 2}));
    CHECK(r.reduced.vertices == 0);
    CHECK(r.trace.size() == 1);
  }
  SUBCASE("outward D4 star: one sink-arrow removal leaves two isolated vertices") {
    const Quiver star = parse_quiver("4\n1 2\n1 3\n1 4\n");
    const ReductionResult r = reduce_source_sink(star);
    REQUIRE(r.trace.size() == 1);
    CHECK_FALSE(r.trace[0].source_arrow);
    CHECK(r.reduced.vertices == 2);
    CHECK(r.reduced.arrows.empty());
    CHECK(kbar_hereditary(r.reduced) == AbelianGroup{2, {}});
    CHECK(kbar_hereditary(star) == kbar_hereditary(dynkin_quiver({'D', 4})));
  }
  SUBCASE("parallel arrows are never source- or sink-arrows") {
    CHECK_FALSE(reduce_once(kronecker(2)).has_value());
  }
  SUBCASE("one reduction step preserves the group (random)") {
    std::mt19937_64 rng(2024);
    int eligible = 0;
    for (int it = 0; it < 120; ++it) {
      const Quiver q = random_acyclic(rng, 7, 10);
      if (const auto step = reduce_once(q)) {
        ++eligible;
        CHECK(kbar_hereditary(q) == kbar_hereditary(step->reduced));
      }
    }
    CHECK(eligible > 40);
  }
}

TEST_CASE("build_example_family") {
  CHECK(kbar_hereditary(build_example_family(1, {})) == AbelianGroup{1, {}});
  CHECK(kbar_hereditary(build_example_family(0, {2})) == AbelianGroup{0, {Int(2), Int(2)}});
  CHECK(kbar_hereditary(build_example_family(2, {2, 4})) ==
        AbelianGroup{2, {Int(2), Int(2), Int(4), Int(4)}});
  CHECK(kbar_hereditary(build_example_family(0, {})) == AbelianGroup{0, {}});
  CHECK_THROWS_AS(build_example_family(1, {4, 2}), std::invalid_argument);
  CHECK_THROWS_AS(build_example_family(1, {0}), std::invalid_argument);
}

TEST_CASE("dynkin_quiver shapes") {
  const Quiver d4 = dynkin_quiver({'D', 4});
  CHECK(d4.arrows == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 4}});
  const Quiver e7 = dynkin_quiver({'E', 7});
  CHECK(e7.arrows ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
  CHECK_THROWS_AS(dynkin_quiver({'D', 3}), std::invalid_argument);
  CHECK_THROWS_AS(dynkin_quiver({'E', 9}), std::invalid_argument);

  CHECK(recognize_dynkin(dynkin_quiver({'A', 5})) == DynkinType{'A', 5});
  CHECK(recognize_dynkin(dynkin_quiver({'D', 6})) == DynkinType{'D', 6});
  CHECK(recognize_dynkin(dynkin_quiver({'E', 8})) == DynkinType{'E', 8});
  CHECK_FALSE(recognize_dynkin(kronecker(2)).has_value());
  // star with three arms of two edges is affine E6, not Dynkin
  CHECK_FALSE(recognize_dynkin(parse_quiver("7\n1 2\n2 7\n3 4\n4 7\n5 6\n6 7\n")).has_value());
}

TEST_CASE("kbar is orientation independent on trees") {
  SUBCASE("all orientations of A4") {
    const AbelianGroup expected = kbar_hereditary(dynkin_quiver({'A', 4}));
    for (int mask = 0; mask < 8; ++mask) {
      Quiver q;
      q.vertices = 4;
      for (int e = 0; e < 3; ++e) {
        if (mask & (1 << e))
          q.arrows.emplace_back(e + 2, e + 1);
        else
          q.arrows.emplace_back(e + 1, e + 2);
      }
      CHECK(kbar_hereditary(q) == expected);
    }
  }
  SUBCASE("all orientations of D4") {
    const AbelianGroup expected = kbar_hereditary(dynkin_quiver({'D', 4}));
    const std::pair<int, int> edges[3] = {{1, 3}, {2, 3}, {3, 4}};
    for (int mask = 0; mask < 8; ++mask) {
      Quiver q;
      q.vertices = 4;
      for (int e = 0; e < 3; ++e) {
        auto [u, v] = edges[e];
        if (mask & (1 << e)) std::swap(u, v);
        q.arrows.emplace_back(u, v);
      }
      CHECK(kbar_hereditary(q) == expected);
    }
  }
}

TEST_CASE("properties on random acyclic quivers") {
  std::mt19937_64 rng(91);
  for (int it = 0; it < 120; ++it) {
    const Quiver q = random_acyclic(rng, 8, 12);
    // kbar_hereditary already asserts coker(1 + Phi) == coker(B - B^T).
    const AbelianGroup g = kbar_hereditary(q);
    REQUIRE(g.torsion.size() % 2 == 0);
    for (std::size_t i = 0; i + 1 < g.torsion.size(); i += 2)
      CHECK(g.torsion[i] == g.torsion[i + 1]);
  }
}

TEST_CASE("tree quivers have free kbar") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 60; ++it) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Quiver q;
    q.vertices = n;
    for (int v = 2; v <= n; ++v) {
      const int parent = 1 + static_cast<int>(rng() % (v - 1));
      if (rng() & 1)
        q.arrows.emplace_back(parent, v);
      else
        q.arrows.emplace_back(v, parent);
    }
    CHECK(kbar_hereditary(q).torsion.empty());
  }
}
