#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbar/meshhom.hpp"
#include "kbar/oracles.hpp"

using namespace kbar;

namespace {

int find_module(const ARData& ar, const Eigen::VectorXi& d) {
  for (int m = 0; m < ar.modules(); ++m)
    if (ar.dim[m] == d) return m;
  REQUIRE(false);
  return -1;
}

Eigen::VectorXi dimvec(std::initializer_list<int> entries) {
  Eigen::VectorXi d(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (int e : entries) d(i++) = e;
  return d;
}

}  // namespace

TEST_CASE("knit counts indecomposables") {
  CHECK(knit(dynkin_quiver({'A', 2})).modules() == 3);
  CHECK(knit(dynkin_quiver({'A', 3})).modules() == 6);
  CHECK(knit(dynkin_quiver({'D', 4})).modules() == 12);
  CHECK(knit(dynkin_quiver({'E', 6})).modules() == 36);
  CHECK_THROWS_AS(knit(parse_quiver("2\n1 2\n1 2\n")), std::invalid_argument);
}

TEST_CASE("knit dim vectors are exactly the positive roots") {
  for (const DynkinType t : {DynkinType{'A', 3}, {'D', 4}, {'D', 5}}) {
    const Quiver q = dynkin_quiver(t);
    const ARData ar = knit(q);
    const auto roots = positive_roots(q);
    REQUIRE(ar.modules() == static_cast<int>(roots.size()));
    for (const auto& r : roots) find_module(ar, r);  // every root appears
  }
}

TEST_CASE("A2 knitting matches the classical picture") {
  const ARData ar = knit(dynkin_quiver({'A', 2}));
  const int p1 = find_module(ar, dimvec({1, 1}));
  const int p2 = find_module(ar, dimvec({0, 1}));
  const int s1 = find_module(ar, dimvec({1, 0}));
  CHECK(ar.proj_vertex[p1] == 1);
  CHECK(ar.proj_vertex[p2] == 2);
  CHECK(ar.inj_vertex[s1] == 1);
  CHECK(ar.inj_vertex[p1] == 2);
  CHECK(ar.tau[s1] == p2);
  CHECK(ar.tau_inv[p2] == s1);
}

TEST_CASE("tau acts as the Coxeter transformation on dim vectors") {
  for (const DynkinType t : {DynkinType{'A', 4}, {'D', 5}, {'E', 6}}) {
    const Quiver q = dynkin_quiver(t);
    const ARData ar = knit(q);
    const IntMatrix phi = coxeter(q);
    for (int m = 0; m < ar.modules(); ++m) {
      if (ar.projective(m)) continue;
      IntVector expect(q.vertices);
      for (int v = 0; v < q.vertices; ++v) expect(v) = ar.dim[m](v);
      expect = phi.transpose() * expect;  // dim vectors transform by Phi^T
      for (int v = 0; v < q.vertices; ++v) CHECK(expect(v) == ar.dim[ar.tau[m]](v));
    }
  }
}

TEST_CASE("hom_mod basics") {
  SUBCASE("Hom(P(v), M) = dim M_v") {
    for (const DynkinType t : {DynkinType{'A', 3}, {'D', 4}}) {
      const ARData ar = knit(dynkin_quiver(t));
      for (int v = 1; v <= ar.q.vertices; ++v)
        for (int m = 0; m < ar.modules(); ++m)
          CHECK(hom_mod(ar, ar.proj_of[v], m) == ar.dim[m](v - 1));
    }
  }
  SUBCASE("A2 values") {
    const ARData ar = knit(dynkin_quiver({'A', 2}));
    const int p1 = find_module(ar, dimvec({1, 1}));
    const int s1 = find_module(ar, dimvec({1, 0}));
    const int s2 = find_module(ar, dimvec({0, 1}));
    CHECK(hom_mod(ar, p1, s1) == 1);
    CHECK(hom_mod(ar, s1, p1) == 0);
    CHECK(ext1_mod(ar, s1, s2) == 1);
    CHECK(ext1_mod(ar, s2, s1) == 0);
  }
  SUBCASE("indecomposables are bricks") {
    for (const DynkinType t : {DynkinType{'A', 3}, {'D', 4}, {'E', 6}}) {
      const ARData ar = knit(dynkin_quiver(t));
      for (int m = 0; m < ar.modules(); ++m) CHECK(hom_mod(ar, m, m) == 1);
    }
  }
  SUBCASE("Euler characteristic identity hom - ext = <dim, dim>") {
    for (const DynkinType t : {DynkinType{'A', 3}, {'D', 4}}) {
      const Quiver q = dynkin_quiver(t);
      const ARData ar = knit(q);
      for (int m = 0; m < ar.modules(); ++m)
        for (int n = 0; n < ar.modules(); ++n) {
          int euler = 0;
          for (int v = 0; v < q.vertices; ++v) euler += ar.dim[m](v) * ar.dim[n](v);
          for (const auto& [s, tt] : q.arrows) euler -= ar.dim[m](s - 1) * ar.dim[n](tt - 1);
          CHECK(hom_mod(ar, m, n) - ext1_mod(ar, m, n) == euler);
        }
    }
  }
  SUBCASE("matches the representation-solve oracle on all pairs") {
    for (const DynkinType t : {DynkinType{'A', 2}, {'A', 3}, {'D', 4}}) {
      const Quiver q = dynkin_quiver(t);
      const ARData ar = knit(q);
      for (int m = 0; m < ar.modules(); ++m)
        for (int n = 0; n < ar.modules(); ++n)
          CHECK(hom_mod(ar, m, n) == hom_oracle(q, ar.dim[m], ar.dim[n]));
    }
  }
}

TEST_CASE("tau_derived") {
  const ARData ar = knit(dynkin_quiver({'A', 3}));
  SUBCASE("tau of a projective drops the shift") {
    for (int v = 1; v <= 3; ++v)
      CHECK(tau_derived(ar, {ar.proj_of[v], 0}) == DObj{ar.inj_of[v], -1});
  }
  SUBCASE("tau of a non-projective keeps the shift") {
    for (int m = 0; m < ar.modules(); ++m)
      if (!ar.projective(m)) CHECK(tau_derived(ar, {m, 5}) == DObj{ar.tau[m], 5});
  }
  SUBCASE("tau^m = Sigma^{-2} for the Coxeter number") {
    for (const DynkinType t : {DynkinType{'A', 2}, {'A', 3}, {'D', 4}}) {
      const ARData a = knit(dynkin_quiver(t));
      const int m = coxeter_number(t);
      for (int u = 0; u < a.modules(); ++u) CHECK(tau_derived_pow(a, {u, 0}, m) == DObj{u, -2});
    }
  }
  SUBCASE("tau and tau^{-1} are inverse") {
    for (int m = 0; m < ar.modules(); ++m)
      for (int k : {-1, 0, 2}) {
        CHECK(tau_inv_derived(ar, tau_derived(ar, {m, k})) == DObj{m, k});
        CHECK(tau_derived(ar, tau_inv_derived(ar, {m, k})) == DObj{m, k});
      }
  }
}

TEST_CASE("hom_derived") {
  const ARData ar = knit(dynkin_quiver({'A', 2}));
  const int s1 = find_module(ar, dimvec({1, 0}));
  const int s2 = find_module(ar, dimvec({0, 1}));
  CHECK(hom_derived(ar, {s1, 0}, {s2, 2}) == 0);   // Ext^2 vanishes, hereditary
  CHECK(hom_derived(ar, {s1, 0}, {s2, -1}) == 0);  // negative Ext vanishes
  CHECK(hom_derived(ar, {s1, 0}, {s2, 1}) == 1);   // Ext^1(S1, S2)
}

TEST_CASE("normalization into the fundamental domain") {
  const ARData ar = knit(dynkin_quiver({'A', 3}));
  for (int m = 0; m < ar.modules(); ++m)
    for (int k = -3; k <= 3; ++k) {
      const CObj c = normalize(ar, {m, k});
      const bool in_domain =
          c.rep.shift == 0 || (c.rep.shift == 1 && ar.projective(c.rep.module));
      CHECK(in_domain);
      CHECK(normalize(ar, c.rep) == c);  // idempotent
      // normalization is an F-twist of the input
      bool twist = false;
      for (int e = -8; e <= 8 && !twist; ++e) twist = (f_twist(ar, {m, k}, e) == c.rep);
      CHECK(twist);
    }
}

TEST_CASE("hom_cluster") {
  const ARData ar = knit(dynkin_quiver({'A', 2}));
  const int s1 = find_module(ar, dimvec({1, 0}));
  const int s2 = find_module(ar, dimvec({0, 1}));
  SUBCASE("identity contributes") {
    for (int m = 0; m < ar.modules(); ++m)
      CHECK(hom_cluster(ar, CObj{{m, 0}}, CObj{{m, 0}}) >= 1);
  }
  SUBCASE("pentagon values") {
    // Hom_C(S1, S2) = 0: the only candidate term Ext^1(S1, tau^{-1}S2) =
    // Ext^1(S1, S1) vanishes in A2. The nonzero hom goes to Sigma S2 instead.
    CHECK(hom_cluster(ar, CObj{{s1, 0}}, CObj{{s2, 0}}) == 0);
    CHECK(hom_cluster(ar, CObj{{s1, 0}}, normalize(ar, {s2, 1})) == 1);
  }
  SUBCASE("tau invariance") {
    const ARData a3 = knit(dynkin_quiver({'A', 3}));
    for (int m = 0; m < a3.modules(); ++m)
      for (int n = 0; n < a3.modules(); ++n) {
        const CObj x{{m, 0}}, y{{n, 0}};
        CHECK(hom_cluster(a3, x, y) ==
              hom_cluster(a3, tau_cluster(a3, x), tau_cluster(a3, y)));
      }
  }
  SUBCASE("window [-2,2] already carries every term") {
    for (const DynkinType t : {DynkinType{'A', 3}, {'D', 4}}) {
      const ARData a = knit(dynkin_quiver(t));
      std::vector<CObj> objs;
      for (int m = 0; m < a.modules(); ++m) objs.push_back(CObj{{m, 0}});
      for (int v = 1; v <= a.q.vertices; ++v) objs.push_back(CObj{{a.proj_of[v], 1}});
      for (const CObj& x : objs)
        for (const CObj& y : objs)
          CHECK(hom_cluster(a, x, y) == hom_cluster_window(a, x, y, 5));
    }
  }
}

TEST_CASE("coxeter numbers") {
  CHECK(coxeter_number({'A', 4}) == 5);
  CHECK(coxeter_number({'D', 6}) == 10);
  CHECK(coxeter_number({'E', 7}) == 18);
  CHECK(coxeter_number({'E', 6}) == 12);
}

TEST_CASE("lambda") {
  SUBCASE("q = 1 is the plain cluster hom") {
    const ARData ar = knit(dynkin_quiver({'A', 3}));
    for (int m = 0; m < ar.modules(); ++m)
      for (int n = 0; n < ar.modules(); ++n)
        CHECK(lambda(ar, CObj{{m, 0}}, 1, CObj{{n, 0}}) ==
              hom_cluster(ar, CObj{{m, 0}}, CObj{{n, 0}}));
  }
  SUBCASE("marked-orbit values match the tables") {
    CHECK(dynkin_lambda_table({'A', 3}).values[0][0] == 2);
    CHECK(dynkin_lambda_table({'E', 7}).values[0][0] == 6);
    const DynkinLambda d6 = dynkin_lambda_table({'D', 6});
    CHECK(d6.values == std::vector<std::vector<int>>{{6, -4}, {-4, 6}});
    const DynkinLambda d5 = dynkin_lambda_table({'D', 5});
    CHECK(d5.values == std::vector<std::vector<int>>{{4, -4}, {-4, 4}});
    CHECK_THROWS_AS(dynkin_lambda_table({'A', 4}), std::invalid_argument);
    CHECK_THROWS_AS(dynkin_lambda_table({'E', 6}), std::invalid_argument);
  }
  SUBCASE("mu partial sums") {
    const DynkinLambda a3 = dynkin_lambda_table({'A', 3});
    CHECK(a3.mu[0][0] == std::vector<int>{1, 1, 0, 0});
    const DynkinLambda e7 = dynkin_lambda_table({'E', 7});
    CHECK(e7.mu[0][0] == std::vector<int>{1, 3, 2, 0});
  }
  SUBCASE("D_n hom pattern along the tau orbit") {
    const int n = 6;
    const ARData ar = knit(dynkin_quiver({'D', n}));
    const DObj m1{ar.inj_of[1], 0}, m2{ar.inj_of[2], 0};
    for (int i = -2 * n; i <= 2 * n; ++i) {
      const bool same_nonzero = hom_derived(ar, m1, tau_derived_pow(ar, m1, i)) != 0;
      CHECK(same_nonzero == (i % 2 == 0 && -(n - 2) <= i && i <= 0));
      const bool cross_nonzero = hom_derived(ar, m1, tau_derived_pow(ar, m2, i)) != 0;
      CHECK(cross_nonzero == (((i % 2) + 2) % 2 == 1 && 1 <= i && i <= n - 1));
    }
  }
}

TEST_CASE("mesh additivity of the marked lambda forms") {
  for (const DynkinType t : {DynkinType{'A', 3}, {'D', 4}, {'D', 5}}) {
    const ARData ar = knit(dynkin_quiver(t));
    const int q = coxeter_number(t) + 2;
    for (int v : marked_vertices(t))
      CHECK(ar_triangle_additivity_check(ar, CObj{{ar.inj_of[v], 0}}, q));
  }
  SUBCASE("odd q falls back to the mod-2 check") {
    const ARData ar = knit(dynkin_quiver({'A', 3}));
    // tau^q U = F^m U needs q = 0 mod the orbit data; q = m + 2 + m works too
    const int m = coxeter_number({'A', 3});
    CHECK(ar_triangle_additivity_check(ar, CObj{{ar.inj_of[3], 0}}, 2 * (m + 2)));
  }
  SUBCASE("hypothesis violations are reported") {
    const ARData ar = knit(dynkin_quiver({'A', 3}));
    CHECK_THROWS_AS(ar_triangle_additivity_check(ar, CObj{{ar.inj_of[3], 0}}, 3),
                    std::invalid_argument);
  }
}
