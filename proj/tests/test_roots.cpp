#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace hssnt;

TEST_CASE("root system types match the classification table") {
  CHECK(test::space("su11").roots.type_name() == "C1");
  CHECK(test::space("su:1,2").roots.type_name() == "BC1");
  CHECK(test::space("su:2,2").roots.type_name() == "C2");
  CHECK(test::space("su:2,3").roots.type_name() == "BC2");
  CHECK(test::space("sp:2").roots.type_name() == "C2");
  CHECK(test::space("sp:3").roots.type_name() == "C3");
}

TEST_CASE("su(1,1) has a single root 2e1 of multiplicity 1") {
  const RootDatum& d = test::space("su11").roots;
  CHECK(d.rank == 1);
  REQUIRE(d.positive.size() == 1);
  CHECK(d.positive[0].label == "2e1");
  CHECK(d.positive[0].multiplicity == 1);
}

TEST_CASE("su(2,3) multiplicities") {
  const RootDatum& d = test::space("su:2,3").roots;
  for (const Root& a : d.positive) {
    CAPTURE(a.label);
    const int expected = a.kind == RootKind::gamma ? 1 : 2;
    CHECK(a.multiplicity == expected);
  }
  // dim p = rank + sum of multiplicities
  int total = d.rank;
  for (const Root& a : d.positive) total += a.multiplicity;
  CHECK(total == test::space("su:2,3").model.dim_p);
}

TEST_CASE("strongly orthogonal roots give an orthogonal basis of a") {
  for (const char* s : {"su11", "su:2,2", "sp:2", "su:2,3", "sp:3"}) {
    CAPTURE(s);
    const Space& sp = test::space(s);
    const RootDatum& d = sp.roots;
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j)
        CHECK(inner(sp.model, d.H[size_t(i)], d.H[size_t(j)]) ==
              doctest::Approx(i == j ? d.C : 0.0).epsilon(1e-10).scale(1.0));
    const RootChecks rc = root_checks(sp.model, d);
    CHECK(rc.reconstruction < 1e-10);
    CHECK(rc.root_vector_vs_covector < 1e-10);
    CHECK(rc.kp_norms < 1e-10);
    CHECK(rc.grading < 1e-10);
  }
}

TEST_CASE("C = 1/2 on su(1,1), 1/(p+q) on su(p,q), 1/(n+1) on sp(n,R)") {
  CHECK(test::space("su11").roots.C == doctest::Approx(0.5));
  CHECK(test::space("su:2,3").roots.C == doctest::Approx(0.2));
  CHECK(test::space("sp:3").roots.C == doctest::Approx(0.25));
}

TEST_CASE("root vector relations [H, X^k] = a(H) X^p, [H, X^p] = a(H) X^k") {
  const Space& s = test::space("su:2,3");
  const Model& m = s.model;
  const Vec x = test::vec({0.9, -0.3});
  const AlgVec H = s.roots.from_a_coords(x);
  for (const Root& a : s.roots.positive)
    for (size_t b = 0; b < a.p_basis.size(); ++b) {
      CHECK(norm(m, bracket(m, H, a.k_basis[b]) - a.at(x) * a.p_basis[b]) < 1e-12);
      CHECK(norm(m, bracket(m, H, a.p_basis[b]) - a.at(x) * a.k_basis[b]) < 1e-12);
    }
}

TEST_CASE("reflections") {
  const Space& s = test::space("su:2,2");
  const Model& m = s.model;
  const RootDatum& d = s.roots;
  CHECK(norm(m, weyl_reflect(m, d, test::ivec({2, 0}), d.H[0]) + d.H[0]) < 1e-10);
  CHECK(norm(m, weyl_reflect(m, d, test::ivec({1, -1}), d.H[0]) - d.H[1]) < 1e-10);
  CHECK(norm(m, weyl_reflect(m, d, test::ivec({1, 1}), d.H[0]) + d.H[1]) < 1e-10);
  // fixed hyperplane of e1 - e2
  const AlgVec fixed = d.H[0] + d.H[1];
  CHECK(norm(m, weyl_reflect(m, d, test::ivec({1, -1}), fixed) - fixed) < 1e-10);
  CHECK_THROWS_AS(weyl_reflect(m, d, test::ivec({3, 0}), d.H[0]), Error);
}

TEST_CASE("reflection words as signed permutations") {
  const Space& s = test::space("sp:2");
  const RootDatum& d = s.roots;
  const SignedPermutation id = weyl_signed_permutation(s.model, d, {});
  CHECK(id.perm == std::vector<int>{0, 1});
  CHECK(id.sign == std::vector<int>{1, 1});
  const SignedPermutation t = weyl_signed_permutation(s.model, d, {test::ivec({1, -1})});
  CHECK(t.perm == std::vector<int>{1, 0});
  CHECK(t.sign == std::vector<int>{1, 1});
  const SignedPermutation u = weyl_signed_permutation(s.model, d, {test::ivec({1, 1})});
  CHECK(u.perm == std::vector<int>{1, 0});
  CHECK(u.sign == std::vector<int>{-1, -1});
  CHECK(u.residual < 1e-10);
}

TEST_CASE("Weyl elements act on a as the reflections") {
  const Space& s = test::space("su:2,3");
  const Model& m = s.model;
  const RootDatum& d = s.roots;
  for (const Root& a : d.positive) {
    CAPTURE(a.label);
    const AlgVec Z = weyl_element(m, d, a.e);
    for (const AlgVec& H : d.H) CHECK(norm(m, adjoint_action(m, Z, H) - weyl_reflect(m, d, a.e, H)) < 1e-9);
  }
}
