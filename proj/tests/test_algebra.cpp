#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace hssnt;

TEST_CASE("dimensions by basis enumeration") {
  CHECK(test::space("su11").model.dim_g == 3);
  CHECK(test::space("su11").model.dim_p == 2);
  CHECK(test::space("su:2,2").model.dim_g == 15);
  CHECK(test::space("su:2,2").model.dim_p == 8);
  CHECK(test::space("sp:2").model.dim_g == 10);
  CHECK(test::space("sp:2").model.dim_p == 6);
  // su(p,q): (p+q)^2 - 1 and 2pq
  const Model& m = test::space("su:2,3").model;
  CHECK(m.dim_g == 24);
  CHECK(m.dim_p == 12);
}

TEST_CASE("space spec parsing") {
  CHECK(SpaceSpec::parse("su:2,3").str() == "su:2,3");
  CHECK(SpaceSpec::parse(" sp:3 ").str() == "sp:3");
  CHECK(SpaceSpec::parse("su11").family == Family::SU_11);
  CHECK_THROWS_AS(SpaceSpec::parse("su:3,2"), Error);
  CHECK_THROWS_AS(SpaceSpec::parse("sp:0"), Error);
  CHECK_THROWS_AS(SpaceSpec::parse("so:2,3"), Error);
  try {
    SpaceSpec::parse("su:0,1");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSpec);
  }
}

TEST_CASE("structural identities") {
  for (const char* s : {"su11", "su:1,2", "su:2,3", "sp:3"}) {
    CAPTURE(s);
    const Model& m = test::space(s).model;
    CHECK(jacobi_residual(m) < 1e-12);
    CHECK(grading_residual(m) < 1e-12);
    CHECK(theta_residual(m) < 1e-12);
    CHECK(ad_self_adjoint_residual(m) < 1e-12);
    const Eigen::SelfAdjointEigenSolver<Mat> es(m.inner_gram);
    CHECK(es.eigenvalues().minCoeff() > 0);
  }
}

TEST_CASE("bracket") {
  const Space& s = test::space("su:2,2");
  const Model& m = s.model;
  Rng rng = sample_rng(5, 0);
  const AlgVec X = random_p(m, rng);
  CHECK(norm(m, bracket(m, X, X)) < 1e-14);
  CHECK(norm(m, bracket(m, s.roots.H_tilde[0], s.roots.H_tilde[1])) < 1e-14);
  const AlgVec b = bracket(m, s.roots.H_tilde[0], s.kahler.Zk[0]);
  CHECK(norm(m, b - 2.0 * s.kahler.Zp[0]) < 1e-12);
  CHECK(b.home == Home::p);
  CHECK(bracket(m, X, X).home == Home::k);
}

TEST_CASE("bracket agrees with the matrix commutator") {
  const Model& m = test::space("sp:2").model;
  Rng rng = sample_rng(6, 0);
  const AlgVec X = random_p(m, rng), Y = random_k(m, rng);
  const CMat A = m.to_matrix(X), B = m.to_matrix(Y);
  const CMat C = A * B - B * A;
  CHECK((m.to_matrix(bracket(m, X, Y)) - C).norm() < 1e-12);
}

TEST_CASE("killing invariance and inner product") {
  const Model& m = test::space("su:1,2").model;
  Rng rng = sample_rng(7, 0);
  const AlgVec Z = random_k(m, rng) + random_p(m, rng), X = random_p(m, rng), Y = random_k(m, rng);
  CHECK(std::abs(killing(m, bracket(m, Z, X), Y) + killing(m, X, bracket(m, Z, Y))) < 1e-12);
  CHECK(inner(m, m.zero(), m.zero()) == 0.0);
}

TEST_CASE("su(1,1): |H~_1|^2 = 4/C with C = 1/2") {
  const Space& s = test::space("su11");
  CHECK(s.roots.C == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(inner(s.model, s.roots.H_tilde[0], s.roots.H_tilde[0]) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("ad operator") {
  const Space& s = test::space("su:2,3");
  const Model& m = s.model;
  CHECK(ad_operator(m, m.zero()).cwiseAbs().maxCoeff() == 0.0);
  // ad(v)^2 on p for v in a has eigenvalues alpha(v)^2 with multiplicity m_alpha
  const Vec x = test::vec({0.7, 0.2});
  const AlgVec v = s.roots.from_a_coords(x);
  const Mat A = p_block(m, ad_operator(m, v) * ad_operator(m, v));
  Mat S = m.inner_gram_p * A;
  S = 0.5 * (S + S.transpose()).eval();
  const Vec ev = Eigen::GeneralizedSelfAdjointEigenSolver<Mat>(S, m.inner_gram_p).eigenvalues();
  std::vector<double> expected(size_t(s.roots.rank), 0.0);
  for (const Root& a : s.roots.positive)
    for (int k = 0; k < a.multiplicity; ++k) expected.push_back(a.at(x) * a.at(x));
  std::sort(expected.begin(), expected.end());
  REQUIRE(int(expected.size()) == ev.size());
  for (int i = 0; i < ev.size(); ++i) CHECK(ev(i) == doctest::Approx(expected[size_t(i)]).epsilon(1e-10));
  CHECK(ev.minCoeff() > -1e-12);
}

TEST_CASE("adjoint action of K") {
  const Space& s = test::space("su:2,2");
  const Model& m = s.model;
  Rng rng = sample_rng(8, 0);
  const AlgVec X = random_p(m, rng);
  CHECK(test::gap(adjoint_action(m, m.zero(Home::k), X), X) < 1e-15);
  for (int n = 0; n < 5; ++n) {
    const AlgVec Z = random_k(m, rng);
    const AlgVec Y = adjoint_action(m, Z, X);
    CHECK(std::abs(norm(m, Y) - norm(m, X)) < 1e-10);
    const Mat A = p_block(m, adjoint_exp(m, Z));
    CHECK((A * s.kahler.J0 - s.kahler.J0 * A).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("home tags are enforced") {
  const Model& m = test::space("su11").model;
  AlgVec bad{Vec::Zero(m.dim_g + 1), Home::p};
  CHECK_THROWS_AS(m.check(bad), Error);
  AlgVec star{Vec::Zero(m.dim_g), Home::pstar};
  CHECK_THROWS_AS(m.check(star), Error);
}
