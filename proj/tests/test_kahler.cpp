#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace hssnt;

namespace {

void all_small(const std::vector<Residual>& rs, double tol) {
  for (const Residual& r : rs) {
    if (r.name.find("1/min") != std::string::npos) continue;
    CAPTURE(r.name);
    CHECK(r.value < tol);
  }
}

}  // namespace

TEST_CASE("su(1,1): zeta = diag(-i, i)/2") {
  const Space& s = test::space("su11");
  CMat expected = CMat::Zero(2, 2);
  expected(0, 0) = std::complex<double>(0, -0.5);
  expected(1, 1) = std::complex<double>(0, 0.5);
  CHECK((s.model.to_matrix(s.kahler.zeta) - expected).norm() < 1e-12);
}

TEST_CASE("zeta is central in k and ad(zeta)^2 = -1 on p") {
  for (const char* name : {"su11", "su:1,2", "su:2,2", "sp:2", "sp:3"}) {
    CAPTURE(name);
    const Space& s = test::space(name);
    const Model& m = s.model;
    Rng rng = sample_rng(11, 0);
    CHECK(norm(m, bracket(m, s.kahler.zeta, random_k(m, rng))) < 1e-12);
    const Mat J = p_block(m, ad_operator(m, s.kahler.zeta));
    CHECK((J * J + Mat::Identity(m.dim_p, m.dim_p)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("J0 H~_i = 2 Z_i^p and omega0 values") {
  const Space& s = test::space("su:2,2");
  const Model& m = s.model;
  for (int i = 0; i < s.roots.rank; ++i) {
    const AlgVec& H = s.roots.H_tilde[size_t(i)];
    CHECK(norm(m, apply_p(m, s.kahler.J0, H) - 2.0 * s.kahler.Zp[size_t(i)]) < 1e-12);
  }
  Rng rng = sample_rng(12, 0);
  const AlgVec u = random_p(m, rng);
  CHECK(std::abs(omega(s.kahler.omega0, m, u, u)) < 1e-12);
  // omega0(u, w) = <J0 u, w> makes omega0(H~, J0 H~) = |J0 H~|^2 = +4/C
  const AlgVec& H = s.roots.H_tilde[0];
  CHECK(omega(s.kahler.omega0, m, H, apply_p(m, s.kahler.J0, H)) == doctest::Approx(4.0 / s.roots.C));
}

TEST_CASE("Z basis norms and brackets") {
  for (const char* name : {"su:2,2", "sp:2", "su:2,3"}) {
    CAPTURE(name);
    const Space& s = test::space(name);
    const Model& m = s.model;
    const double C = s.roots.C;
    for (int i = 0; i < s.roots.rank; ++i) {
      CHECK(inner(m, s.kahler.Zp[size_t(i)], s.kahler.Zp[size_t(i)]) == doctest::Approx(1.0 / C));
      CHECK(inner(m, s.kahler.Zk[size_t(i)], s.kahler.Zk[size_t(i)]) == doctest::Approx(1.0 / C));
      CHECK(norm(m, bracket(m, s.kahler.Zk[size_t(i)], s.kahler.Zp[size_t(i)]) - 0.5 * s.roots.H_tilde[size_t(i)]) <
            1e-10);
      for (int j = 0; j < s.roots.rank; ++j)
        if (i != j) CHECK(norm(m, bracket(m, s.kahler.Zk[size_t(i)], s.kahler.Zp[size_t(j)])) < 1e-12);
    }
  }
}

TEST_CASE("J0 maps root spaces as expected") {
  all_small(verify_J_mapping(test::space("su11").model, test::space("su11").roots, test::space("su11").kahler), 1e-12);
  for (const char* name : {"su:2,2", "su:1,2", "su:2,3", "sp:3"}) {
    CAPTURE(name);
    const Space& s = test::space(name);
    all_small(verify_J_mapping(s.model, s.roots, s.kahler), 1e-10);
    all_small(kahler_checks(s.model, s.roots, s.kahler), 1e-10);
  }
}

TEST_CASE("polydisk bracket relations") {
  for (const char* name : {"su11", "su:2,2", "sp:2", "su:2,3"}) {
    CAPTURE(name);
    const Space& s = test::space(name);
    const Model& m = s.model;
    all_small(polydisk_checks(m, s.roots, s.kahler, s.poly), 1e-10);
    for (int i = 0; i < s.roots.rank; ++i) {
      const AlgVec& H = s.roots.H_tilde[size_t(i)];
      const AlgVec JH = apply_p(m, s.kahler.J0, H);
      CHECK(norm(m, bracket(m, bracket(m, H, JH), JH) - 4.0 * H) < 1e-10);
    }
  }
}

TEST_CASE("su(1,1) coordinates of the polydisk factor") {
  const Space& s = test::space("su:2,2");
  const CMat F1 = su11_coordinate(1, 0, 0), F2 = su11_coordinate(0, 1, 0);
  const double n2 = 2.0 / s.roots.C * (F1 * F1.adjoint()).trace().real();
  CHECK(n2 == doctest::Approx(inner(s.model, s.roots.H_tilde[0], s.roots.H_tilde[0])));
  // same relation as [[H~, J0H~], J0H~] = 4H~
  const CMat c = F1 * F2 - F2 * F1;
  CHECK((c * F2 - F2 * c - 4.0 * F1).norm() < 1e-14);
}
