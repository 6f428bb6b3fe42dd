#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace hssnt;

TEST_CASE("dual algebra") {
  for (const char* name : {"su11", "su:1,2", "su:2,2", "su:2,3", "sp:2"}) {
    CAPTURE(name);
    const Space& s = test::space(name);
    const DualSpace d = build_dual(s);
    CHECK(d.model.compact);
    CHECK(jacobi_residual(d.model) < 1e-12);
    CHECK(d.type == s.roots.type);
    for (size_t i = 0; i < s.roots.positive.size(); ++i) CHECK(d.multiplicity[i] == s.roots.positive[i].multiplicity);
    for (const Residual& r : dual_checks(s, d)) {
      CAPTURE(r.name);
      if (r.name.find("1/min") != std::string::npos)
        CHECK(r.value > 0.0);
      else
        CHECK(r.value < 1e-10);
    }
  }
}

TEST_CASE("sign flip on p* brackets") {
  const Space& s = test::space("su:2,2");
  const DualSpace d = build_dual(s);
  const Model& g = d.model;
  const AlgVec H = d.H_tilde[0];
  const AlgVec Zk = s.kahler.Zk[0];
  const AlgVec Zp = iota(s.kahler.Zp[0]);
  CHECK(norm(g, bracket(g, H, Zk) - 2.0 * Zp) < 1e-12);
  CHECK(norm(g, bracket(g, H, Zp) + 2.0 * Zk) < 1e-12);
  // [X*, Y*] = -[X, Y]
  Rng rng = sample_rng(31, 0);
  const AlgVec X = random_p(s.model, rng), Y = random_p(s.model, rng);
  CHECK((bracket(g, iota(X), iota(Y)).coeffs + bracket(s.model, X, Y).coeffs).norm() < 1e-12);
}

TEST_CASE("cut cube") {
  CHECK(cut_cube_membership(Vec::Zero(2)));
  CHECK_FALSE(cut_cube_membership(test::vec({M_PI / 2, 0.0})));
  CHECK(cut_cube_membership(test::vec({1.5, -1.5})));
}

TEST_CASE("dual strongly diagonal maps") {
  const Space& s = test::space("su:2,2");
  const AlgVec H = iota(s.roots.H_tilde[0]);
  const AlgVec t = omega_eta_star(s, 0.9 * H, builtin_odd("tan"));
  CHECK(t.home == Home::pstar);
  CHECK((t.coeffs - std::tan(0.9) * H.coeffs).norm() < 1e-12);
  Rng rng = sample_rng(32, 0);
  const AlgVec X = iota(random_point(s, rng, random_principal(s.roots, rng, 0.01, 1.4)));
  CHECK(test::gap(omega_eta_star(s, X, builtin_odd("id")), X) < 1e-10);
  CHECK(omega_eta_star(s, 0.0 * H, builtin_odd("tan")).coeffs.norm() == 0.0);
  try {
    omega_eta_star(s, 1.6 * H, builtin_odd("sin"));
    FAIL("expected OutsideCutLocus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutsideCutLocus);
  }
  CHECK(test::gap(diastatic_exp_star(s, diastatic_log_star(s, X)), X) < 1e-9);
}

TEST_CASE("Gudermannian round trips") {
  const Space& s = test::space("su:2,3");
  for (int n = 0; n < 10; ++n) {
    Rng rng = sample_rng(33, std::uint64_t(n));
    const AlgVec X = random_point(s, rng, random_principal(s.roots, rng, 0.01, 2.0));
    const AlgVec g = gudermann_composite(s, X);
    CHECK(test::gap(omega_eta_star(s, g, builtin_odd("tan")), iota(symplecto(s, X))) < 1e-9);
    CHECK(test::gap(omega_eta_star(s, g, builtin_odd("sin")), iota(harish_chandra(s, X))) < 1e-9);
  }
}
