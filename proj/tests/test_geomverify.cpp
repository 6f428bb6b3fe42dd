#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace hssnt;

namespace {

// Eigenvalues of E on p, via the generalized pencil so they are basis independent.
Vec spectrum(const Model& m, const Mat& E) {
  Mat S = m.inner_gram_p * E;
  S = 0.5 * (S + S.transpose()).eval();
  return Eigen::GeneralizedSelfAdjointEigenSolver<Mat>(S, m.inner_gram_p).eigenvalues();
}

}  // namespace

TEST_CASE("Jacobi operator") {
  const Space& s = test::space("su11");
  const Model& m = s.model;
  CHECK((jacobi_operator(m, m.zero(Home::p)) - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
  const double x = 0.7;
  const Vec ev = spectrum(m, jacobi_operator(m, x * s.roots.H_tilde[0]));
  CHECK(ev(0) == doctest::Approx(1.0));
  CHECK(ev(1) == doctest::Approx(std::sinh(2 * x) / (2 * x)));

  const DualSpace d = build_dual(s);
  const Vec evd = spectrum(d.model, jacobi_operator(d.model, x * d.H_tilde[0]));
  CHECK(evd(0) == doctest::Approx(std::sin(2 * x) / (2 * x)));
  CHECK(evd(1) == doctest::Approx(1.0));
  CHECK_THROWS_AS(jacobi_operator(d.model, (M_PI / 2) * d.H_tilde[0]), Error);
}

TEST_CASE("chart Kahler structure") {
  const Space& s = test::space("su:2,2");
  const Model& m = s.model;
  const ChartKahler at0 = chart_kahler(m, s.kahler.J0, s.kahler.omega0, m.zero(Home::p));
  CHECK((at0.J - s.kahler.J0).cwiseAbs().maxCoeff() == 0.0);
  CHECK((at0.omega - s.kahler.omega0).cwiseAbs().maxCoeff() == 0.0);
  Rng rng = sample_rng(41, 0);
  const ChartKahler ck = chart_kahler(m, s.kahler.J0, s.kahler.omega0, random_p(m, rng));
  CHECK((ck.J * ck.J + Mat::Identity(m.dim_p, m.dim_p)).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((ck.omega + ck.omega.transpose()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("differentials") {
  const Space& s = test::space("su:2,2");
  const Model& m = s.model;
  Rng rng = sample_rng(42, 0);
  const AlgVec X = random_p(m, rng), u = random_p(m, rng);
  const PMap id = [](const AlgVec& v) { return v; };
  CHECK(test::gap(differential_fd(id, X, u).value, u) < 1e-10);
  const OddMap tanh = builtin_odd("tanh");
  const Vec x = test::vec({0.5, 0.2});
  const double c = 1.0 / std::cosh(0.5);
  const AlgVec d = differential_exact_axis(s, tanh, x, s.roots.H_tilde[0]);
  CHECK(test::gap(d, c * c * s.roots.H_tilde[0]) < 1e-12);
  CHECK_THROWS_AS(differential_exact_axis(s, tanh, test::vec({0.5, 0.5}), u), Error);
  const VerifyReport r = check_exact_vs_fd(s, tanh, {20, 3, 1e-5});
  CHECK(r.pass());
}

TEST_CASE("G and F closed forms") {
  const Space& s = test::space("su:2,3");
  const RootDatum& d = s.roots;
  const OddMap tanh = builtin_odd("tanh"), sinh = builtin_odd("sinh");
  for (int n = 0; n < 20; ++n) {
    Rng rng = sample_rng(43, std::uint64_t(n));
    const Vec x = random_principal(d, rng, 1e-3, 2.0);
    for (size_t k = 0; k < d.positive.size(); ++k) {
      if (d.positive[k].kind == RootKind::lambda_bar) continue;
      CHECK(evaluate_G(d, tanh, int(k), x) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(evaluate_F(d, sinh, int(k), x) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  const RootDatum& d1 = test::space("su:1,2").roots;
  const double x = 0.8;
  CHECK(evaluate_G(d1, builtin_odd("id"), d1.gamma[0], test::vec({x})) ==
        doctest::Approx(std::sinh(2 * x) / (2 * x)));
  CHECK(evaluate_F_star(d1, builtin_odd("id"), d1.gamma[0], test::vec({x})) ==
        doctest::Approx(std::sin(2 * x) / (2 * x)));
  CHECK(evaluate_G_star(d1, builtin_odd("tan"), d1.gamma[0], test::vec({x})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(evaluate_G_star(d1, builtin_odd("tan"), d1.gamma[0], test::vec({1.6})), Error);
  CHECK_THROWS_AS(evaluate_G(d, tanh, d.gamma[0], test::vec({0.4, -0.4})), Error);
}

TEST_CASE("holomorphic and symplectic certification") {
  const Space& s = test::space("su:2,2");
  const SampleOptions o{20, 1, 1e-5};
  const PMap hc = [&](const AlgVec& X) { return harish_chandra(s, X); };
  const PMap sy = [&](const AlgVec& X) { return symplecto(s, X); };
  CHECK(check_holomorphic(s, hc, "hc", o).pass());
  CHECK(check_symplectic(s, sy, "sy", o).pass());
  CHECK_FALSE(check_symplectic(s, hc, "hc", o).pass());
  CHECK_FALSE(check_holomorphic(s, sy, "sy", o).pass());
}

TEST_CASE("equivariance reports") {
  const Space& s = test::space("su:2,2");
  const SampleOptions o{20, 2, 1e-9};
  CHECK(check_equivariance(s, [&](const AlgVec& X) { return harish_chandra(s, X); }, "hc", o).pass());
  const VerifyReport id = check_equivariance(s, [](const AlgVec& X) { return X; }, "id", o);
  CHECK(id.checks[0].max_residual < 1e-14);
  GeneralHMap good{[](const Vec& x) { return std::tanh(x(0)); }, 2};
  GeneralHMap bad{[](const Vec& x) { return x(0) + x(1); }, 2};
  CHECK(check_weyl_equivariance(s, good, "diag", o).pass());
  CHECK_FALSE(check_weyl_equivariance(s, bad, "bad", o).pass());
}

TEST_CASE("block scalars from finite differences") {
  for (const char* name : {"su:2,2", "su:1,2", "sp:2"}) {
    CAPTURE(name);
    for (const char* eta : {"tanh", "sinh", "loi_mossa", "arctan"}) {
      CAPTURE(eta);
      CHECK(check_block_scalars(test::space(name), builtin_odd(eta), {8, 4, 1e-5}).pass());
    }
  }
}

TEST_CASE("uniqueness ODE residuals") {
  for (const std::string& n : builtin_names()) {
    CAPTURE(n);
    const UniquenessResiduals u = uniqueness_residuals(builtin_odd(n));
    CHECK((u.holomorphic < 1e-12) == (n == "tanh"));
    CHECK((u.symplectic < 1e-12) == (n == "sinh"));
  }
}
