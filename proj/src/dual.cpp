#include "hssnt/dual.hpp"

#include <cmath>

namespace hssnt {

namespace {

AlgVec to_dual(const AlgVec& X) {
  AlgVec Y = X;
  if (Y.home == Home::p) Y.home = Home::pstar;
  return Y;
}

}  // namespace

DualSpace build_dual(const Space& s) {
  const Model& m = s.model;
  DualSpace d;
  Model& g = d.model;
  g = m;
  g.compact = true;
  const std::complex<double> I(0, 1);
  for (int i = m.dim_k; i < m.dim_g; ++i) {
    g.basis[i] *= I;
    g.labels[i] += "*";
  }
  // [X*, Y*] = -[X, Y]; brackets with k are unchanged
  for (int i = m.dim_k; i < m.dim_g; ++i)
    for (int j = m.dim_k; j < m.dim_g; ++j)
      for (int k = 0; k < m.dim_k; ++k) g.ad_basis[i](k, j) = -g.ad_basis[i](k, j);
  finish_metric(g);
  for (AlgVec& a : g.a_standard) a = to_dual(a);

  for (const AlgVec& H : s.roots.H_tilde) d.H_tilde.push_back(to_dual(H));
  d.J0 = p_block(g, ad_operator(g, s.kahler.zeta));
  d.omega0 = d.J0.transpose() * g.inner_gram_p;

  // multiplicities from the spectrum of -ad(H*)^2 on g*
  const AlgVec Hg = to_dual(s.roots.h_generic);
  const Mat A = ad_operator(g, Hg);
  Mat S = -g.inner_gram * A * A;
  S = 0.5 * (S + S.transpose()).eval();
  const Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(S, g.inner_gram);
  const Vec ev = es.eigenvalues();
  Vec hat(s.roots.rank);
  for (int k = 0; k < s.roots.rank; ++k) hat(k) = inner(m, s.roots.h_generic, s.roots.a_orthonormal[k]);
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  int matched = 0;
  for (const Root& a : s.roots.positive) {
    const double v = std::pow(a.covector.dot(hat), 2);
    int count = 0;
    for (int i = 0; i < ev.size(); ++i) count += std::abs(ev(i) - v) <= 1e-7 * scale ? 1 : 0;
    d.multiplicity.push_back(count / 2);
    matched += count;
  }
  int zeros = 0;
  for (int i = 0; i < ev.size(); ++i) zeros += std::abs(ev(i)) <= 1e-7 * scale ? 1 : 0;
  if (matched + zeros != g.dim_g)
    throw Error(ErrorCode::NotHermitianType, "dual spectrum has eigenvalues outside the root template");
  d.type = SysType::C;
  for (int e : s.roots.eps)
    if (d.multiplicity[e] > 0) d.type = SysType::BC;
  return d;
}

std::vector<Residual> dual_checks(const Space& s, const DualSpace& d) {
  const Model& g = d.model;
  std::vector<Residual> out;
  out.push_back({"dual Jacobi identity", jacobi_residual(g)});
  {
    Model viaMatrices = g;
    finish_model(viaMatrices);
    double worst = 0.0;
    for (int i = 0; i < g.dim_g; ++i)
      worst = std::max(worst, (viaMatrices.ad_basis[i] - g.ad_basis[i]).cwiseAbs().maxCoeff());
    out.push_back({"flipped constants = brackets of i p", worst});
  }
  const Eigen::SelfAdjointEigenSolver<Mat> es(g.inner_gram);
  out.push_back({"dual inner positive (1/min eigenvalue)", 1.0 / es.eigenvalues().minCoeff()});
  double rel = 0.0;
  for (const Root& a : s.roots.positive)
    for (size_t b = 0; b < a.p_basis.size(); ++b) {
      const AlgVec xp = to_dual(a.p_basis[b]);
      const AlgVec& xk = a.k_basis[b];
      for (int i = 0; i < s.roots.rank; ++i) {
        const double ai = a.e(i);
        rel = std::max(rel, norm(g, bracket(g, d.H_tilde[i], xk) - ai * xp));
        rel = std::max(rel, norm(g, bracket(g, d.H_tilde[i], xp) + ai * xk));
      }
    }
  out.push_back({"[H*, X^k] = a(H) X^p*, [H*, X^p*] = -a(H) X^k", rel});
  double mult = 0.0;
  for (size_t i = 0; i < s.roots.positive.size(); ++i)
    mult = std::max(mult, double(std::abs(d.multiplicity[i] - s.roots.positive[i].multiplicity)));
  out.push_back({"m*_a = m_a", mult});
  out.push_back({"type of dual roots", d.type == s.roots.type ? 0.0 : 1.0});
  const Mat Ip = Mat::Identity(g.dim_p, g.dim_p);
  out.push_back({"J0*^2 = -Id", (d.J0 * d.J0 + Ip).cwiseAbs().maxCoeff()});
  // su(2) relations on the dual polydisk factors
  double su2 = 0.0;
  for (int i = 0; i < s.roots.rank; ++i) {
    const AlgVec& H = d.H_tilde[i];
    const AlgVec JH = g.from_p(d.J0 * g.p_coords(H));
    const AlgVec c = bracket(g, H, JH);
    su2 = std::max(su2, norm(g, bracket(g, c, JH) + 4.0 * H));
    su2 = std::max(su2, norm(g, bracket(g, c, H) - 4.0 * JH));
  }
  out.push_back({"[[H~*,J0H~*],J0H~*] = -4H~*", su2});
  return out;
}

bool cut_cube_membership(const Vec& x) { return x.size() == 0 || x.cwiseAbs().maxCoeff() < M_PI / 2; }

AlgVec omega_eta_star(const Space& s, const AlgVec& Xstar, const OddMap& eta_star) {
  const SpectralDecomp sd = spectral_decompose(s, iota_inv(Xstar));
  if (!sd.values.empty() && sd.values.front() >= M_PI / 2)
    throw Error(ErrorCode::OutsideCutLocus, "spectral value " + std::to_string(sd.values.front()) + " >= pi/2");
  return iota(odd_calculus(sd, eta_star, iota_inv(Xstar)));
}

AlgVec diastatic_log_star(const Space& s, const AlgVec& Xstar) {
  OddMap e;
  e.name = "diastatic_log*";
  e.eval = [](double l) { return std::sqrt(std::log1p(l * l)); };
  return iota(odd_calculus(s, iota_inv(Xstar), e));
}

AlgVec diastatic_exp_star(const Space& s, const AlgVec& Xstar) {
  OddMap e;
  e.name = "diastatic_exp*";
  e.eval = [](double l) { return std::sqrt(std::expm1(l * l)); };
  return iota(odd_calculus(s, iota_inv(Xstar), e));
}

}  // namespace hssnt
