#include "hssnt/geomverify.hpp"

#include <cmath>

#include "hssnt/sampling.hpp"

namespace hssnt {

namespace {

double phi(double t) {
  if (std::abs(t) < 1e-6) return 1.0 + t / 6.0 + t * t / 120.0;
  if (t > 0) {
    const double r = std::sqrt(t);
    return std::sinh(r) / r;
  }
  const double r = std::sqrt(-t);
  if (r >= M_PI * (1.0 - 1e-12))
    throw Error(ErrorCode::SingularJacobi, "point on or beyond the cut locus (root value " + std::to_string(r) + ")");
  return std::sin(r) / r;
}

double p_norm(const Model& m, const Vec& u) { return std::sqrt(std::max(0.0, inner_p(m, u, u))); }

void require_principal(const RootDatum& d, const Vec& x) {
  if (!is_principal(d, x, 1e-3)) throw Error(ErrorCode::NonPrincipalPoint, "point is not principal");
}

Vec image_coords(const OddMap& eta, const Vec& x) {
  Vec y(x.size());
  for (int i = 0; i < x.size(); ++i) y(i) = eta(x(i));
  return y;
}

// G and F with f = sinh (noncompact) or sin (dual).
double block_G(const RootDatum& d, const OddMap& eta, int root, const Vec& x, double (*f)(double)) {
  require_principal(d, x);
  const Root& a = d.positive.at(size_t(root));
  const Vec y = image_coords(eta, x);
  switch (a.kind) {
    case RootKind::gamma: {
      int i = 0;
      a.e.cwiseAbs().maxCoeff(&i);
      return eta.deriv(x(i)) / y(i) * f(2.0 * x(i)) / 2.0;
    }
    case RootKind::eps:
      return 1.0;
    case RootKind::lambda: {
      const Root& b = d.positive.at(size_t(a.bar));
      return b.at(y) / a.at(y) * f(a.at(x)) / f(b.at(x));
    }
    default:
      throw std::invalid_argument("G is defined on gamma, lambda and eps roots only");
  }
}

double block_F(const RootDatum& d, const OddMap& eta, int root, const Vec& x, double (*f)(double)) {
  require_principal(d, x);
  const Root& a = d.positive.at(size_t(root));
  const Vec y = image_coords(eta, x);
  switch (a.kind) {
    case RootKind::gamma: {
      int i = 0;
      a.e.cwiseAbs().maxCoeff(&i);
      return f(2.0 * x(i)) / (2.0 * eta.deriv(x(i)) * y(i));
    }
    case RootKind::eps:
    case RootKind::lambda: {
      const Root& b = d.positive.at(size_t(a.bar));
      return f(a.at(x)) * f(b.at(x)) / (a.at(y) * b.at(y));
    }
    default:
      throw std::invalid_argument("F is defined on gamma, lambda and eps roots only");
  }
}

double sinh_(double t) { return std::sinh(t); }
double sin_(double t) { return std::sin(t); }

void require_cut_cube(const Vec& x) {
  if (!cut_cube_membership(x)) throw Error(ErrorCode::OutsideCutLocus, "point outside the cut cube");
}

// Sampling frame shared by the noncompact and dual checks.
struct Frame {
  const Space* s;
  const Model* m;
  Mat J0, omega0;
  double hi;
  bool dual;

  AlgVec sample(Rng& rng) const {
    const Vec x = random_principal(s->roots, rng, 1e-3, hi);
    const AlgVec Z = random_k(s->model, rng);
    AlgVec X{adjoint_exp(s->model, Z) * s->roots.from_a_coords(x).coeffs, m->p_home()};
    return X;
  }
  AlgVec tangent(Rng& rng) const { return m->from_p(gaussian(rng, m->dim_p)); }
};

Frame noncompact_frame(const Space& s) { return {&s, &s.model, s.kahler.J0, s.kahler.omega0, 2.0, false}; }
Frame dual_frame(const Space& s, const DualSpace& d) { return {&s, &d.model, d.J0, d.omega0, M_PI / 2 - 0.1, true}; }

template <typename Fn>
double max_over_samples(const SampleOptions& o, Fn fn) {
  std::vector<double> res(size_t(std::max(0, o.samples)), 0.0);
  parallel_for(o.samples, [&](int i) {
    Rng rng = sample_rng(o.seed, std::uint64_t(i));
    res[size_t(i)] = fn(rng);
  });
  double worst = 0.0;
  for (double r : res) worst = std::max(worst, std::isnan(r) ? kInf : r);
  return worst;
}

VerifyReport start(const std::string& name, const SampleOptions& o) {
  VerifyReport r;
  r.name = name;
  r.samples = o.samples;
  r.seed = o.seed;
  return r;
}

VerifyReport holomorphic_impl(const Frame& F, const PMap& f, const std::string& name, const SampleOptions& o) {
  VerifyReport r = start(name, o);
  const double worst = max_over_samples(o, [&](Rng& rng) {
    const AlgVec X = F.sample(rng);
    const AlgVec u = F.tangent(rng);
    const ChartKahler ck = chart_kahler(*F.m, F.J0, F.omega0, X);
    const Vec pu = F.m->p_coords(u);
    const Differential du = differential_fd(f, X, u);
    const Differential dJu = differential_fd(f, X, F.m->from_p(ck.J * pu));
    const Vec diff = F.m->p_coords(dJu.value) - F.J0 * F.m->p_coords(du.value);
    return p_norm(*F.m, diff) / p_norm(*F.m, pu);
  });
  r.add("holomorphic", worst, o.tol);
  return r;
}

VerifyReport symplectic_impl(const Frame& F, const PMap& f, const std::string& name, const SampleOptions& o) {
  VerifyReport r = start(name, o);
  const double worst = max_over_samples(o, [&](Rng& rng) {
    const AlgVec X = F.sample(rng);
    const AlgVec u = F.tangent(rng);
    const AlgVec w = F.tangent(rng);
    const ChartKahler ck = chart_kahler(*F.m, F.J0, F.omega0, X);
    const Vec pu = F.m->p_coords(u), pw = F.m->p_coords(w);
    const Vec du = F.m->p_coords(differential_fd(f, X, u).value);
    const Vec dw = F.m->p_coords(differential_fd(f, X, w).value);
    const double target = du.dot(F.omega0 * dw);
    const double chart = pu.dot(ck.omega * pw);
    return std::abs(target - chart) / (p_norm(*F.m, pu) * p_norm(*F.m, pw));
  });
  r.add("symplectic", worst, o.tol);
  return r;
}

}  // namespace

Mat jacobi_operator(const Model& m, const AlgVec& v) {
  const Mat A = p_block(m, ad_operator(m, v) * ad_operator(m, v));
  // A is G_p-self-adjoint; diagonalise the symmetric pencil (G_p A, G_p).
  Mat S = m.inner_gram_p * A;
  S = 0.5 * (S + S.transpose()).eval();
  const Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(S, m.inner_gram_p);
  const Mat& V = es.eigenvectors();
  Vec f(V.cols());
  for (int i = 0; i < f.size(); ++i) f(i) = phi(es.eigenvalues()(i));
  return V * f.asDiagonal() * V.transpose() * m.inner_gram_p;
}

ChartKahler chart_kahler(const Model& m, const Mat& J0, const Mat& omega0, const AlgVec& v) {
  ChartKahler ck;
  ck.E = jacobi_operator(m, v);
  ck.J = ck.E.partialPivLu().solve(J0 * ck.E);
  ck.omega = ck.E.transpose() * omega0 * ck.E;
  return ck;
}

Differential differential_fd(const PMap& f, const AlgVec& X, const AlgVec& u) {
  Differential d;
  const double un = u.coeffs.norm();
  if (un == 0.0) {
    d.value = AlgVec{Vec::Zero(X.size()), X.home};
    return d;
  }
  const AlgVec dir{u.coeffs / un, u.home};
  const double h = 1e-4 * std::max(1.0, X.coeffs.norm());
  auto stencil = [&](double s) {
    auto at = [&](double t) { return f(AlgVec{X.coeffs + t * dir.coeffs, X.home}).coeffs; };
    return Vec((-at(2 * s) + 8.0 * at(s) - 8.0 * at(-s) + at(-2 * s)) / (12.0 * s));
  };
  const Vec D1 = stencil(h);
  const Vec D2 = stencil(h / 2);
  d.richardson_gap = (D1 - D2).norm() * un;
  d.value = AlgVec{un * (16.0 * D2 - D1) / 15.0, X.home};
  return d;
}

AlgVec differential_exact_axis(const Space& s, const OddMap& eta, const Vec& x, const AlgVec& u) {
  const Model& m = s.model;
  const RootDatum& d = s.roots;
  require_principal(d, x);
  if (!eta.deriv) throw std::invalid_argument("exact differential needs eta'");
  const Vec y = image_coords(eta, x);
  AlgVec out = m.zero(m.p_home());
  for (int i = 0; i < d.rank; ++i) {
    const AlgVec& H = d.H_tilde[size_t(i)];
    const double c = inner(m, u, H) / inner(m, H, H);
    out.coeffs += eta.deriv(x(i)) * c * H.coeffs;
  }
  for (const Root& a : d.positive) {
    const double factor = a.at(y) / a.at(x);
    for (const AlgVec& X : a.p_basis) out.coeffs += factor * inner(m, u, X) * X.coeffs;
  }
  return out;
}

AlgVec differential(const Space& s, const OddMap& eta, const Vec& x, const AlgVec& u, DiffMode mode) {
  if (mode == DiffMode::exact_axis) return differential_exact_axis(s, eta, x, u);
  const PMap f = [&](const AlgVec& X) { return odd_calculus(s, X, eta); };
  return differential_fd(f, s.roots.from_a_coords(x), u).value;
}

double evaluate_G(const RootDatum& d, const OddMap& eta, int root, const Vec& x) {
  return block_G(d, eta, root, x, sinh_);
}

double evaluate_F(const RootDatum& d, const OddMap& eta, int root, const Vec& x) {
  return block_F(d, eta, root, x, sinh_);
}

double evaluate_G_star(const RootDatum& d, const OddMap& eta_star, int root, const Vec& x) {
  require_cut_cube(x);
  return block_G(d, eta_star, root, x, sin_);
}

double evaluate_F_star(const RootDatum& d, const OddMap& eta_star, int root, const Vec& x) {
  require_cut_cube(x);
  return block_F(d, eta_star, root, x, sin_);
}

VerifyReport check_holomorphic(const Space& s, const PMap& f, const std::string& name, const SampleOptions& o) {
  return holomorphic_impl(noncompact_frame(s), f, name, o);
}

VerifyReport check_symplectic(const Space& s, const PMap& f, const std::string& name, const SampleOptions& o) {
  return symplectic_impl(noncompact_frame(s), f, name, o);
}

VerifyReport check_holomorphic(const Space& s, const DualSpace& d, const PMap& f, const std::string& name,
                               const SampleOptions& o) {
  return holomorphic_impl(dual_frame(s, d), f, name, o);
}

VerifyReport check_symplectic(const Space& s, const DualSpace& d, const PMap& f, const std::string& name,
                              const SampleOptions& o) {
  return symplectic_impl(dual_frame(s, d), f, name, o);
}

VerifyReport check_equivariance(const Space& s, const PMap& f, const std::string& name, const SampleOptions& o,
                                double hi, bool dual) {
  VerifyReport r = start(name, o);
  const Home home = dual ? Home::pstar : Home::p;
  const double worst = max_over_samples(o, [&](Rng& rng) {
    const Vec x = random_principal(s.roots, rng, 1e-3, hi);
    const Mat A0 = adjoint_exp(s.model, random_k(s.model, rng));
    const AlgVec X{A0 * s.roots.from_a_coords(x).coeffs, home};
    const Mat A = adjoint_exp(s.model, random_k(s.model, rng));
    const AlgVec fX = f(X);
    const AlgVec lhs = f(AlgVec{A * X.coeffs, home});
    return (lhs.coeffs - A * fX.coeffs).norm() / std::max(1.0, fX.coeffs.norm());
  });
  r.add("equivariance", worst, o.tol);
  return r;
}

VerifyReport check_weyl_equivariance(const Space& s, const GeneralHMap& h, const std::string& name,
                                     const SampleOptions& o) {
  VerifyReport r = start(name, o);
  std::vector<Mat> weyl;
  for (const Root& a : s.roots.positive) weyl.push_back(adjoint_exp(s.model, weyl_element(s.model, s.roots, a.e)));
  const double worst = max_over_samples(o, [&](Rng& rng) {
    const Vec x = random_principal(s.roots, rng, 1e-3, 2.0);
    const AlgVec hx = general_h_map(s, h, x);
    double res = 0.0;
    for (const Mat& A : weyl) {
      const AlgVec wx{A * s.roots.from_a_coords(x).coeffs, Home::p};
      const AlgVec lhs = general_h_map(s, h, s.roots.a_coords(s.model, wx));
      res = std::max(res, (lhs.coeffs - A * hx.coeffs).norm() / std::max(1.0, hx.coeffs.norm()));
    }
    return res;
  });
  r.add("Weyl equivariance", worst, o.tol);
  return r;
}

VerifyReport check_block_scalars(const Space& s, const OddMap& eta, const SampleOptions& o) {
  const Model& m = s.model;
  const RootDatum& d = s.roots;
  VerifyReport r = start("block scalars " + eta.name, o);
  const PMap f = [&](const AlgVec& X) { return odd_calculus(s, X, eta); };
  const double hi = std::isfinite(eta.radius) ? 0.9 * eta.radius : 2.0;
  std::vector<double> gres(size_t(o.samples)), fres(size_t(o.samples));
  parallel_for(o.samples, [&](int n) {
    Rng rng = sample_rng(o.seed, std::uint64_t(n));
    const Vec x = random_principal(d, rng, 0.05, hi);
    const AlgVec v = d.from_a_coords(x);
    // Jacobian of Omega_eta on p-coordinates.
    Mat Df(m.dim_p, m.dim_p);
    for (int j = 0; j < m.dim_p; ++j)
      Df.col(j) = m.p_coords(differential_fd(f, v, m.from_p(Vec::Unit(m.dim_p, j))).value);
    const ChartKahler ck = chart_kahler(m, s.kahler.J0, s.kahler.omega0, v);
    const Mat Dinv = Df.partialPivLu().inverse();
    const Mat Jw = Df * ck.J * Dinv;
    const Mat omega_w = Dinv.transpose() * ck.omega * Dinv;
    double gw = 0.0, fw = 0.0;
    for (size_t k = 0; k < d.positive.size(); ++k) {
      const Root& a = d.positive[k];
      if (a.kind == RootKind::lambda_bar) continue;
      const double G = evaluate_G(d, eta, int(k), x);
      const double F = evaluate_F(d, eta, int(k), x);
      for (const AlgVec& X : a.p_basis) {
        const Vec y = m.p_coords(X);
        const Vec Jy = s.kahler.J0 * y;
        gw = std::max(gw, p_norm(m, Jw * y - G * Jy) / p_norm(m, y) / std::max(1.0, std::abs(G)));
        const double w0 = y.dot(s.kahler.omega0 * Jy);
        fw = std::max(fw, std::abs(y.dot(omega_w * Jy) - F * w0) / std::abs(w0) / std::max(1.0, std::abs(F)));
      }
    }
    gres[size_t(n)] = gw;
    fres[size_t(n)] = fw;
  });
  double gw = 0.0, fw = 0.0;
  for (int n = 0; n < o.samples; ++n) {
    gw = std::max(gw, gres[size_t(n)]);
    fw = std::max(fw, fres[size_t(n)]);
  }
  r.add("induced J = G J0 on p_alpha", gw, o.tol);
  r.add("induced omega = F omega0 on q_alpha", fw, o.tol);
  return r;
}

VerifyReport check_exact_vs_fd(const Space& s, const OddMap& eta, const SampleOptions& o) {
  VerifyReport r = start("exact vs finite differences " + eta.name, o);
  const double hi = std::isfinite(eta.radius) ? 0.9 * eta.radius : 2.0;
  const double worst = max_over_samples(o, [&](Rng& rng) {
    const Vec x = random_principal(s.roots, rng, 0.05, hi);
    const AlgVec u = random_p(s.model, rng);
    const AlgVec a = differential(s, eta, x, u, DiffMode::exact_axis);
    const AlgVec b = differential(s, eta, x, u, DiffMode::finite_diff);
    return norm(s.model, a - b) / norm(s.model, u);
  });
  r.add("exact_axis = finite_diff", worst, o.tol);
  return r;
}

UniquenessResiduals uniqueness_residuals(const OddMap& eta, int points) {
  UniquenessResiduals u;
  for (int i = 0; i < points; ++i) {
    const double x = 0.1 + 1.9 * double(i) / double(std::max(1, points - 1));
    if (x >= 0.999 * eta.radius) break;
    const double e = eta(x), de = eta.deriv(x);
    const double s = std::sinh(2.0 * x) / 2.0;
    auto upd = [](double& worst, double r) { worst = std::max(worst, std::isfinite(r) ? std::abs(r) : kInf); };
    upd(u.holomorphic, de / e * s - 1.0);
    upd(u.symplectic, s / (de * e) - 1.0);
  }
  return u;
}

}  // namespace hssnt
