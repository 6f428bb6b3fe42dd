#include "hssnt/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hssnt {

namespace {

// Modified Gram-Schmidt in the inner product of m; drops vectors below tol.
std::vector<AlgVec> orthonormalize(const Model& m, const std::vector<AlgVec>& in, double tol) {
  std::vector<AlgVec> out;
  for (AlgVec v : in) {
    for (const AlgVec& u : out) v.coeffs -= inner(m, u, v) * u.coeffs;
    for (const AlgVec& u : out) v.coeffs -= inner(m, u, v) * u.coeffs;
    const double n = norm(m, v);
    if (n > tol) {
      v.coeffs /= n;
      out.push_back(v);
    }
  }
  return out;
}

struct Cluster {
  double value = 0.0;  // eigenvalue of ad(H_generic)
  Mat V;               // G-orthonormal columns
  Vec covector;        // alpha(a^_j)
};

// Splits g into joint eigenspaces of ad(a). Returns false on ambiguity.
bool cluster_roots(const Model& m, const std::vector<AlgVec>& ahat, const Vec& weights,
                   std::vector<Cluster>& out) {
  const ToleranceConfig& tol = default_tolerances();
  AlgVec Hg = m.zero(Home::p);
  for (size_t k = 0; k < ahat.size(); ++k) Hg.coeffs += weights(k) * ahat[k].coeffs;
  const Mat A = ad_operator(m, Hg);
  const Mat& G = m.inner_gram;
  Mat S = G * A;
  S = 0.5 * (S + S.transpose()).eval();
  const Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(S, G);
  const Vec ev = es.eigenvalues();
  const Mat& U = es.eigenvectors();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());

  out.clear();
  std::vector<Mat> ads;
  for (const AlgVec& a : ahat) ads.push_back(ad_operator(m, a));
  int start = 0;
  const int d = m.dim_g;
  for (int i = 1; i <= d; ++i) {
    if (i < d && ev(i) - ev(i - 1) <= tol.cluster_gap * scale) continue;
    Cluster c;
    c.V = U.middleCols(start, i - start);
    c.value = ev.segment(start, i - start).mean();
    c.covector.resize(Eigen::Index(ahat.size()));
    for (size_t k = 0; k < ahat.size(); ++k) {
      const Mat AV = ads[k] * c.V;
      const Mat M = c.V.transpose() * G * AV;
      const double a = M.trace() / double(c.V.cols());
      if ((AV - a * c.V).cwiseAbs().maxCoeff() > 1e-8 * scale) return false;
      c.covector(Eigen::Index(k)) = a;
    }
    out.push_back(std::move(c));
    start = i;
  }
  // distinct clusters must carry distinct covectors
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if ((out[i].covector - out[j].covector).norm() < tol.cluster_gap * scale) return false;
  return true;
}

int kind_order(RootKind k) { return int(k); }

}  // namespace

std::string root_label(const Eigen::VectorXi& e) {
  std::string s;
  for (int i = 0; i < e.size(); ++i) {
    if (e(i) == 0) continue;
    const int c = e(i);
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += "e" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

AlgVec RootDatum::from_a_coords(const Vec& x) const {
  if (x.size() != rank) throw Error(ErrorCode::RankMismatch, "expected " + std::to_string(rank) + " coordinates");
  AlgVec out{Vec::Zero(H_tilde[0].size()), H_tilde[0].home};
  for (int i = 0; i < rank; ++i) out.coeffs += x(i) * H_tilde[i].coeffs;
  return out;
}

Vec RootDatum::a_coords(const Model& m, const AlgVec& X) const {
  Vec x(rank);
  for (int i = 0; i < rank; ++i) x(i) = inner(m, X, H_tilde[i]) * C / 4.0;
  return x;
}

int RootDatum::find(const Eigen::VectorXi& e, int* sign) const {
  for (size_t i = 0; i < positive.size(); ++i) {
    if (positive[i].e == e) {
      if (sign) *sign = 1;
      return int(i);
    }
    if (positive[i].e == -e) {
      if (sign) *sign = -1;
      return int(i);
    }
  }
  return -1;
}

std::string RootDatum::type_name() const {
  return (type == SysType::C ? "C" : "BC") + std::to_string(rank);
}

RootDatum restricted_roots(const Model& m) {
  const ToleranceConfig& tol = default_tolerances();
  RootDatum d;
  d.a_basis = m.a_standard;
  d.a_orthonormal = orthonormalize(m, m.a_standard, 1e-9);
  const int r = int(d.a_orthonormal.size());
  if (r != int(m.a_standard.size())) throw Error(ErrorCode::DegenerateAbelian, "a-basis is dependent");
  d.rank = r;
  for (size_t i = 0; i < m.a_standard.size(); ++i)
    for (size_t j = i + 1; j < m.a_standard.size(); ++j)
      if (norm(m, bracket(m, m.a_standard[i], m.a_standard[j])) > tol.structural)
        throw Error(ErrorCode::DegenerateAbelian, "supplied a is not abelian");

  // Generic element: decreasing weights on the standard basis, expressed on a^.
  std::vector<Cluster> clusters;
  bool ok = false;
  Vec weights_std(r);
  for (int attempt = 0; attempt < 6 && !ok; ++attempt) {
    for (int k = 0; k < r; ++k)
      weights_std(k) = std::exp(-(0.45 + 0.11 * attempt) * k) * (1.0 + 0.013 * k * (attempt + 1));
    AlgVec Hg = m.zero(Home::p);
    for (int k = 0; k < r; ++k) Hg.coeffs += weights_std(k) * m.a_standard[k].coeffs;
    Vec w(r);
    for (int k = 0; k < r; ++k) w(k) = inner(m, Hg, d.a_orthonormal[k]);
    ok = cluster_roots(m, d.a_orthonormal, w, clusters);
    d.h_generic = Hg;
  }
  if (!ok) throw Error(ErrorCode::ClusteringAmbiguity, "root clusters not separable");

  const double scale = std::max_element(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
                         return std::abs(a.value) < std::abs(b.value);
                       })->value;
  const double zero_tol = tol.cluster_gap * std::max(1.0, std::abs(scale));

  std::vector<const Cluster*> pos;
  for (const Cluster& c : clusters) {
    if (std::abs(c.value) <= zero_tol) {
      // centralizer of a: must be k0 + a
      const Mat Pp = c.V.bottomRows(m.dim_p);
      const Eigen::JacobiSVD<Mat> svd(Pp);
      const Vec sv = svd.singularValues();
      int rk = 0;
      for (int i = 0; i < sv.size(); ++i) rk += sv(i) > 1e-8 ? 1 : 0;
      if (rk != r) throw Error(ErrorCode::DegenerateAbelian, "centralizer of a in p exceeds a");
      std::vector<AlgVec> ks;
      for (int j = 0; j < c.V.cols(); ++j) {
        Vec v = c.V.col(j);
        v.tail(m.dim_p).setZero();
        ks.push_back({v, Home::k});
      }
      d.k0_basis = orthonormalize(m, ks, 1e-8);
    } else if (c.value > 0) {
      pos.push_back(&c);
    }
  }

  // Gamma: the longest positive roots.
  double maxn = 0.0;
  for (const Cluster* c : pos) maxn = std::max(maxn, c->covector.squaredNorm());
  std::vector<const Cluster*> gam;
  for (const Cluster* c : pos)
    if (std::abs(c->covector.squaredNorm() - maxn) <= 1e-8 * maxn) gam.push_back(c);
  if (int(gam.size()) != r) throw Error(ErrorCode::NotHermitianType, "number of long roots differs from rank");
  std::sort(gam.begin(), gam.end(), [](const Cluster* a, const Cluster* b) { return a->value > b->value; });
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (std::abs(gam[i]->covector.dot(gam[j]->covector)) > 1e-8 * maxn)
        throw Error(ErrorCode::NotHermitianType, "long roots are not orthogonal");

  const Vec Hg_hat = [&] {
    Vec w(r);
    for (int k = 0; k < r; ++k) w(k) = inner(m, d.h_generic, d.a_orthonormal[k]);
    return w;
  }();

  for (const Cluster* c : pos) {
    Root a;
    a.covector = c->covector;
    a.e.resize(r);
    for (int i = 0; i < r; ++i) {
      const double ci = 2.0 * c->covector.dot(gam[i]->covector) / maxn;
      a.e(i) = int(std::lround(ci));
      if (std::abs(ci - a.e(i)) > 1e-8) throw Error(ErrorCode::NotHermitianType, "non-integral root coordinate");
    }
    a.multiplicity = int(c->V.cols());
    std::vector<AlgVec> ps;
    for (int j = 0; j < c->V.cols(); ++j) {
      Vec v = c->V.col(j);
      v.head(m.dim_k).setZero();
      ps.push_back({v, m.p_home()});
    }
    a.p_basis = orthonormalize(m, ps, 1e-8);
    if (int(a.p_basis.size()) != a.multiplicity)
      throw Error(ErrorCode::DecompositionFailure, "root space p-part has wrong dimension");
    const double ag = a.covector.dot(Hg_hat);
    for (const AlgVec& xp : a.p_basis) {
      AlgVec xk = bracket(m, d.h_generic, xp);
      xk.coeffs /= ag;
      xk.home = Home::k;
      a.k_basis.push_back(xk);
    }
    a.label = root_label(a.e);
    d.positive.push_back(std::move(a));
  }

  // Template classification of each root.
  for (Root& a : d.positive) {
    std::vector<int> nz;
    for (int i = 0; i < r; ++i)
      if (a.e(i) != 0) nz.push_back(i);
    if (nz.size() == 1 && a.e(nz[0]) == 2)
      a.kind = RootKind::gamma;
    else if (nz.size() == 1 && a.e(nz[0]) == 1)
      a.kind = RootKind::eps;
    else if (nz.size() == 2 && a.e(nz[0]) == 1 && a.e(nz[1]) == 1)
      a.kind = RootKind::lambda;
    else if (nz.size() == 2 && a.e(nz[0]) == 1 && a.e(nz[1]) == -1)
      a.kind = RootKind::lambda_bar;
    else
      throw Error(ErrorCode::NotHermitianType, "root " + a.label + " outside the C/BC template");
  }
  std::sort(d.positive.begin(), d.positive.end(), [](const Root& a, const Root& b) {
    if (a.kind != b.kind) return kind_order(a.kind) < kind_order(b.kind);
    for (int i = 0; i < a.e.size(); ++i)
      if (a.e(i) != b.e(i)) return std::abs(a.e(i)) > std::abs(b.e(i));
    return false;
  });
  for (size_t i = 0; i < d.positive.size(); ++i) {
    Root& a = d.positive[i];
    switch (a.kind) {
      case RootKind::gamma: d.gamma.push_back(int(i)); break;
      case RootKind::lambda: d.lambda.push_back(int(i)); break;
      case RootKind::lambda_bar: d.lambda_bar.push_back(int(i)); break;
      case RootKind::eps: d.eps.push_back(int(i)); break;
    }
  }
  for (size_t i = 0; i < d.positive.size(); ++i) {
    Root& a = d.positive[i];
    if (a.kind == RootKind::eps) a.bar = int(i);
    if (a.kind == RootKind::lambda || a.kind == RootKind::lambda_bar) {
      Eigen::VectorXi b = a.e;
      for (int j = r - 1; j >= 0; --j)
        if (b(j) != 0) {
          b(j) = -b(j);
          break;
        }
      a.bar = d.find(b);
    }
  }
  d.type = classify_type(d);

  for (int i = 0; i < r; ++i) {
    const Root& g = d.positive[d.gamma[i]];
    d.H.push_back(root_vector_H(m, g));
  }
  d.C = inner(m, d.H[0], d.H[0]);
  for (const AlgVec& Hi : d.H) d.H_tilde.push_back((2.0 / d.C) * Hi);
  return d;
}

SysType classify_type(const RootDatum& d) {
  const int r = d.rank;
  const size_t nl = size_t(r) * size_t(r - 1) / 2;
  if (d.gamma.size() != size_t(r) || d.lambda.size() != nl || d.lambda_bar.size() != nl)
    throw Error(ErrorCode::NotHermitianType, "positive roots do not match the C/BC template");
  if (!d.eps.empty() && d.eps.size() != size_t(r))
    throw Error(ErrorCode::NotHermitianType, "partial set of short roots");
  for (int i = 0; i < r; ++i) {
    Eigen::VectorXi g = Eigen::VectorXi::Zero(r);
    g(i) = 2;
    const int idx = d.find(g);
    if (idx < 0 || d.positive[idx].e != g) throw Error(ErrorCode::NotHermitianType, "missing long root");
    if (d.positive[idx].multiplicity != 1)
      throw Error(ErrorCode::NotHermitianType, "long root of multiplicity > 1");
    for (int j = i + 1; j < r; ++j)
      for (int s : {1, -1}) {
        Eigen::VectorXi l = Eigen::VectorXi::Zero(r);
        l(i) = 1;
        l(j) = s;
        const int li = d.find(l);
        if (li < 0 || d.positive[li].e != l) throw Error(ErrorCode::NotHermitianType, "missing root " + root_label(l));
      }
  }
  return d.eps.empty() ? SysType::C : SysType::BC;
}

AlgVec root_vector_H(const Model& m, const Root& a) {
  const AlgVec& xk = a.k_basis.at(0);
  const AlgVec& xp = a.p_basis.at(0);
  AlgVec H = bracket(m, xk, xp);
  H.coeffs /= inner(m, xp, xp);
  H.home = m.p_home();
  return H;
}

AlgVec covector_H(const RootDatum& d, const Root& a) {
  AlgVec H{Vec::Zero(d.a_orthonormal[0].size()), d.a_orthonormal[0].home};
  for (int k = 0; k < d.rank; ++k) H.coeffs += a.covector(k) * d.a_orthonormal[k].coeffs;
  return H;
}

AlgVec weyl_reflect(const Model& m, const RootDatum& d, const Eigen::VectorXi& alpha, const AlgVec& H) {
  const int idx = d.find(alpha);
  if (idx < 0) throw Error(ErrorCode::NotHermitianType, "not a root: " + root_label(alpha));
  const Root& a = d.positive[idx];
  double aH = 0.0;
  for (int k = 0; k < d.rank; ++k) aH += a.covector(k) * inner(m, H, d.a_orthonormal[k]);
  const AlgVec Ha = covector_H(d, a);
  AlgVec out = H;
  out.coeffs -= 2.0 * aH / a.covector.squaredNorm() * Ha.coeffs;
  return out;
}

SignedPermutation weyl_signed_permutation(const Model& m, const RootDatum& d,
                                          const std::vector<Eigen::VectorXi>& word) {
  const int r = d.rank;
  Mat M(r, r);
  for (int i = 0; i < r; ++i) {
    AlgVec h = d.H_tilde[i];
    for (auto it = word.rbegin(); it != word.rend(); ++it) h = weyl_reflect(m, d, *it, h);
    M.col(i) = d.a_coords(m, h);
  }
  SignedPermutation sp;
  sp.perm.assign(r, -1);
  sp.sign.assign(r, 0);
  Mat P = Mat::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    Eigen::Index j;
    M.col(i).cwiseAbs().maxCoeff(&j);
    sp.perm[i] = int(j);
    sp.sign[i] = M(j, i) > 0 ? 1 : -1;
    P(j, i) = sp.sign[i];
  }
  sp.residual = (M - P).cwiseAbs().maxCoeff();
  std::vector<int> seen = sp.perm;
  std::sort(seen.begin(), seen.end());
  const bool bijective = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  if (!bijective || sp.residual > default_tolerances().isometry)
    throw Error(ErrorCode::NotSignedPermutation, "Weyl word is not a signed permutation of H~");
  return sp;
}

AlgVec weyl_element(const Model& m, const RootDatum& d, const Eigen::VectorXi& alpha) {
  const int idx = d.find(alpha);
  if (idx < 0) throw Error(ErrorCode::NotHermitianType, "not a root: " + root_label(alpha));
  const Root& a = d.positive[idx];
  const AlgVec Ha = covector_H(d, a);
  const AlgVec& xk = a.k_basis[0];
  const AlgVec t = bracket(m, xk, bracket(m, xk, Ha));
  const double mu2 = -inner(m, t, Ha) / inner(m, Ha, Ha);
  return (M_PI / std::sqrt(mu2)) * xk;
}

RootChecks root_checks(const Model& m, const RootDatum& d) {
  RootChecks rc;
  std::vector<Vec> cols;
  for (const AlgVec& a : d.a_orthonormal) cols.push_back(m.p_coords(a));
  for (const Root& a : d.positive)
    for (const AlgVec& x : a.p_basis) cols.push_back(m.p_coords(x));
  if (int(cols.size()) != m.dim_p) {
    rc.reconstruction = 1.0;
  } else {
    Mat Q(m.dim_p, m.dim_p);
    for (int i = 0; i < m.dim_p; ++i) Q.col(i) = cols[i];
    rc.reconstruction = (Q.transpose() * m.inner_gram_p * Q - Mat::Identity(m.dim_p, m.dim_p)).cwiseAbs().maxCoeff();
  }
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j)
      rc.orthogonality = std::max(rc.orthogonality,
                                  std::abs(inner(m, d.H[i], d.H[j]) - (i == j ? d.C : 0.0)));
  for (const Root& a : d.positive) {
    const AlgVec h1 = root_vector_H(m, a), h2 = covector_H(d, a);
    rc.root_vector_vs_covector = std::max(rc.root_vector_vs_covector, norm(m, h1 - h2) / norm(m, h2));
    for (size_t j = 0; j < a.p_basis.size(); ++j)
      rc.kp_norms = std::max(rc.kp_norms, std::abs(norm(m, a.k_basis[j]) - norm(m, a.p_basis[j])));
  }
  // [k_a, p_b] lies in p_{a+b} + p_{a-b} (a when a = b)
  for (const Root& a : d.positive)
    for (const Root& b : d.positive) {
      const AlgVec br = bracket(m, a.k_basis[0], b.p_basis[0]);
      Vec rest = br.coeffs;
      double kpart = rest.head(m.dim_k).cwiseAbs().maxCoeff();
      rest.head(m.dim_k).setZero();
      AlgVec v{rest, m.p_home()};
      std::vector<const std::vector<AlgVec>*> targets;
      for (const Eigen::VectorXi& e : {Eigen::VectorXi(a.e + b.e), Eigen::VectorXi(a.e - b.e)}) {
        if (e.isZero()) {
          targets.push_back(&d.a_orthonormal);
          continue;
        }
        const int i = d.find(e);
        if (i >= 0) targets.push_back(&d.positive[i].p_basis);
      }
      for (const auto* t : targets)
        for (const AlgVec& u : *t) v.coeffs -= inner(m, u, v) * u.coeffs;
      rc.grading = std::max({rc.grading, kpart, norm(m, v)});
    }
  return rc;
}

}  // namespace hssnt
