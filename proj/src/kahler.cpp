#include "hssnt/kahler.hpp"

#include <cmath>

namespace hssnt {

namespace {

double proj_residual(const Model& m, AlgVec v, const std::vector<AlgVec>& onb) {
  for (const AlgVec& u : onb) v.coeffs -= inner(m, u, v) * u.coeffs;
  return norm(m, v);
}

AlgVec unit_vec(const Model& m, const AlgVec& v) { return (1.0 / norm(m, v)) * v; }

}  // namespace

AlgVec central_element(const Model& m) {
  const int dk = m.dim_k;
  Mat S(dk * m.dim_g, dk);
  for (int j = 0; j < dk; ++j) S.middleRows(j * m.dim_g, m.dim_g) = m.ad_basis[j].leftCols(dk);
  const Eigen::JacobiSVD<Mat> svd(S, Eigen::ComputeFullV);
  const Vec sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  int nullity = 0;
  for (int i = 0; i < sv.size(); ++i) nullity += sv(i) <= 1e-10 * std::max(1.0, top) ? 1 : 0;
  if (nullity != 1)
    throw Error(ErrorCode::CenterDimensionError, "center of k has dimension " + std::to_string(nullity));
  AlgVec z = m.from_k(svd.matrixV().col(dk - 1));
  const Mat A = p_block(m, ad_operator(m, z) * ad_operator(m, z));
  const double s2 = -A.trace() / m.dim_p;
  if (s2 <= 0) throw Error(ErrorCode::CenterDimensionError, "ad(center)^2 is not negative on p");
  z.coeffs /= std::sqrt(s2);
  if (inner(m, z, m.zeta_reference) < 0) z.coeffs = -z.coeffs;
  return z;
}

std::pair<Mat, Mat> complex_structure(const Model& m, const AlgVec& zeta) {
  const Mat J = p_block(m, ad_operator(m, zeta));
  const Mat W = J.transpose() * m.inner_gram_p;
  return {J, W};
}

AlgVec apply_p(const Model& m, const Mat& op, const AlgVec& X) { return m.from_p(op * m.p_coords(X)); }

double omega(const Mat& omega0, const Model& m, const AlgVec& u, const AlgVec& w) {
  return m.p_coords(u).dot(omega0 * m.p_coords(w));
}

void z_basis(const Model& m, const RootDatum& d, KahlerData& K) {
  K.Zk.clear();
  K.Zp.clear();
  AlgVec sum = K.zeta;
  for (int i = 0; i < d.rank; ++i) {
    AlgVec zp = apply_p(m, K.J0, d.H[i]);
    zp.coeffs /= d.C;
    AlgVec zk = bracket(m, d.H[i], zp);
    zk.coeffs /= d.C;
    sum += zk;
    K.Zp.push_back(zp);
    K.Zk.push_back(zk);
  }
  K.Z0 = sum;
  const double tol = default_tolerances().isometry;
  if (proj_residual(m, sum, d.k0_basis) > tol * std::max(1.0, norm(m, K.zeta)))
    throw Error(ErrorCode::DecompositionFailure, "zeta + sum Z_i^k is not in k0");
  for (int i = 0; i < d.rank; ++i)
    if (std::abs(inner(m, K.Zk[i], K.Zk[i]) - 1.0 / d.C) > tol * (1.0 / d.C))
      throw Error(ErrorCode::DecompositionFailure, "|Z_i^k|^2 != 1/C");
}

std::vector<Residual> verify_J_mapping(const Model& m, const RootDatum& d, const KahlerData& K) {
  std::vector<Residual> out;
  for (int i = 0; i < d.rank; ++i) {
    const Root& g = d.positive[d.gamma[i]];
    double worst = 0.0;
    for (const AlgVec& x : g.p_basis)
      worst = std::max(worst, proj_residual(m, apply_p(m, K.J0, x), {unit_vec(m, d.H[i])}));
    out.push_back({"J0 p_" + g.label + " = a_" + std::to_string(i + 1), worst});
  }
  for (int li : d.lambda) {
    const Root& l = d.positive[li];
    const Root& lb = d.positive[l.bar];
    double worst = 0.0;
    const int n = int(l.p_basis.size());
    Mat gram(n, int(lb.p_basis.size()));
    for (int a = 0; a < n; ++a) {
      const AlgVec j = apply_p(m, K.J0, l.p_basis[a]);
      worst = std::max(worst, proj_residual(m, j, lb.p_basis));
      for (size_t b = 0; b < lb.p_basis.size(); ++b) gram(a, int(b)) = inner(m, j, lb.p_basis[b]);
    }
    // the projection onto p_lambdabar is an isometry
    double iso = (gram * gram.transpose() - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (gram.cols() != n) iso = 1.0;
    out.push_back({"J0 p_" + l.label + " = p_" + lb.label, std::max(worst, iso)});
  }
  for (int ei : d.eps) {
    const Root& e = d.positive[ei];
    double worst = 0.0;
    for (const AlgVec& x : e.p_basis) worst = std::max(worst, proj_residual(m, apply_p(m, K.J0, x), e.p_basis));
    out.push_back({"J0 p_" + e.label + " = p_" + e.label, worst});
  }
  return out;
}

std::vector<Residual> kahler_checks(const Model& m, const RootDatum& d, const KahlerData& K) {
  std::vector<Residual> out;
  double central = 0.0;
  for (int j = 0; j < m.dim_k; ++j) central = std::max(central, norm(m, bracket(m, K.zeta, m.unit(j))));
  out.push_back({"zeta central in k", central});
  const Mat Ip = Mat::Identity(m.dim_p, m.dim_p);
  out.push_back({"J0^2 = -Id", (K.J0 * K.J0 + Ip).cwiseAbs().maxCoeff()});
  out.push_back({"J0 orthogonal",
                 (K.J0.transpose() * m.inner_gram_p * K.J0 - m.inner_gram_p).cwiseAbs().maxCoeff() /
                     m.inner_gram_p.cwiseAbs().maxCoeff()});
  out.push_back({"omega0 antisymmetric", (K.omega0 + K.omega0.transpose()).cwiseAbs().maxCoeff()});
  {
    const Eigen::JacobiSVD<Mat> svd(K.omega0);
    const Vec sv = svd.singularValues();
    out.push_back({"omega0 nondegenerate (1/min singular value)", 1.0 / sv(sv.size() - 1)});
  }
  double nk = 0.0, np = 0.0, kp = 0.0, cross = 0.0, zbr = 0.0, jp = 0.0, torus = 0.0;
  for (int i = 0; i < d.rank; ++i) {
    nk = std::max(nk, std::abs(inner(m, K.Zk[i], K.Zk[i]) - 1.0 / d.C));
    np = std::max(np, std::abs(inner(m, K.Zp[i], K.Zp[i]) - 1.0 / d.C));
    kp = std::max(kp, norm(m, bracket(m, K.Zk[i], K.Zp[i]) - (1.0 / d.C) * d.H[i]));
    for (int j = 0; j < d.rank; ++j)
      if (i != j) cross = std::max(cross, norm(m, bracket(m, K.Zk[i], K.Zp[j])));
    const AlgVec& Ht = d.H_tilde[i];
    const AlgVec JH = apply_p(m, K.J0, Ht);
    zbr = std::max({zbr, norm(m, JH - 2.0 * K.Zp[i]), norm(m, bracket(m, Ht, K.Zk[i]) - 2.0 * K.Zp[i])});
    // J0 = ad(-Z_i^k) on a_i^C
    for (const AlgVec& v : {Ht, JH}) jp = std::max(jp, norm(m, bracket(m, -K.Zk[i], v) - apply_p(m, K.J0, v)));
    for (double th : {M_PI / 7, M_PI / 3}) {
      const Mat Ad = adjoint_exp(m, -th * K.Zk[i]);
      for (int j = 0; j < d.rank; ++j) {
        const AlgVec H = d.H_tilde[j];
        const AlgVec JHj = apply_p(m, K.J0, H);
        const AlgVec img{Ad * H.coeffs, H.home};
        const AlgVec jimg{Ad * JHj.coeffs, H.home};
        if (i == j) {
          torus = std::max(torus, norm(m, img - (std::cos(th) * H + std::sin(th) * JHj)));
          torus = std::max(torus, norm(m, jimg - (std::cos(th) * JHj - std::sin(th) * H)));
        } else {
          torus = std::max({torus, norm(m, img - H), norm(m, jimg - JHj)});
        }
      }
    }
  }
  out.push_back({"|Z_i^k|^2 = 1/C", nk});
  out.push_back({"|Z_i^p|^2 = 1/C", np});
  out.push_back({"[Z_i^k, Z_i^p] = H_i / C", kp});
  out.push_back({"[Z_i^k, Z_j^p] = 0", cross});
  out.push_back({"J0 H~_i = 2 Z_i^p = [H~_i, Z_i^k]", zbr});
  out.push_back({"J0 = ad(-Z_i^k) on a_i^C", jp});
  out.push_back({"torus rotation", torus});
  out.push_back({"zeta + sum Z_i^k in k0", proj_residual(m, K.Z0, d.k0_basis)});
  return out;
}

CMat su11_coordinate(double a, double b, double c) {
  using cd = std::complex<double>;
  CMat F1(2, 2), F2(2, 2);
  F1 << 0, 1, 1, 0;
  F2 << 0, cd(0, -1), cd(0, 1), 0;
  const CMat F3 = F1 * F2 - F2 * F1;
  return a * F1 + b * F2 + c * F3;
}

PolydiskData polydisk(const Model& m, const RootDatum& d, const KahlerData& K) {
  PolydiskData P;
  for (int i = 0; i < d.rank; ++i) {
    const AlgVec& H = d.H_tilde[i];
    const AlgVec JH = apply_p(m, K.J0, H);
    P.triples.push_back({H, JH, bracket(m, H, JH)});
  }
  for (const Residual& r : polydisk_checks(m, d, K, P))
    if (r.value > default_tolerances().isometry * std::max(1.0, 4.0 / d.C))
      throw Error(ErrorCode::BracketRelationFailure, r.name + " residual " + std::to_string(r.value));
  return P;
}

std::vector<Residual> polydisk_checks(const Model& m, const RootDatum& d, const KahlerData&,
                                      const PolydiskData& P) {
  std::vector<Residual> out;
  double su2 = 0.0, commute = 0.0, hom = 0.0, norms = 0.0;
  for (int i = 0; i < d.rank; ++i) {
    const auto& t = P.triples[i];
    su2 = std::max(su2, norm(m, bracket(m, t[2], t[1]) - 4.0 * t[0]));
    su2 = std::max(su2, norm(m, bracket(m, t[2], t[0]) + 4.0 * t[1]));
    for (int j = 0; j < d.rank; ++j)
      if (i != j)
        for (const AlgVec& x : t)
          for (const AlgVec& y : P.triples[j]) commute = std::max(commute, norm(m, bracket(m, x, y)));
    // f_i as the coordinate map onto su(1,1)
    auto coords = [&](const AlgVec& x, double* res) {
      Vec c(3);
      AlgVec r = x;
      for (int a = 0; a < 3; ++a) {
        c(a) = inner(m, x, t[a]) / inner(m, t[a], t[a]);
        r.coeffs -= c(a) * t[a].coeffs;
      }
      *res = norm(m, r);
      return c;
    };
    auto f = [](const Vec& c) { return su11_coordinate(c(0), c(1), c(2)); };
    for (int a = 0; a < 3; ++a) {
      double res = 0.0;
      const Vec ca = coords(t[a], &res);
      const CMat Fa = f(ca);
      const double n2 = (2.0 / d.C) * (Fa * Fa.adjoint()).trace().real();
      norms = std::max(norms, std::abs(n2 - inner(m, t[a], t[a])));
      for (int b = 0; b < 3; ++b) {
        const CMat Fb = f(coords(t[b], &res));
        const Vec cab = coords(bracket(m, t[a], t[b]), &res);
        hom = std::max({hom, res, (f(cab) - (Fa * Fb - Fb * Fa)).cwiseAbs().maxCoeff()});
      }
    }
  }
  out.push_back({"[[H~,J0H~],J0H~] = 4H~ and [[H~,J0H~],H~] = -4J0H~", su2});
  out.push_back({"[u_i, u_j] = 0", commute});
  out.push_back({"f_i bracket homomorphism", hom});
  out.push_back({"f_i norm preservation", norms});
  return out;
}

}  // namespace hssnt
