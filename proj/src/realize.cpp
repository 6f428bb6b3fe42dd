#include "hssnt/realize.hpp"

#include <algorithm>
#include <cmath>

#include "hssnt/sampling.hpp"

namespace hssnt {

namespace {

AlgVec as_p(const AlgVec& X) { return X.home == Home::pstar ? iota_inv(X) : X; }

struct Piece {
  double sigma;
  CMat T;
};

// Rank-one pieces X = sum sigma_k T_k of the defining matrix of X in p.
std::vector<Piece> matrix_pieces(const Space& s, const AlgVec& X) {
  const Model& m = s.model;
  const CMat M = m.to_matrix(X);
  std::vector<Piece> out;
  if (m.spec.unitary()) {
    const int p = m.spec.p, q = m.spec.q;
    const CMat Z = M.topRightCorner(p, q);
    const Eigen::JacobiSVD<CMat> svd(Z, Eigen::ComputeThinU | Eigen::ComputeThinV);
    for (int k = 0; k < svd.singularValues().size(); ++k) {
      const CMat u = svd.matrixU().col(k), v = svd.matrixV().col(k);
      CMat T = CMat::Zero(p + q, p + q);
      T.topRightCorner(p, q) = u * v.adjoint();
      T.bottomLeftCorner(q, p) = v * u.adjoint();
      out.push_back({svd.singularValues()(k), T});
    }
  } else {
    // Takagi factorisation of W = A + iB through the real symmetric [[A,B],[B,-A]]
    const int n = m.spec.p;
    const Mat S = M.real();
    const Eigen::SelfAdjointEigenSolver<Mat> es(S);
    for (int k = 0; k < 2 * n; ++k) {
      const double sig = es.eigenvalues()(k);
      if (sig <= 0) continue;
      const Vec xy = es.eigenvectors().col(k);
      const Eigen::VectorXcd u = xy.head(n).cast<std::complex<double>>() +
                                 std::complex<double>(0, 1) * xy.tail(n).cast<std::complex<double>>();
      const CMat W = u * u.transpose();
      CMat T(2 * n, 2 * n);
      T << W.real().cast<std::complex<double>>(), W.imag().cast<std::complex<double>>(),
          W.imag().cast<std::complex<double>>(), -W.real().cast<std::complex<double>>();
      out.push_back({sig, T});
    }
  }
  return out;
}

}  // namespace

AlgVec iota(const AlgVec& X) {
  AlgVec Y = X;
  if (Y.home == Home::p) Y.home = Home::pstar;
  return Y;
}

AlgVec iota_inv(const AlgVec& X) {
  AlgVec Y = X;
  if (Y.home == Home::pstar) Y.home = Home::p;
  return Y;
}

AlgVec triple_product(const Space& s, const AlgVec& u, const AlgVec& v, const AlgVec& w) {
  const Model& m = s.model;
  const Mat& J = s.kahler.J0;
  const AlgVec a = bracket(m, bracket(m, u, v), w);
  const AlgVec Jv = m.from_p(J * m.p_coords(v));
  const AlgVec b = bracket(m, bracket(m, u, Jv), w);
  Vec out = 0.5 * (m.p_coords(a) + J * m.p_coords(b));
  return m.from_p(out);
}

Mat D_operator(const Space& s, const AlgVec& u, const AlgVec& v) {
  const Model& m = s.model;
  const Mat& J = s.kahler.J0;
  // w -> 1/2 (ad([u,v]) + J0 ad([u,J0 v])) restricted to p
  const AlgVec Jv = m.from_p(J * m.p_coords(v));
  const Mat A = p_block(m, ad_operator(m, bracket(m, u, v)));
  const Mat B = p_block(m, ad_operator(m, bracket(m, u, Jv)));
  return 0.5 * (A + J * B);
}

Mat Q_operator(const Space& s, const AlgVec& z) {
  const Model& m = s.model;
  Mat Q(m.dim_p, m.dim_p);
  for (int j = 0; j < m.dim_p; ++j) {
    const AlgVec e = m.unit(m.dim_k + j);
    Q.col(j) = 0.5 * m.p_coords(triple_product(s, z, e, z));
  }
  return Q;
}

SpectralDecomp spectral_decompose(const Space& s, const AlgVec& Xin) {
  const ToleranceConfig& tol = default_tolerances();
  const AlgVec X = as_p(Xin);
  const Model& m = s.model;
  if (m.k_coords(X).cwiseAbs().maxCoeff() > 0.0)
    throw Error(ErrorCode::ModelMismatch, "spectral decomposition needs a p-vector");
  SpectralDecomp sd;
  std::vector<Piece> pieces = matrix_pieces(s, X);
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.sigma > b.sigma; });
  const double top = pieces.empty() ? 0.0 : pieces.front().sigma;
  const double floor = 1e-13 * std::max(1.0, top);
  const double s0 = s.tripotent_scale;
  for (size_t i = 0; i < pieces.size();) {
    if (pieces[i].sigma <= floor) break;
    size_t j = i;
    double sum = 0.0;
    CMat T = CMat::Zero(m.size, m.size);
    while (j < pieces.size() && pieces[j].sigma > floor &&
           pieces[i].sigma - pieces[j].sigma <= tol.spectral_merge * std::max(1.0, top)) {
      sum += pieces[j].sigma;
      T += pieces[j].T;
      ++j;
    }
    AlgVec c = m.from_matrix(s0 * T, Home::p);
    c.coeffs.head(m.dim_k).setZero();
    sd.values.push_back(sum / double(j - i) / s0);
    sd.tripotents.push_back(c);
    i = j;
  }
  const Certificate cert = certify(s, X, sd);
  const double scale = std::max(1.0, norm(m, X));
  if (cert.reconstruction > tol.reconstruction * scale || cert.tripotent > tol.tripotent ||
      cert.orthogonality > tol.tripotent)
    throw Error(ErrorCode::CertificateFailure,
                "spectral certificate failed (reconstruction " + std::to_string(cert.reconstruction) +
                    ", tripotent " + std::to_string(cert.tripotent) + ", orthogonality " +
                    std::to_string(cert.orthogonality) + ")");
  if (Xin.home == Home::pstar)
    for (AlgVec& c : sd.tripotents) c = iota(c);
  return sd;
}

Certificate certify(const Space& s, const AlgVec& Xin, const SpectralDecomp& sd) {
  const Model& m = s.model;
  const AlgVec X = as_p(Xin);
  Certificate c;
  AlgVec sum = m.zero(Home::p);
  std::vector<AlgVec> cs;
  for (const AlgVec& t : sd.tripotents) cs.push_back(as_p(t));
  for (size_t i = 0; i < cs.size(); ++i) sum.coeffs += sd.values[i] * cs[i].coeffs;
  c.reconstruction = norm(m, sum - X);
  for (size_t i = 0; i < cs.size(); ++i) {
    const double ni = norm(m, cs[i]);
    c.tripotent = std::max(c.tripotent, norm(m, triple_product(s, cs[i], cs[i], cs[i]) - 2.0 * cs[i]) / ni);
    for (size_t j = 0; j < cs.size(); ++j)
      if (i != j)
        c.orthogonality = std::max(c.orthogonality, D_operator(s, cs[i], cs[j]).cwiseAbs().maxCoeff());
  }
  return c;
}

AlgVec odd_calculus(const SpectralDecomp& sd, const OddMap& eta, const AlgVec& like) {
  AlgVec out{Vec::Zero(like.size()), like.home};
  if (!sd.values.empty() && sd.values.front() >= eta.radius)
    throw Error(ErrorCode::DomainExceeded, "spectral value " + std::to_string(sd.values.front()) +
                                               " outside the domain of " + eta.name);
  for (size_t i = 0; i < sd.values.size(); ++i) out.coeffs += eta(sd.values[i]) * sd.tripotents[i].coeffs;
  return out;
}

AlgVec odd_calculus(const Space& s, const AlgVec& X, const OddMap& eta) {
  return odd_calculus(spectral_decompose(s, X), eta, X);
}

AlgVec harish_chandra(const Space& s, const AlgVec& X) { return odd_calculus(s, X, builtin_odd("tanh")); }

AlgVec symplecto(const Space& s, const AlgVec& X) { return odd_calculus(s, X, builtin_odd("sinh")); }

AlgVec diastatic_log(const Space& s, const AlgVec& Z) {
  OddMap e;
  e.name = "diastatic_log";
  e.radius = 1.0;
  e.eval = [](double l) { return std::sqrt(-std::log1p(-l * l)); };
  return odd_calculus(s, Z, e);
}

AlgVec diastatic_exp(const Space& s, const AlgVec& X) {
  OddMap e;
  e.name = "diastatic_exp";
  e.eval = [](double l) { return std::sqrt(-std::expm1(-l * l)); };
  return odd_calculus(s, X, e);
}

Mat bergman_operator(const Space& s, const AlgVec& z) {
  const Model& m = s.model;
  const Mat Q = Q_operator(s, z);
  return Mat::Identity(m.dim_p, m.dim_p) - D_operator(s, z, z) + Q * Q;
}

AlgVec dsl_roos_map(const Space& s, const AlgVec& z) {
  const Model& m = s.model;
  const SpectralDecomp sd = spectral_decompose(s, z);
  if (!sd.values.empty() && sd.values.front() >= 1.0)
    throw Error(ErrorCode::NotPositiveDefinite, "point outside the bounded domain");
  const Mat B = bergman_operator(s, z);
  const Mat& G = m.inner_gram_p;
  Mat S = G * B;
  S = 0.5 * (S + S.transpose()).eval();
  const Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(S, G);
  const Vec ev = es.eigenvalues();
  if (ev.minCoeff() <= default_tolerances().eigen_floor)
    throw Error(ErrorCode::NotPositiveDefinite, "Bergman operator is not positive definite");
  const Mat& V = es.eigenvectors();
  const Mat P = V * ev.array().pow(-0.25).matrix().asDiagonal() * V.transpose() * G;
  return m.from_p(P * m.p_coords(z));
}

AlgVec gudermann_composite(const Space& s, const AlgVec& X) {
  return iota(odd_calculus(s, X, builtin_odd("gd")));
}

AlgVec general_h_map(const Space& s, const GeneralHMap& h, const Vec& x) {
  const int r = s.roots.rank;
  if (h.rank != r || x.size() != r) throw Error(ErrorCode::RankMismatch, "h-map rank differs from space rank");
  Vec y(r);
  for (int i = 0; i < r; ++i) {
    Vec px = x;
    std::swap(px(0), px(i));
    y(i) = h.h(px);
  }
  return s.roots.from_a_coords(y);
}

HConditions check_h_conditions(const GeneralHMap& h, int samples, std::uint64_t seed) {
  HConditions c;
  const int r = h.rank;
  for (int n = 0; n < samples; ++n) {
    Rng rng = sample_rng(seed, std::uint64_t(n));
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    Vec x(r);
    for (int i = 0; i < r; ++i) x(i) = u(rng);
    const double hx = h.h(x);
    Vec y = x;
    y(0) = -y(0);
    c.odd_first = std::max(c.odd_first, std::abs(h.h(y) + hx));
    for (int j = 1; j < r; ++j) {
      y = x;
      y(j) = -y(j);
      c.even_rest = std::max(c.even_rest, std::abs(h.h(y) - hx));
      for (int k = j + 1; k < r; ++k) {
        y = x;
        std::swap(y(j), y(k));
        c.symmetric_rest = std::max(c.symmetric_rest, std::abs(h.h(y) - hx));
      }
    }
  }
  return c;
}

bool domain_membership(const Space& s, const AlgVec& w, const OddMap& eta) {
  const SpectralDecomp sd = spectral_decompose(s, w);
  return sd.values.empty() || sd.values.front() < eta.saturation;
}

}  // namespace hssnt
