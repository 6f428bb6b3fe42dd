#include "hssnt/algebra.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <regex>

namespace hssnt {

namespace {

using cd = std::complex<double>;
const cd I(0.0, 1.0);

CMat elem(int n, int a, int b) {
  CMat E = CMat::Zero(n, n);
  E(a, b) = 1.0;
  return E;
}

double real_inner(const CMat& A, const CMat& B) { return (A * B.adjoint()).trace().real(); }

// Orthonormal basis of the sum-zero real vectors of length n (Helmert).
std::vector<Vec> helmert(int n) {
  std::vector<Vec> out;
  for (int k = 1; k < n; ++k) {
    Vec h = Vec::Zero(n);
    h.head(k).setOnes();
    h(k) = -k;
    out.push_back(h / std::sqrt(double(k) * (k + 1)));
  }
  return out;
}

void build_su(Model& m, int p, int q) {
  const int n = p + q;
  m.size = n;
  const double r2 = std::sqrt(2.0);
  auto add = [&](CMat M, std::string label) {
    m.basis.push_back(std::move(M));
    m.labels.push_back(std::move(label));
  };
  // k = s(u(p) + u(q))
  auto block = [&](int off, int len, const char* tag) {
    for (int a = 0; a < len; ++a)
      for (int b = a + 1; b < len; ++b) {
        add((elem(n, off + a, off + b) - elem(n, off + b, off + a)) / r2,
            std::string(tag) + "R" + std::to_string(a + 1) + std::to_string(b + 1));
        add(I * (elem(n, off + a, off + b) + elem(n, off + b, off + a)) / r2,
            std::string(tag) + "I" + std::to_string(a + 1) + std::to_string(b + 1));
      }
  };
  block(0, p, "kA");
  block(p, q, "kD");
  int d = 0;
  for (const Vec& h : helmert(n)) {
    CMat M = CMat::Zero(n, n);
    for (int a = 0; a < n; ++a) M(a, a) = I * h(a);
    add(M, "kH" + std::to_string(++d));
  }
  m.dim_k = int(m.basis.size());
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) {
      const int c = p + b;
      const std::string ix = std::to_string(a + 1) + std::to_string(b + 1);
      add((elem(n, a, c) + elem(n, c, a)) / r2, "pR" + ix);
      add(I * (elem(n, a, c) - elem(n, c, a)) / r2, "pI" + ix);
    }
  m.dim_g = int(m.basis.size());
  m.dim_p = m.dim_g - m.dim_k;

  for (int k = 0; k < p; ++k)
    m.a_standard.push_back(m.from_matrix(elem(n, k, p + k) + elem(n, p + k, k), Home::p));
  CMat z = CMat::Zero(n, n);
  for (int a = 0; a < n; ++a) z(a, a) = (a < p ? -double(q) : double(p)) * I / double(n);
  m.zeta_reference = m.from_matrix(z, Home::k);
}

void build_sp(Model& m, int n) {
  m.size = 2 * n;
  auto add = [&](const Mat& A, const Mat& B, const Mat& C, const Mat& D, double scale,
                 std::string label) {
    CMat M = CMat::Zero(2 * n, 2 * n);
    M.topLeftCorner(n, n) = A.cast<cd>();
    M.topRightCorner(n, n) = B.cast<cd>();
    M.bottomLeftCorner(n, n) = C.cast<cd>();
    M.bottomRightCorner(n, n) = D.cast<cd>();
    m.basis.push_back(M * scale);
    m.labels.push_back(std::move(label));
  };
  const Mat O = Mat::Zero(n, n);
  auto sym = [&](int a, int b) {
    Mat S = Mat::Zero(n, n);
    S(a, b) = 1.0;
    S(b, a) = 1.0;
    return S;
  };
  auto skew = [&](int a, int b) {
    Mat S = Mat::Zero(n, n);
    S(a, b) = 1.0;
    S(b, a) = -1.0;
    return S;
  };
  auto ix = [](int a, int b) { return std::to_string(a + 1) + std::to_string(b + 1); };
  // k = [[A,B],[-B,A]], A skew, B symmetric
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) add(skew(a, b), O, O, skew(a, b), 0.5, "kA" + ix(a, b));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      const Mat S = sym(a, b);
      add(O, S, -S, O, a == b ? 1.0 / std::sqrt(2.0) : 0.5, "kB" + ix(a, b));
    }
  m.dim_k = int(m.basis.size());
  // p = [[A,B],[B,-A]], A and B symmetric
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      const Mat S = sym(a, b);
      add(S, O, O, -S, a == b ? 1.0 / std::sqrt(2.0) : 0.5, "pA" + ix(a, b));
    }
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      const Mat S = sym(a, b);
      add(O, S, S, O, a == b ? 1.0 / std::sqrt(2.0) : 0.5, "pB" + ix(a, b));
    }
  m.dim_g = int(m.basis.size());
  m.dim_p = m.dim_g - m.dim_k;

  for (int k = 0; k < n; ++k) {
    CMat H = CMat::Zero(2 * n, 2 * n);
    H(k, k) = 1.0;
    H(n + k, n + k) = -1.0;
    m.a_standard.push_back(m.from_matrix(H, Home::p));
  }
  CMat z = CMat::Zero(2 * n, 2 * n);
  z.topRightCorner(n, n) = CMat::Identity(n, n);
  z.bottomLeftCorner(n, n) = -CMat::Identity(n, n);
  m.zeta_reference = m.from_matrix(0.5 * z, Home::k);
}

}  // namespace

SpaceSpec SpaceSpec::parse(const std::string& s) {
  static const std::regex su_re(R"(\s*su\s*:\s*(\d+)\s*,\s*(\d+)\s*)");
  static const std::regex sp_re(R"(\s*sp\s*:\s*(\d+)\s*)");
  static const std::regex su11_re(R"(\s*su11\s*)");
  std::smatch mt;
  SpaceSpec out;
  if (std::regex_match(s, mt, su_re)) {
    out = su(std::stoi(mt[1]), std::stoi(mt[2]));
  } else if (std::regex_match(s, mt, sp_re)) {
    out = sp(std::stoi(mt[1]));
  } else if (std::regex_match(s, su11_re)) {
    out = su11();
  } else {
    throw Error(ErrorCode::InvalidSpec, "cannot parse space '" + s + "'");
  }
  out.validate();
  return out;
}

std::string SpaceSpec::str() const {
  switch (family) {
    case Family::SU_11: return "su:1,1";
    case Family::SU_PQ: return "su:" + std::to_string(p) + "," + std::to_string(q);
    case Family::SP_N_R: return "sp:" + std::to_string(p);
  }
  return "?";
}

void SpaceSpec::validate() const {
  switch (family) {
    case Family::SU_11:
      if (p != 1 || q != 1) throw Error(ErrorCode::InvalidSpec, "SU_11 must have p = q = 1");
      break;
    case Family::SU_PQ:
      if (p < 1 || q < p) throw Error(ErrorCode::InvalidSpec, "need 1 <= p <= q");
      break;
    case Family::SP_N_R:
      if (p < 1) throw Error(ErrorCode::InvalidSpec, "need n >= 1");
      break;
  }
}

const char* home_name(Home h) {
  switch (h) {
    case Home::g: return "g";
    case Home::k: return "k";
    case Home::p: return "p";
    case Home::pstar: return "p*";
  }
  return "?";
}

AlgVec Model::unit(int i) const {
  Vec c = Vec::Zero(dim_g);
  c(i) = 1.0;
  return {c, i < dim_k ? Home::k : p_home()};
}

AlgVec Model::from_p(const Vec& pc) const {
  if (pc.size() != dim_p) throw Error(ErrorCode::ModelMismatch, "p-coordinate length");
  Vec c = Vec::Zero(dim_g);
  c.tail(dim_p) = pc;
  return {c, p_home()};
}

Vec Model::p_coords(const AlgVec& X) const {
  check(X);
  return X.coeffs.tail(dim_p);
}

AlgVec Model::from_k(const Vec& kc) const {
  if (kc.size() != dim_k) throw Error(ErrorCode::ModelMismatch, "k-coordinate length");
  Vec c = Vec::Zero(dim_g);
  c.head(dim_k) = kc;
  return {c, Home::k};
}

Vec Model::k_coords(const AlgVec& X) const {
  check(X);
  return X.coeffs.head(dim_k);
}

CMat Model::to_matrix(const AlgVec& X) const {
  check(X);
  CMat M = CMat::Zero(size, size);
  for (int i = 0; i < dim_g; ++i)
    if (X.coeffs(i) != 0.0) M += X.coeffs(i) * basis[i];
  return M;
}

AlgVec Model::from_matrix(const CMat& M, Home h) const {
  Vec c(dim_g);
  for (int i = 0; i < dim_g; ++i) c(i) = real_inner(M, basis[i]);
  return {c, h};
}

double Model::span_residual(const CMat& M) const {
  CMat R = M;
  for (int i = 0; i < dim_g; ++i) R -= real_inner(M, basis[i]) * basis[i];
  return R.norm();
}

void Model::check(const AlgVec& X) const {
  if (X.coeffs.size() != dim_g)
    throw Error(ErrorCode::ModelMismatch, "vector of length " + std::to_string(X.coeffs.size()) +
                                              " in a model of dimension " + std::to_string(dim_g));
  if ((compact && X.home == Home::p) || (!compact && X.home == Home::pstar))
    throw Error(ErrorCode::ModelMismatch,
                std::string(home_name(X.home)) + "-vector used in the " +
                    (compact ? "compact dual" : "noncompact") + " model");
}

void finish_model(Model& m) {
  const int d = m.dim_g;
  m.ad_basis.assign(d, Mat::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const CMat Cm = m.basis[i] * m.basis[j] - m.basis[j] * m.basis[i];
      for (int k = 0; k < d; ++k) {
        const double c = real_inner(Cm, m.basis[k]);
        m.ad_basis[i](k, j) = c;
        m.ad_basis[j](k, i) = -c;
      }
    }
  finish_metric(m);
}

void finish_metric(Model& m) {
  const int d = m.dim_g;
  m.theta = Vec::Ones(d);
  m.theta.tail(m.dim_p).setConstant(-1.0);
  m.killing.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const double b = (m.ad_basis[i] * m.ad_basis[j]).trace();
      m.killing(i, j) = m.killing(j, i) = b;
    }
  if (m.compact)
    m.inner_gram = -m.killing;
  else
    m.inner_gram = -m.killing * m.theta.asDiagonal();
  m.inner_gram = 0.5 * (m.inner_gram + m.inner_gram.transpose()).eval();
  m.inner_gram_p = m.inner_gram.bottomRightCorner(m.dim_p, m.dim_p);
}

Model build_model(const SpaceSpec& spec) {
  spec.validate();
  Model m;
  m.spec = spec;
  if (spec.unitary())
    build_su(m, spec.p, spec.q);
  else
    build_sp(m, spec.p);
  finish_model(m);
  for (int i = 0; i < m.dim_g; ++i)
    for (int j = i + 1; j < m.dim_g; ++j)
      if (m.span_residual(m.basis[i] * m.basis[j] - m.basis[j] * m.basis[i]) > 1e-12)
        throw Error(ErrorCode::InvalidSpec, "basis is not closed under brackets");
  const Eigen::SelfAdjointEigenSolver<Mat> es(m.inner_gram);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw Error(ErrorCode::InvalidSpec, "inner product is not positive definite");
  return m;
}

static Home bracket_home(const Model& m, Home a, Home b) {
  const Home p = m.p_home();
  if (a == Home::k && b == Home::k) return Home::k;
  if ((a == Home::k && b == p) || (a == p && b == Home::k)) return p;
  if (a == p && b == p) return Home::k;
  return Home::g;
}

Mat ad_operator(const Model& m, const AlgVec& X) {
  m.check(X);
  Mat A = Mat::Zero(m.dim_g, m.dim_g);
  for (int i = 0; i < m.dim_g; ++i)
    if (X.coeffs(i) != 0.0) A += X.coeffs(i) * m.ad_basis[i];
  return A;
}

AlgVec bracket(const Model& m, const AlgVec& X, const AlgVec& Y) {
  m.check(Y);
  return {ad_operator(m, X) * Y.coeffs, bracket_home(m, X.home, Y.home)};
}

double killing(const Model& m, const AlgVec& X, const AlgVec& Y) {
  m.check(X);
  m.check(Y);
  return X.coeffs.dot(m.killing * Y.coeffs);
}

double inner(const Model& m, const AlgVec& X, const AlgVec& Y) {
  m.check(X);
  m.check(Y);
  return X.coeffs.dot(m.inner_gram * Y.coeffs);
}

double norm(const Model& m, const AlgVec& X) { return std::sqrt(std::max(0.0, inner(m, X, X))); }

double inner_p(const Model& m, const Vec& u, const Vec& w) { return u.dot(m.inner_gram_p * w); }

Mat adjoint_exp(const Model& m, const AlgVec& Z) {
  const Mat A = ad_operator(m, Z);
  return A.exp();
}

AlgVec adjoint_action(const Model& m, const AlgVec& Z, const AlgVec& X) {
  m.check(X);
  return {adjoint_exp(m, Z) * X.coeffs, X.home};
}

Mat p_block(const Model& m, const Mat& op) {
  return op.bottomRightCorner(m.dim_p, m.dim_p);
}

double jacobi_residual(const Model& m) {
  const int d = m.dim_g;
  double worst = 0.0;
  // [e_i, [e_j, .]] - [e_j, [e_i, .]] = [[e_i, e_j], .]
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Mat R = m.ad_basis[i] * m.ad_basis[j] - m.ad_basis[j] * m.ad_basis[i];
      for (int k = 0; k < d; ++k) {
        const double c = m.ad_basis[i](k, j);
        if (c != 0.0) R -= c * m.ad_basis[k];
      }
      worst = std::max(worst, R.cwiseAbs().maxCoeff());
    }
  return worst;
}

double grading_residual(const Model& m) {
  double worst = 0.0;
  for (int i = 0; i < m.dim_g; ++i)
    for (int j = 0; j < m.dim_g; ++j) {
      const bool ik = i < m.dim_k, jk = j < m.dim_k;
      const Vec col = m.ad_basis[i].col(j);
      // [k,k] and [p,p] land in k; [k,p] lands in p
      const bool target_k = ik == jk;
      const double off = target_k ? col.tail(m.dim_p).cwiseAbs().maxCoeff()
                                  : col.head(m.dim_k).cwiseAbs().maxCoeff();
      worst = std::max(worst, off);
    }
  return worst;
}

double theta_residual(const Model& m) {
  double worst = 0.0;
  const auto T = m.theta.asDiagonal();
  for (int i = 0; i < m.dim_g; ++i)
    for (int j = 0; j < m.dim_g; ++j) {
      const Vec lhs = T * m.ad_basis[i].col(j);
      const Vec rhs = m.theta(i) * m.theta(j) * m.ad_basis[i].col(j);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return worst;
}

double ad_self_adjoint_residual(const Model& m) {
  double worst = 0.0;
  const Mat& G = m.inner_gram;
  for (int i = m.dim_k; i < m.dim_g; ++i) {
    const Mat S = G * m.ad_basis[i];
    // p elements act self-adjointly in the noncompact inner product, skew in the compact one
    const Mat R = m.compact ? Mat(S + S.transpose()) : Mat(S - S.transpose());
    worst = std::max(worst, R.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace hssnt
