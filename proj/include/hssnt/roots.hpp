#pragma once

#include <string>
#include <vector>

#include "hssnt/algebra.hpp"

namespace hssnt {

enum class SysType { C, BC };
enum class RootKind { gamma, lambda, lambda_bar, eps };

struct Root {
  Eigen::VectorXi e;  // coefficients in the e_i frame
  RootKind kind = RootKind::gamma;
  int bar = -1;       // index of the paired root: lambda <-> lambda_bar, eps <-> itself
  int multiplicity = 0;
  Vec covector;       // alpha on the orthonormal a-basis
  // [H, X^k] = alpha(H) X^p and [H, X^p] = alpha(H) X^k; p_basis is orthonormal.
  std::vector<AlgVec> k_basis, p_basis;
  std::string label;

  // alpha(sum x_i H~_i) = sum e_i x_i
  double at(const Vec& x) const { return e.cast<double>().dot(x); }
};

struct RootDatum {
  int rank = 0;
  SysType type = SysType::C;
  std::vector<AlgVec> a_basis;
  std::vector<AlgVec> a_orthonormal;
  std::vector<Root> positive;
  std::vector<int> gamma, lambda, lambda_bar, eps;  // indices into positive
  std::vector<AlgVec> H, H_tilde;
  double C = 0.0;
  std::vector<AlgVec> k0_basis;
  AlgVec h_generic;

  AlgVec from_a_coords(const Vec& x) const;
  // Coefficients of X in the H~ basis (X assumed in a).
  Vec a_coords(const Model& m, const AlgVec& X) const;
  // Index of the positive root with coefficient vector +-e; sign returned through *sign.
  int find(const Eigen::VectorXi& e, int* sign = nullptr) const;
  std::string type_name() const;
};

RootDatum restricted_roots(const Model& m);
SysType classify_type(const RootDatum& d);
std::string root_label(const Eigen::VectorXi& e);

// H_alpha from a root vector (B(X_a, X_-a) normalisation).
AlgVec root_vector_H(const Model& m, const Root& a);
// H_alpha obtained as the B-dual of the covector.
AlgVec covector_H(const RootDatum& d, const Root& a);

AlgVec weyl_reflect(const Model& m, const RootDatum& d, const Eigen::VectorXi& alpha,
                    const AlgVec& H);

struct SignedPermutation {
  std::vector<int> perm;   // rho(H~_i) = sign[i] * H~_{perm[i]}
  std::vector<int> sign;
  double residual = 0.0;
};

SignedPermutation weyl_signed_permutation(const Model& m, const RootDatum& d,
                                          const std::vector<Eigen::VectorXi>& word);

// Z in k with Ad(exp Z) restricting to rho_alpha on a.
AlgVec weyl_element(const Model& m, const RootDatum& d, const Eigen::VectorXi& alpha);

struct RootChecks {
  double reconstruction = 0.0;   // p = a + sum p_alpha
  double orthogonality = 0.0;    // <H_i, H_j> = C delta_ij
  double root_vector_vs_covector = 0.0;
  double kp_norms = 0.0;         // |X^k| = |X^p|
  double grading = 0.0;          // [k_a, p_b] in p_{a+b} + p_{a-b}
};

RootChecks root_checks(const Model& m, const RootDatum& d);

}  // namespace hssnt
