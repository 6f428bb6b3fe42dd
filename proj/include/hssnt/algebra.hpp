#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hssnt/config.hpp"

namespace hssnt {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

enum class Family { SU_PQ, SP_N_R, SU_11 };

struct SpaceSpec {
  Family family = Family::SU_11;
  int p = 1;  // n for SP_N_R
  int q = 1;

  static SpaceSpec su(int p, int q) { return {Family::SU_PQ, p, q}; }
  static SpaceSpec sp(int n) { return {Family::SP_N_R, n, 0}; }
  static SpaceSpec su11() { return {Family::SU_11, 1, 1}; }

  // Accepts "su:p,q", "sp:n" and "su11".
  static SpaceSpec parse(const std::string& s);
  std::string str() const;
  bool unitary() const { return family != Family::SP_N_R; }
  void validate() const;
};

// Which subspace of g (or of the compact dual) a vector lives in.
enum class Home { g, k, p, pstar };

const char* home_name(Home h);

template <typename Scalar>
struct BasicAlgVec {
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Coeffs coeffs;
  Home home = Home::g;

  BasicAlgVec() = default;
  BasicAlgVec(Coeffs c, Home h) : coeffs(std::move(c)), home(h) {}

  Eigen::Index size() const { return coeffs.size(); }

  BasicAlgVec& operator+=(const BasicAlgVec& o) {
    coeffs += o.coeffs;
    home = join(home, o.home);
    return *this;
  }
  BasicAlgVec& operator-=(const BasicAlgVec& o) {
    coeffs -= o.coeffs;
    home = join(home, o.home);
    return *this;
  }
  BasicAlgVec& operator*=(Scalar s) {
    coeffs *= s;
    return *this;
  }

  static Home join(Home a, Home b) { return a == b ? a : Home::g; }
};

template <typename S>
BasicAlgVec<S> operator+(BasicAlgVec<S> a, const BasicAlgVec<S>& b) { return a += b; }
template <typename S>
BasicAlgVec<S> operator-(BasicAlgVec<S> a, const BasicAlgVec<S>& b) { return a -= b; }
template <typename S>
BasicAlgVec<S> operator-(BasicAlgVec<S> a) { a.coeffs = -a.coeffs; return a; }
template <typename S>
BasicAlgVec<S> operator*(S s, BasicAlgVec<S> a) { return a *= s; }
template <typename S>
BasicAlgVec<S> operator*(BasicAlgVec<S> a, S s) { return a *= s; }

using AlgVec = BasicAlgVec<double>;

// A real Lie algebra g = k + p given by a real basis of complex matrices.
// The first dim_k basis vectors span k, the remaining dim_p span p.
struct Model {
  SpaceSpec spec;
  bool compact = false;  // the compact dual k + p*
  int dim_g = 0, dim_k = 0, dim_p = 0;
  int size = 0;  // matrix size of the defining representation

  std::vector<CMat> basis;
  std::vector<std::string> labels;
  Vec theta;
  // ad_basis[i](k, j) = c_{ij}^k, i.e. the matrix of ad(e_i).
  std::vector<Mat> ad_basis;
  Mat killing;
  Mat inner_gram;
  Mat inner_gram_p;

  std::vector<AlgVec> a_standard;
  AlgVec zeta_reference;

  Home p_home() const { return compact ? Home::pstar : Home::p; }
  AlgVec zero(Home h = Home::g) const { return {Vec::Zero(dim_g), h}; }
  AlgVec unit(int i) const;
  AlgVec from_p(const Vec& pc) const;
  Vec p_coords(const AlgVec& X) const;
  AlgVec from_k(const Vec& kc) const;
  Vec k_coords(const AlgVec& X) const;

  CMat to_matrix(const AlgVec& X) const;
  AlgVec from_matrix(const CMat& M, Home h) const;
  // Norm residual of M off the span of the basis.
  double span_residual(const CMat& M) const;

  void check(const AlgVec& X) const;
};

Model build_model(const SpaceSpec& spec);

// Fills structure constants, Killing form and inner product from the basis.
void finish_model(Model& m);
// Killing form, theta and inner product from ad_basis.
void finish_metric(Model& m);

AlgVec bracket(const Model& m, const AlgVec& X, const AlgVec& Y);
double killing(const Model& m, const AlgVec& X, const AlgVec& Y);
double inner(const Model& m, const AlgVec& X, const AlgVec& Y);
double norm(const Model& m, const AlgVec& X);
Mat ad_operator(const Model& m, const AlgVec& X);
// Matrix of Ad(exp Z) on g-coordinates.
Mat adjoint_exp(const Model& m, const AlgVec& Z);
AlgVec adjoint_action(const Model& m, const AlgVec& Z, const AlgVec& X);

// p-block of an operator on g-coordinates.
Mat p_block(const Model& m, const Mat& op);
double inner_p(const Model& m, const Vec& u, const Vec& w);

double jacobi_residual(const Model& m);
double grading_residual(const Model& m);
double theta_residual(const Model& m);
double ad_self_adjoint_residual(const Model& m);

}  // namespace hssnt
