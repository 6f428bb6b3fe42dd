#pragma once

#include <vector>

#include "hssnt/realize.hpp"

namespace hssnt {

// Compact dual g* = k + p*, p* = i p, sharing coordinates with the noncompact model.
struct DualSpace {
  Model model;                   // compact = true
  std::vector<AlgVec> H_tilde;   // iota(H~_i)
  Mat J0, omega0;
  SysType type = SysType::C;
  std::vector<int> multiplicity;  // m*_{alpha*}, indexed like the noncompact positive roots
};

DualSpace build_dual(const Space& s);

// Residuals of the dual construction: Jacobi, sign-flipped root relations, multiplicities, type, matrix route.
std::vector<Residual> dual_checks(const Space& s, const DualSpace& d);

bool cut_cube_membership(const Vec& x);

AlgVec omega_eta_star(const Space& s, const AlgVec& Xstar, const OddMap& eta_star);

// Dual diastatic pair on p*: sqrt(log(1+l^2)) and sqrt(e^{l^2}-1).
AlgVec diastatic_log_star(const Space& s, const AlgVec& Xstar);
AlgVec diastatic_exp_star(const Space& s, const AlgVec& Xstar);

}  // namespace hssnt
