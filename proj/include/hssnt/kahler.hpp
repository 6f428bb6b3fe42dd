#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hssnt/roots.hpp"

namespace hssnt {

struct KahlerData {
  AlgVec zeta;
  Mat J0;      // on p-coordinates
  Mat omega0;  // omega0(u, w) = u^T omega0 w = <J0 u, w>
  std::vector<AlgVec> Zk, Zp;
  AlgVec Z0;   // k0-component of zeta
};

struct PolydiskData {
  // (H~_i, J0 H~_i, [H~_i, J0 H~_i]) for each i
  std::vector<std::array<AlgVec, 3>> triples;
};

AlgVec central_element(const Model& m);
std::pair<Mat, Mat> complex_structure(const Model& m, const AlgVec& zeta);
AlgVec apply_p(const Model& m, const Mat& op, const AlgVec& X);
double omega(const Mat& omega0, const Model& m, const AlgVec& u, const AlgVec& w);

// Fills Zk, Zp and Z0; throws DecompositionFailure on residuals above tolerance.
void z_basis(const Model& m, const RootDatum& d, KahlerData& K);

struct Residual {
  std::string name;
  double value = 0.0;
};

std::vector<Residual> verify_J_mapping(const Model& m, const RootDatum& d, const KahlerData& K);
std::vector<Residual> kahler_checks(const Model& m, const RootDatum& d, const KahlerData& K);

PolydiskData polydisk(const Model& m, const RootDatum& d, const KahlerData& K);
std::vector<Residual> polydisk_checks(const Model& m, const RootDatum& d, const KahlerData& K,
                                      const PolydiskData& P);

// su(1,1) image of a + b J0H~ + c [H~, J0H~] under f_i.
CMat su11_coordinate(double a, double b, double c);

}  // namespace hssnt
