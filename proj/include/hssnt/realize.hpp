#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hssnt/odd_map.hpp"
#include "hssnt/space.hpp"

namespace hssnt {

// {u,v,w} = 1/2([[u,v],w] + J0[[u,J0 v],w])
AlgVec triple_product(const Space& s, const AlgVec& u, const AlgVec& v, const AlgVec& w);
Mat D_operator(const Space& s, const AlgVec& u, const AlgVec& v);  // w -> {u,v,w}
Mat Q_operator(const Space& s, const AlgVec& z);                   // w -> 1/2 {z,w,z}

struct SpectralDecomp {
  std::vector<double> values;       // strictly decreasing, positive
  std::vector<AlgVec> tripotents;
};

struct Certificate {
  double reconstruction = 0.0;
  double tripotent = 0.0;
  double orthogonality = 0.0;
};

// X = sum lambda_i c_i; p*-vectors are transported through iota and the
// tripotents come back tagged p*.
SpectralDecomp spectral_decompose(const Space& s, const AlgVec& X);
Certificate certify(const Space& s, const AlgVec& X, const SpectralDecomp& sd);

AlgVec iota(const AlgVec& X);      // p -> p*, identity on coefficients
AlgVec iota_inv(const AlgVec& X);  // p* -> p

AlgVec odd_calculus(const Space& s, const AlgVec& X, const OddMap& eta);
AlgVec odd_calculus(const SpectralDecomp& sd, const OddMap& eta, const AlgVec& like);

AlgVec harish_chandra(const Space& s, const AlgVec& X);
AlgVec symplecto(const Space& s, const AlgVec& X);
AlgVec diastatic_log(const Space& s, const AlgVec& Z);
AlgVec diastatic_exp(const Space& s, const AlgVec& X);

Mat bergman_operator(const Space& s, const AlgVec& z);
AlgVec dsl_roos_map(const Space& s, const AlgVec& z);

AlgVec gudermann_composite(const Space& s, const AlgVec& X);

struct GeneralHMap {
  std::function<double(const Vec&)> h;
  int rank = 0;
};

// sum_i h(p_1i x) H~_i
AlgVec general_h_map(const Space& s, const GeneralHMap& h, const Vec& x);

struct HConditions {
  double odd_first = 0.0;       // h(-x1, ...) = -h(x)
  double even_rest = 0.0;       // h(..., -xj, ...) = h(x), j > 1
  double symmetric_rest = 0.0;  // h(p_ij x) = h(x), i, j > 1
  bool pass(double tol) const { return odd_first <= tol && even_rest <= tol && symmetric_rest <= tol; }
};

HConditions check_h_conditions(const GeneralHMap& h, int samples, std::uint64_t seed);

bool domain_membership(const Space& s, const AlgVec& w, const OddMap& eta);

}  // namespace hssnt
