#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "hssnt/dual.hpp"
#include "hssnt/report.hpp"

namespace hssnt {

// E_v = phi(ad(v)^2 | p), phi(t) = sinh(sqrt t)/sqrt t (sin-type for t < 0).
Mat jacobi_operator(const Model& m, const AlgVec& v);

struct ChartKahler {
  Mat E;      // on p-coordinates
  Mat J;      // E^-1 J0 E
  Mat omega;  // omega0(E., E.)
};

ChartKahler chart_kahler(const Model& m, const Mat& J0, const Mat& omega0, const AlgVec& v);

using PMap = std::function<AlgVec(const AlgVec&)>;

struct Differential {
  AlgVec value;
  double richardson_gap = 0.0;
};

// 4th-order central differences at steps h and h/2, Richardson-combined.
Differential differential_fd(const PMap& f, const AlgVec& X, const AlgVec& u);
// Closed form at principal v = sum x_i H~_i: eta'(x_i) on a_i, alpha(w)/alpha(v) on p_alpha.
AlgVec differential_exact_axis(const Space& s, const OddMap& eta, const Vec& x, const AlgVec& u);

enum class DiffMode { finite_diff, exact_axis };
AlgVec differential(const Space& s, const OddMap& eta, const Vec& x, const AlgVec& u, DiffMode mode);

double evaluate_G(const RootDatum& d, const OddMap& eta, int root, const Vec& x);
double evaluate_F(const RootDatum& d, const OddMap& eta, int root, const Vec& x);
double evaluate_G_star(const RootDatum& d, const OddMap& eta_star, int root, const Vec& x);
double evaluate_F_star(const RootDatum& d, const OddMap& eta_star, int root, const Vec& x);

struct SampleOptions {
  int samples = 20;
  std::uint64_t seed = 1;
  double tol = 1e-5;
};

VerifyReport check_holomorphic(const Space& s, const PMap& f, const std::string& name, const SampleOptions& o);
VerifyReport check_symplectic(const Space& s, const PMap& f, const std::string& name, const SampleOptions& o);
// Dual versions: f maps p* to p*, samples strictly inside the cut cube (margin 0.1).
VerifyReport check_holomorphic(const Space& s, const DualSpace& d, const PMap& f, const std::string& name,
                               const SampleOptions& o);
VerifyReport check_symplectic(const Space& s, const DualSpace& d, const PMap& f, const std::string& name,
                              const SampleOptions& o);

// f(Ad(exp Z) X) = Ad(exp Z) f(X); X has spectral values in (0, hi].
VerifyReport check_equivariance(const Space& s, const PMap& f, const std::string& name, const SampleOptions& o,
                                double hi = 2.0, bool dual = false);
// Naive h-map over a pushed by the Weyl elements of all positive roots.
VerifyReport check_weyl_equivariance(const Space& s, const GeneralHMap& h, const std::string& name,
                                     const SampleOptions& o);

// Finite-difference J and omega of Omega_eta on each q_alpha against G and F.
VerifyReport check_block_scalars(const Space& s, const OddMap& eta, const SampleOptions& o);
VerifyReport check_exact_vs_fd(const Space& s, const OddMap& eta, const SampleOptions& o);

struct UniquenessResiduals {
  double holomorphic = 0.0;  // max |eta'/eta sinh(2x)/2 - 1|
  double symplectic = 0.0;   // max |sinh(2x)/(2 eta' eta) - 1|
};

UniquenessResiduals uniqueness_residuals(const OddMap& eta, int points = 400);

}  // namespace hssnt
