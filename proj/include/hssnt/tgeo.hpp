#pragma once

#include <vector>

#include "hssnt/geomverify.hpp"

namespace hssnt {

// Abelian subspace of a, in H~ coordinates. Row m of `basis` is the canonical
// V_m = H~_{pivot[m]} + sum over non-pivot i of a_m^i H~_i.
struct AbelianSubspace {
  int rank = 0;
  Mat basis;
  std::vector<int> pivots;

  int dim() const { return int(basis.rows()); }
  // a_m^i for i outside the pivot set
  double coeff(int m, int i) const { return basis(m, i); }
};

// Rows of `vectors` are spanning vectors in H~ coordinates.
AbelianSubspace canonical_basis(const Mat& vectors);

bool has_clts(const AbelianSubspace& sub, double tol = 1e-10);

// Largest projection residual of [[u,v],w] off span(vectors) over an orthonormal basis.
double lts_residual(const Space& s, const std::vector<AlgVec>& vectors);
bool verify_lts(const Space& s, const std::vector<AlgVec>& vectors, double tol = 1e-9);

// V_m as algebra vectors, and the real span of V_m and J0 V_m.
std::vector<AlgVec> subspace_vectors(const Space& s, const AbelianSubspace& sub);
std::vector<AlgVec> complexified(const Space& s, const std::vector<AlgVec>& V);

double abra_residual(const Space& s, const std::vector<AlgVec>& V);
bool abra_check(const Space& s, const std::vector<AlgVec>& V, double tol = 1e-9);

// odd_calculus(sum x_m V_m) = sum eta(x_m) V_m on random coefficients.
VerifyReport restriction_check(const Space& s, const AbelianSubspace& sub, const OddMap& eta,
                               const SampleOptions& o);

struct GridCell {
  AbelianSubspace sub;
  bool clts = false, lts = false, abra = false;
  std::vector<bool> restriction;  // one per eta
};

struct GridSummary {
  std::vector<GridCell> cells;
  int route_disagreements = 0;        // has_clts, verify_lts, abra_check differ
  int restriction_disagreements = 0;  // restriction passes but not CLTS, or the reverse
  std::vector<Vec> clts_lines;        // distinct canonical directions of 1-dimensional CLTS
};

// Every ordered spanning list of one or two vectors with coefficients in {-1,-1/2,0,1/2,1}.
GridSummary rank2_grid(const Space& s, const std::vector<OddMap>& etas, const SampleOptions& o);

}  // namespace hssnt
