#include "hssnt/tgeo.hpp"

#include <cmath>

#include "hssnt/sampling.hpp"

namespace hssnt {

AbelianSubspace canonical_basis(const Mat& vectors) {
  Mat A = vectors;
  const int rows = int(A.rows()), cols = int(A.cols());
  const double tol = 1e-12 * std::max(1.0, A.size() ? A.cwiseAbs().maxCoeff() : 0.0);
  AbelianSubspace sub;
  sub.rank = cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = r;
    for (int i = r + 1; i < rows; ++i)
      if (std::abs(A(i, c)) > std::abs(A(best, c))) best = i;
    if (std::abs(A(best, c)) <= tol) continue;
    A.row(r).swap(A.row(best));
    A.row(r) /= A(r, c);
    for (int i = 0; i < rows; ++i)
      if (i != r) A.row(i) -= A(i, c) * A.row(r);
    A(r, c) = 1.0;
    sub.pivots.push_back(c);
    ++r;
  }
  if (r < rows) throw Error(ErrorCode::DependentInput, "spanning vectors are linearly dependent");
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c)
      if (std::abs(A(i, c)) <= tol) A(i, c) = 0.0;
  sub.basis = A;
  return sub;
}

bool has_clts(const AbelianSubspace& sub, double tol) {
  for (int i = 0; i < sub.rank; ++i) {
    int nonzero = 0;
    for (int m = 0; m < sub.dim(); ++m) {
      const double a = sub.coeff(m, i);
      if (std::abs(a) <= tol) continue;
      ++nonzero;
      if (std::abs(std::abs(a) - 1.0) > tol) return false;
    }
    if (nonzero > 1) return false;
  }
  return true;
}

double lts_residual(const Space& s, const std::vector<AlgVec>& vectors) {
  const Model& m = s.model;
  std::vector<AlgVec> e;
  for (const AlgVec& v : vectors) {
    AlgVec w = v;
    for (const AlgVec& b : e) w -= inner(m, w, b) * b;
    const double n = norm(m, w);
    if (n > 1e-10 * std::max(1.0, norm(m, v))) e.push_back((1.0 / n) * w);
  }
  double worst = 0.0;
  for (const AlgVec& u : e)
    for (const AlgVec& v : e) {
      const AlgVec uv = bracket(m, u, v);
      for (const AlgVec& w : e) {
        AlgVec t = bracket(m, uv, w);
        for (const AlgVec& b : e) t -= inner(m, t, b) * b;
        worst = std::max(worst, norm(m, t));
      }
    }
  return worst;
}

bool verify_lts(const Space& s, const std::vector<AlgVec>& vectors, double tol) {
  return lts_residual(s, vectors) < tol;
}

std::vector<AlgVec> subspace_vectors(const Space& s, const AbelianSubspace& sub) {
  std::vector<AlgVec> V;
  for (int i = 0; i < sub.dim(); ++i) V.push_back(s.roots.from_a_coords(sub.basis.row(i).transpose()));
  return V;
}

std::vector<AlgVec> complexified(const Space& s, const std::vector<AlgVec>& V) {
  std::vector<AlgVec> out = V;
  for (const AlgVec& v : V) out.push_back(apply_p(s.model, s.kahler.J0, v));
  return out;
}

double abra_residual(const Space& s, const std::vector<AlgVec>& V) {
  const Model& m = s.model;
  std::vector<AlgVec> JV;
  for (const AlgVec& v : V) JV.push_back(apply_p(m, s.kahler.J0, v));
  const size_t n = V.size();
  double worst = 0.0;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      worst = std::max(worst, norm(m, bracket(m, V[a], V[b])));
      const AlgVec c = bracket(m, V[a], JV[b]);
      for (size_t l = 0; l < n; ++l) {
        const AlgVec t1 = bracket(m, c, JV[l]);
        const AlgVec t2 = bracket(m, c, V[l]);
        if (a == b && b == l) {
          worst = std::max(worst, norm(m, t1 - 4.0 * V[a]));
          worst = std::max(worst, norm(m, apply_p(m, s.kahler.J0, t2) - 4.0 * V[a]));
        } else {
          worst = std::max(worst, norm(m, t1));
          worst = std::max(worst, norm(m, t2));
        }
      }
    }
  return worst;
}

bool abra_check(const Space& s, const std::vector<AlgVec>& V, double tol) { return abra_residual(s, V) < tol; }

VerifyReport restriction_check(const Space& s, const AbelianSubspace& sub, const OddMap& eta,
                               const SampleOptions& o) {
  VerifyReport r;
  r.name = "restriction " + eta.name;
  r.samples = o.samples;
  r.seed = o.seed;
  const std::vector<AlgVec> V = subspace_vectors(s, sub);
  const double spread = std::max(1.0, sub.basis.cwiseAbs().rowwise().sum().maxCoeff());
  const double hi = std::min(2.0, std::isfinite(eta.radius) ? 0.9 * eta.radius / spread : 2.0 / spread);
  std::vector<double> res(size_t(o.samples), 0.0);
  parallel_for(o.samples, [&](int n) {
    Rng rng = sample_rng(o.seed, std::uint64_t(n));
    std::uniform_real_distribution<double> u(-hi, hi);
    AlgVec X = s.model.zero(Home::p), Y = s.model.zero(Home::p);
    for (size_t m = 0; m < V.size(); ++m) {
      const double x = u(rng);
      X.coeffs += x * V[m].coeffs;
      Y.coeffs += eta(x) * V[m].coeffs;
    }
    const AlgVec W = odd_calculus(s, X, eta);
    res[size_t(n)] = (W.coeffs - Y.coeffs).norm() / std::max(1.0, Y.coeffs.norm());
  });
  double worst = 0.0;
  for (double v : res) worst = std::max(worst, v);
  r.add("Omega_eta restricts to the subspace", worst, o.tol);
  return r;
}

GridSummary rank2_grid(const Space& s, const std::vector<OddMap>& etas, const SampleOptions& o) {
  if (s.roots.rank != 2) throw Error(ErrorCode::RankMismatch, "the subspace grid needs a rank-2 space");
  const double vals[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  std::vector<Eigen::Vector2d> vs;
  for (double a : vals)
    for (double b : vals)
      if (a != 0.0 || b != 0.0) vs.emplace_back(a, b);
  std::vector<Mat> inputs;
  for (const auto& v : vs) inputs.push_back(v.transpose());
  for (const auto& v : vs)
    for (const auto& w : vs)
      if (std::abs(v(0) * w(1) - v(1) * w(0)) > 1e-12) {
        Mat M(2, 2);
        M << v.transpose(), w.transpose();
        inputs.push_back(M);
      }

  GridSummary g;
  g.cells.resize(inputs.size());
  for (size_t i = 0; i < inputs.size(); ++i) {
    GridCell& c = g.cells[i];
    c.sub = canonical_basis(inputs[i]);
    const std::vector<AlgVec> V = subspace_vectors(s, c.sub);
    c.clts = has_clts(c.sub);
    c.lts = verify_lts(s, complexified(s, V));
    c.abra = abra_check(s, V);
    for (const OddMap& eta : etas) {
      SampleOptions so = o;
      so.tol = 1e-9;
      c.restriction.push_back(restriction_check(s, c.sub, eta, so).pass());
    }
    if (c.clts != c.lts || c.clts != c.abra) ++g.route_disagreements;
    for (bool pass : c.restriction)
      if (pass != c.clts) ++g.restriction_disagreements;
    if (c.clts && c.sub.dim() == 1) {
      const Vec d = c.sub.basis.row(0).transpose();
      bool seen = false;
      for (const Vec& e : g.clts_lines) seen = seen || (e - d).norm() < 1e-12;
      if (!seen) g.clts_lines.push_back(d);
    }
  }
  return g;
}

}  // namespace hssnt
